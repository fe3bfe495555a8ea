"""Univariate polynomials over GF(q), coefficients as GF(q) symbols, ascending."""

from __future__ import annotations

from bchlab.errors import DivisionByZero, FieldMismatch
from bchlab.field import ExtensionField, FieldElement, GFq


class UnivariatePoly:
    __slots__ = ("gf", "coeffs")

    def __init__(self, gf: GFq, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.gf = gf
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, gf: GFq, k: int, c: int = 1) -> "UnivariatePoly":
        return cls(gf, [0] * k + [c])

    @classmethod
    def x_n_minus(cls, gf: GFq, n: int, lam: int) -> "UnivariatePoly":
        """x^n - lam for lam in {1, -1}."""
        const = gf.neg[1] if lam == 1 else 1
        return cls(gf, [const] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def _same(self, other):
        if self.gf != other.gf:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._same(other)
        a, b = self.coeffs, other.coeffs
        L = max(len(a), len(b))
        add = self.gf.add
        return UnivariatePoly(self.gf, [add[a[i] if i < len(a) else 0][b[i] if i < len(b) else 0] for i in range(L)])

    def __neg__(self):
        return UnivariatePoly(self.gf, [self.gf.neg[c] for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UnivariatePoly(self.gf, [])
        add, mul = self.gf.add, self.gf.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][row[y]]
        return UnivariatePoly(self.gf, out)

    def scale(self, c: int) -> "UnivariatePoly":
        row = self.gf.mul[c]
        return UnivariatePoly(self.gf, [row[x] for x in self.coeffs])

    def __divmod__(self, other):
        self._same(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        gf = self.gf
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = gf.inv[other.lead]
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = gf.mul[rem[k + d]][inv_lead]
            if c:
                quot[k] = c
                for i, y in enumerate(other.coeffs):
                    rem[k + i] = gf.sub(rem[k + i], gf.mul[c][y])
        return UnivariatePoly(gf, quot), UnivariatePoly(gf, rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UnivariatePoly":
        if self.is_zero():
            raise DivisionByZero("zero polynomial has no monic form")
        return self.scale(self.gf.inv[self.lead])

    def reciprocal(self) -> "UnivariatePoly":
        """x^deg * f(1/x)."""
        return UnivariatePoly(self.gf, reversed(self.coeffs))

    def evaluate(self, field: ExtensionField, x: FieldElement) -> FieldElement:
        acc = field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + field.from_symbol(c)
        return acc

    def vector(self, n: int) -> list[int]:
        """Coefficient vector of length n (the polynomial must have degree < n)."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, UnivariatePoly) and self.gf == other.gf and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms)
