"""Finite fields GF(q) and GF(q^m) for odd prime powers q.

GF(q^m) is realised as GF(p)[x]/(f) with deg f = e*m and f primitive, so the
class of x is a primitive element alpha.  Elements are stored as discrete logs
(``None`` for zero); addition goes through a Zech logarithm table.  GF(q) is the
subfield {0} U {alpha^(j*(q^m-1)/(q-1))}; its elements are numbered 0..q-1 by
the base-p integer value of their polynomial representation, so for prime q the
symbols are the ordinary residues mod p.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from bchlab import kernels
from bchlab.errors import BudgetExceeded, DivisionByZero, FieldMismatch, OutOfRange

DEFAULT_TABLE_BUDGET = 1 << 22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int = 1

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 3:
            raise OutOfRange(f"p must be an odd prime, got {self.p}")
        if self.e < 1:
            raise OutOfRange(f"exponent must be positive, got {self.e}")

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        if q < 3:
            raise OutOfRange(f"q must be an odd prime power, got {q}")
        fs = prime_factors(q)
        if len(fs) != 1:
            raise OutOfRange(f"q must be an odd prime power, got {q}")
        p = fs[0]
        e = 0
        while q > 1:
            q //= p
            e += 1
        return cls(p, e)


# -- polynomials over GF(p) as ascending coefficient lists (used only here) --

def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - df
            for i in range(df + 1):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return a


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _ppowx(k, f, p):
    """x^k mod f."""
    result = [1]
    base = _pmod([0, 1], f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return result


def _is_primitive(f, p):
    D = len(f) - 1
    if f[0] % p == 0:
        return False
    M = p**D - 1
    if _ppowx(M, f, p) != [1]:
        return False
    return all(_ppowx(M // r, f, p) != [1] for r in prime_factors(M))


def find_primitive_polynomial(p: int, D: int, budget: int = DEFAULT_TABLE_BUDGET) -> tuple[int, ...]:
    """Smallest primitive monic polynomial of degree D over GF(p).

    Candidates are ordered by (c_{D-1}, ..., c_0) read as a base-p integer.
    Returns ascending coefficients (c_0, ..., c_{D-1}, 1).
    """
    if D < 1:
        raise OutOfRange("degree must be at least 1")
    if p**D > budget:
        raise BudgetExceeded(f"p^D = {p**D} exceeds table budget {budget}")
    for v in range(p**D):
        low = [(v // p**i) % p for i in range(D)]
        f = low + [1]
        if _is_primitive(f, p):
            return tuple(f)
    raise AssertionError("no primitive polynomial found")  # unreachable for prime p


class FieldElement:
    """Element of an ExtensionField: ``exp`` is the discrete log, or None for zero."""

    __slots__ = ("field", "exp")

    def __init__(self, field: "ExtensionField", exp: int | None):
        self.field = field
        self.exp = None if exp is None else exp % field.order

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field:
            raise FieldMismatch("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._add(self.exp, other.exp))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.exp))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.exp is None or other.exp is None:
            return FieldElement(self.field, None)
        return FieldElement(self.field, self.exp + other.exp)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def inv(self):
        if self.exp is None:
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, -self.exp)

    def __pow__(self, k: int):
        if self.exp is None:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return FieldElement(self.field, 0 if k == 0 else None)
        return FieldElement(self.field, self.exp * k)

    def is_zero(self) -> bool:
        return self.exp is None

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.exp == other.exp

    def __hash__(self):
        return hash((id(self.field), self.exp))

    def __int__(self):
        return self.field.to_int(self)

    def __repr__(self):
        return "0" if self.exp is None else f"a^{self.exp}"


class GFq:
    """Arithmetic tables for GF(q) on the symbols 0..q-1 (0 is zero, 1 is one)."""

    def __init__(self, p: int, e: int, add, mul, basis, basis_coords):
        self.p = p
        self.e = e
        self.q = p**e
        self.add = add
        self.mul = mul
        self.neg = [row.index(0) for row in add]
        self.inv = [None] + [row.index(1) for row in mul[1:]]
        # coords[s]: coordinates of symbol s over GF(p) in the basis `basis`
        self.basis = basis
        self.coords = basis_coords

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    @classmethod
    def prime(cls, p: int) -> "GFq":
        add = [[(a + b) % p for b in range(p)] for a in range(p)]
        mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        return cls(p, 1, add, mul, [1], [(s,) for s in range(p)])

    def __eq__(self, other):
        return isinstance(other, GFq) and self.q == other.q and self.add == other.add and self.mul == other.mul

    def __hash__(self):
        return hash((self.q, self.p))

    def __repr__(self):
        return f"GF({self.q})"


class ExtensionField:
    """GF(q^m) with log/antilog/Zech tables.  Immutable after construction."""

    def __init__(self, base: PrimePower, m: int, budget: int = DEFAULT_TABLE_BUDGET):
        if m < 1:
            raise OutOfRange("extension degree must be at least 1")
        self.base = base
        self.p = base.p
        self.q = base.q
        self.m = m
        self.D = base.e * m
        self.size = self.q**m
        if self.size > budget:
            raise BudgetExceeded(f"q^m = {self.size} exceeds table budget {budget}")
        self.order = self.size - 1
        self.modulus = find_primitive_polynomial(self.p, self.D, budget)
        p = self.p
        antilog = kernels.antilog_table(p, self.D, self.modulus[:-1])
        log = np.full(self.size, -1, dtype=np.int64)
        log[antilog] = np.arange(self.order, dtype=np.int64)
        # 1 + x: bump the constant digit of the base-p representation
        plus_one = antilog - antilog % p + (antilog % p + 1) % p
        zech = log[plus_one]
        self._antilog = array("q", antilog.tobytes())
        self._log = array("q", log.tobytes())
        self._zech = array("q", zech.tobytes())
        self._half = self.order // 2

        step = self.order // (self.q - 1)
        self.subfield_step = step
        sub = sorted([0] + [self._antilog[j * step] for j in range(self.q - 1)])
        self._sym_of_int = {v: s for s, v in enumerate(sub)}
        self._int_of_sym = sub
        self._gfq = None

    # -- raw exponent arithmetic (None = zero) --

    def _add(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        z = self._zech[(b - a) % self.order]
        return None if z < 0 else (a + z) % self.order

    def _neg(self, a):
        return None if a is None else (a + self._half) % self.order

    # -- element constructors --

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, None)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, 1)

    def elem(self, exp: int | None) -> FieldElement:
        return FieldElement(self, exp)

    def elements(self):
        yield self.zero
        for k in range(self.order):
            yield FieldElement(self, k)

    def from_int(self, v: int) -> FieldElement:
        if not 0 <= v < self.size:
            raise OutOfRange(f"{v} is not a field element representation")
        k = self._log[v]
        return FieldElement(self, None if k < 0 else k)

    def to_int(self, x: FieldElement) -> int:
        return 0 if x.exp is None else self._antilog[x.exp]

    # -- GF(q) subfield --

    def in_subfield(self, x: FieldElement) -> bool:
        return x.exp is None or x.exp % self.subfield_step == 0

    def to_symbol(self, x: FieldElement) -> int:
        if not self.in_subfield(x):
            raise OutOfRange(f"{x} is not in GF({self.q})")
        return self._sym_of_int[self.to_int(x)]

    def from_symbol(self, s: int) -> FieldElement:
        return self.from_int(self._int_of_sym[s])

    def gfq(self) -> GFq:
        """Tables for the designated subfield GF(q), in symbol numbering."""
        if self._gfq is None:
            q = self.q
            els = [self.from_symbol(s) for s in range(q)]
            add = [[self.to_symbol(x + y) for y in els] for x in els]
            mul = [[self.to_symbol(x * y) for y in els] for x in els]
            # basis 1, xi, ..., xi^(e-1) with xi a generator of GF(q)^*
            e = self.base.e
            xi = FieldElement(self, self.subfield_step)
            basis = [xi**j for j in range(e)]
            coords = [None] * q
            for digits in product(range(self.p), repeat=e):
                acc = self.zero
                for d, b in zip(digits, basis):
                    for _ in range(d):
                        acc = acc + b
                coords[self.to_symbol(acc)] = digits
            self._gfq = GFq(self.p, e, add, mul, [self.to_symbol(b) for b in basis], coords)
        return self._gfq

    # -- trace --

    def trace(self, x: FieldElement, r: int | None = None) -> FieldElement:
        """Tr from GF(q^r) down to GF(q); x must lie in GF(q^r), r | m."""
        r = self.m if r is None else r
        if r < 1 or self.m % r:
            raise OutOfRange(f"subfield degree {r} does not divide m = {self.m}")
        if x.field is not self:
            raise FieldMismatch("element from another field")
        if x.exp is not None and (x.exp * (self.q**r - 1)) % self.order:
            raise OutOfRange(f"{x} is not in GF({self.q}^{r})")
        acc = self.zero
        y = x
        for _ in range(r):
            acc = acc + y
            y = y**self.q
        return acc

    def __repr__(self):
        return f"GF({self.q}^{self.m})"


@lru_cache(maxsize=32)
def _build_field_cached(p, e, m, budget):
    return ExtensionField(PrimePower(p, e), m, budget)


def build_field(q, m: int, budget: int = DEFAULT_TABLE_BUDGET) -> ExtensionField:
    """GF(q^m) for an odd prime power q (int or PrimePower); cached per (q, m)."""
    base = q if isinstance(q, PrimePower) else PrimePower.from_q(q)
    return _build_field_cached(base.p, base.e, m, budget)
