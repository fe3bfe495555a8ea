"""Cyclic and negacyclic BCH codes of length n = (q^m - 1)/2.

With alpha primitive in GF(q^m), the cyclic code uses beta = alpha^2 (order n)
and the negacyclic code uses gamma = alpha (order 2n).  A cyclic defining set
lives in Z_n; a negacyclic one is a set of odd residues in Z_2n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bchlab.claims import ParamClaim
from bchlab.cyclotomic import leader_table
from bchlab.errors import ConjugateRoots, DivisibilityViolation, OutOfRange, SpecMismatch
from bchlab.field import ExtensionField, FieldElement
from bchlab.poly import UnivariatePoly


def code_length(q: int, m: int) -> int:
    return (q**m - 1) // 2


@dataclass(frozen=True)
class CodeSpec:
    n: int
    lam: int
    delta: int
    b: int

    def __post_init__(self):
        if self.lam not in (1, -1):
            raise SpecMismatch(f"lambda must be 1 or -1, got {self.lam}")
        if not 2 <= self.delta <= self.n:
            raise SpecMismatch(f"designed distance {self.delta} outside [2, {self.n}]")

    @property
    def modulus(self) -> int:
        return self.n if self.lam == 1 else 2 * self.n

    def check(self, q: int, m: int):
        if self.n != code_length(q, m):
            raise SpecMismatch(f"n = {self.n} but (q^m - 1)/2 = {code_length(q, m)} for q={q}, m={m}")

    def index_exponents(self) -> list[int]:
        """Residues whose cosets make up the defining set."""
        idx = range(self.b, self.b + self.delta - 1)
        if self.lam == 1:
            return [i % self.n for i in idx]
        return [(1 + 2 * i) % (2 * self.n) for i in idx]


@dataclass(frozen=True)
class DefiningSet:
    modulus: int
    exponents: frozenset
    parity: str  # "all" or "odd"

    def __len__(self):
        return len(self.exponents)

    def __contains__(self, t):
        return t in self.exponents

    def sorted(self) -> list[int]:
        return sorted(self.exponents)


def residues(N: int, parity: str) -> range:
    return range(1, N, 2) if parity == "odd" else range(N)


def _defining_set(q: int, m: int, spec: CodeSpec) -> DefiningSet:
    spec.check(q, m)
    N = spec.modulus
    table = leader_table(N, q)
    exps = table.union(spec.index_exponents())
    return DefiningSet(N, frozenset(int(x) for x in exps), "all" if spec.lam == 1 else "odd")


def defining_set(spec: CodeSpec, field: ExtensionField) -> DefiningSet:
    return _defining_set(field.q, field.m, spec)


def bch_dimension(q: int, m: int, lam: int, delta: int, b: int) -> int:
    """n - |T| by coset counting alone (no field arithmetic)."""
    spec = CodeSpec(code_length(q, m), lam, delta, b)
    spec.check(q, m)
    return spec.n - leader_table(spec.modulus, q).union_size(spec.index_exponents())


def root_of_unity(field: ExtensionField, N: int, exponent: int) -> FieldElement:
    if field.order % N:
        raise SpecMismatch(f"{N} does not divide q^m - 1 = {field.order}")
    return field.elem(exponent * (field.order // N))


def minimal_polynomial(field: ExtensionField, N: int, exponent: int) -> UnivariatePoly:
    """Minimal polynomial over GF(q) of the exponent-th power of a primitive N-th root of unity."""
    gf = field.gfq()
    members = leader_table(N, field.q).members(exponent % N)
    coeffs = [field.one]
    for t in members:
        r = root_of_unity(field, N, int(t))
        # multiply by (x - r)
        nxt = [field.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * r
        coeffs = nxt
    return UnivariatePoly(gf, [field.to_symbol(c) for c in coeffs])


def _product_of_minimal(field, N, leaders):
    g = UnivariatePoly(field.gfq(), [1])
    for leader in sorted(leaders):
        g = g * minimal_polynomial(field, N, leader)
    return g


@dataclass(frozen=True, eq=False)
class LinearCodeModel:
    field: ExtensionField
    n: int
    lam: int
    generator: UnivariatePoly
    defining_set: DefiningSet
    spec: CodeSpec | None = None
    origin: str = "custom"

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def gf(self):
        return self.generator.gf

    def generator_matrix(self) -> np.ndarray:
        """k x n matrix of GF(q) symbols, rows x^i g(x)."""
        G = np.zeros((self.k, self.n), dtype=np.int64)
        if self.k == 0:
            return G
        g = self.generator.vector(self.n)
        d = self.generator.degree
        for i in range(self.k):
            G[i, i : i + d + 1] = g[: d + 1]
        return G

    def encode(self, message) -> list[int]:
        msg = UnivariatePoly(self.gf, message)
        if msg.degree >= self.k:
            raise ValueError(f"message longer than k = {self.k}")
        return (msg * self.generator).vector(self.n)

    def contains(self, word) -> bool:
        """Membership via divisibility by g modulo x^n - lam."""
        w = UnivariatePoly(self.gf, word)
        return (w % self.generator).is_zero()

    def describe(self) -> str:
        return f"{self.origin} [n={self.n}, k={self.k}] over GF({self.q})"


def model_from_defining_set(field: ExtensionField, lam: int, T, origin: str = "custom",
                            spec: CodeSpec | None = None) -> LinearCodeModel:
    """Realise the code whose generator has exactly the roots indexed by T."""
    n = field.order // 2
    N = n if lam == 1 else 2 * n
    parity = "all" if lam == 1 else "odd"
    T = frozenset(int(t) % N for t in T)
    if parity == "odd" and any(t % 2 == 0 for t in T):
        raise SpecMismatch("negacyclic defining sets contain odd residues only")
    table = leader_table(N, field.q)
    if len(table.union(sorted(T))) != len(T):
        raise SpecMismatch("defining set is not a union of cyclotomic cosets")
    gf = field.gfq()
    if 2 * len(T) <= n:
        g = _product_of_minimal(field, N, {table.leader_of(t) for t in T})
    else:
        # high-rate side: divide x^n - lam by the (short) check polynomial instead
        others = {table.leader_of(t) for t in residues(N, parity) if t not in T}
        g = UnivariatePoly.x_n_minus(gf, n, lam) // _product_of_minimal(field, N, others)
    return LinearCodeModel(field, n, lam, g, DefiningSet(N, T, parity), spec, origin)


def generator_polynomial(spec: CodeSpec, field: ExtensionField) -> LinearCodeModel:
    T = defining_set(spec, field)
    origin = f"C(n={spec.n}, lam={spec.lam}, delta={spec.delta}, b={spec.b})"
    return model_from_defining_set(field, spec.lam, T.exponents, origin, spec)


def bch_code(q: int, m: int, lam: int, delta: int, b: int) -> LinearCodeModel:
    from bchlab.field import build_field

    return generator_polynomial(CodeSpec(code_length(q, m), lam, delta, b), build_field(q, m))


def parity_check_polynomial(model: LinearCodeModel) -> UnivariatePoly:
    quo, rem = divmod(UnivariatePoly.x_n_minus(model.gf, model.n, model.lam), model.generator)
    if not rem.is_zero():
        raise DivisibilityViolation("generator does not divide x^n - lambda")
    return quo


def dual_defining_set(model: LinearCodeModel) -> DefiningSet:
    T = model.defining_set
    N = T.modulus
    dual = frozenset((-t) % N for t in residues(N, T.parity) if t not in T.exponents)
    return DefiningSet(N, dual, T.parity)


def dual_code(model: LinearCodeModel) -> LinearCodeModel:
    """C^perp, generated by the monic reciprocal of h (same lambda since lambda = lambda^-1)."""
    h = parity_check_polynomial(model)
    g = h.reciprocal().monic()
    return LinearCodeModel(model.field, model.n, model.lam, g, dual_defining_set(model), None,
                           f"dual of {model.origin}")


def polynomial_root_exponents(field: ExtensionField, poly: UnivariatePoly, N: int, parity: str) -> frozenset:
    """Brute force: residues t (of the given parity) with poly(zeta_N^t) = 0."""
    return frozenset(t for t in residues(N, parity) if poly.evaluate(field, root_of_unity(field, N, t)).is_zero())


def extended_codeword(codeword, gf) -> list[int]:
    s = 0
    for c in codeword:
        s = gf.add[s][c]
    return list(codeword) + [gf.neg[s]]


def trace_codeword(field: ExtensionField, exps, coeffs) -> list[int]:
    """(sum_t Tr(a_t beta^(-l i_t)))_{l < n}, with beta = alpha^2 of order n."""
    exps = list(exps)
    coeffs = list(coeffs)
    if len(exps) != len(coeffs):
        raise ValueError("one coefficient per root exponent")
    n = field.order // 2
    table = leader_table(n, field.q)
    leaders = [table.leader_of(i) for i in exps]
    if len(set(leaders)) != len(leaders):
        raise ConjugateRoots("root exponents must lie in distinct cyclotomic cosets")
    sizes = [table.size_of(i) for i in exps]
    for a, mt in zip(coeffs, sizes):
        if a.exp is not None and (a.exp * (field.q**mt - 1)) % field.order:
            raise OutOfRange(f"coefficient {a} not in GF(q^{mt})")
    word = [0] * n
    for i, a, mt in zip(exps, coeffs, sizes):
        if a.is_zero():
            continue
        for l in range(n):
            x = a * field.elem(-2 * l * i)
            word[l] = field.gfq().add[word[l]][field.to_symbol(field.trace(x, mt))]
    return word


def two_orbit_code(field: ExtensionField):
    """Negacyclic code C' with check polynomial M_1 M_{d1'}; returns (model, claim, dual_claim)."""
    q, m = field.q, field.m
    if m < 3:
        raise OutOfRange("requires m >= 3")
    n = field.order // 2
    N = 2 * n
    table = leader_table(N, q)
    d1p = int(table.odd_leaders()[-1])
    nonzeros = set(table.members(1).tolist()) | set(table.members(d1p).tolist())
    T = [t for t in range(1, N, 2) if t not in nonzeros]
    model = model_from_defining_set(field, -1, T, origin=f"C'(q={q}, m={m})")
    claim = ParamClaim(n, 2 * m, ((q - 2) * q ** (m - 1) - 1) // 2, n, "thm22")
    dual_claim = ParamClaim(n, n - 2 * m, 3, 5, "thm22-dual")
    return model, claim, dual_claim


@dataclass(frozen=True)
class ExtPoly:
    """Sparse polynomial with coefficients in GF(q^m)."""

    field: ExtensionField
    terms: dict  # degree -> nonzero FieldElement

    def weight(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max(self.terms, default=-1)

    def over_base_field(self) -> bool:
        return all(self.field.in_subfield(c) for c in self.terms.values())

    def to_poly(self) -> UnivariatePoly:
        if not self.over_base_field():
            raise OutOfRange("coefficients outside GF(q)")
        coeffs = [0] * (self.degree + 1)
        for d, c in self.terms.items():
            coeffs[d] = self.field.to_symbol(c)
        return UnivariatePoly(self.field.gfq(), coeffs)

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for d, c in self.terms.items():
            acc = acc + c * x**d
        return acc

    def vanishes_at(self, exponents) -> bool:
        """f(alpha^r) = 0 for every r, evaluated in bulk on base-p digit vectors."""
        F = self.field
        r = np.asarray(list(exponents), dtype=np.int64)
        antilog = np.frombuffer(F._antilog, dtype=np.int64)
        powers = F.p ** np.arange(F.D, dtype=np.int64)
        acc = np.zeros((r.size, F.D), dtype=np.int64)
        for d, c in self.terms.items():
            v = antilog[(c.exp + d * r) % F.order]
            acc += (v[:, None] // powers) % F.p
        return bool(not (acc % F.p).any())

    def __mul__(self, other):
        out = {}
        F = self.field
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                out[d1 + d2] = out.get(d1 + d2, F.zero) + c1 * c2
        return ExtPoly(F, {d: c for d, c in out.items() if not c.is_zero()})


def low_weight_codeword(field: ExtensionField, delta_a: int, k: int) -> ExtPoly:
    """f(x) = (x^n+1)/(x^(n/delta_a)+1) * prod_t (x^(n/(delta_a(q-1))) - gamma^(n(2t-1)/(q-1))).

    t runs to (k-1)/2 for odd k and to k/2 for even k; gamma = alpha has order 2n.
    """
    q = field.q
    n = field.order // 2
    if n % (q - 1):
        raise DivisibilityViolation(f"q - 1 = {q - 1} does not divide n = {n}")
    if delta_a < 1 or (n // (q - 1)) % delta_a:
        raise DivisibilityViolation(f"delta_a = {delta_a} does not divide n/(q-1) = {n // (q - 1)}")
    if not 1 <= k <= q - 1:
        raise OutOfRange(f"k must lie in [1, {q - 1}]")
    if delta_a % 2 == 0:
        # y^d + 1 is divisible by y + 1 only for odd d
        raise DivisibilityViolation(f"x^{n // delta_a} + 1 does not divide x^{n} + 1 for even delta_a = {delta_a}")
    F = field
    step = n // delta_a
    terms = {j * step: (F.one if j % 2 == 0 else -F.one) for j in range(delta_a)}
    f = ExtPoly(F, terms)
    s = n // (delta_a * (q - 1))
    top = (k - 1) // 2 if k % 2 else k // 2
    for t in range(1, top + 1):
        c = F.elem(n * (2 * t - 1) // (q - 1))
        f = f * ExtPoly(F, {s: F.one, 0: -c} if s else {0: F.one - c})
    return f
