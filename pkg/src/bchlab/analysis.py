"""Distance and weight analysis of realised codes.

Weight enumerators come from exhaustive enumeration of the message space
(compiled kernel) or from the MacWilliams transform of the dual's enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from bchlab import kernels
from bchlab.claims import ParamClaim
from bchlab.codes import DefiningSet, LinearCodeModel, dual_code, dual_defining_set
from bchlab.cyclotomic import leader_table
from bchlab.errors import BudgetExceeded, NonIntegerResult, SpecMismatch

__all__ = [
    "ParamClaim",
    "WeightEnumerator",
    "bch_bound",
    "weight_enumerator_exhaustive",
    "weights_of_matrix",
    "weights_via_dual",
    "dual_min_weight",
    "extend_matrix",
    "krawtchouk",
    "macwilliams_transform",
    "min_distance",
    "sphere_packing_check",
    "is_dually_bch",
]

DEFAULT_ENUM_BUDGET = 1 << 24


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    q: int
    counts: dict

    def __post_init__(self):
        object.__setattr__(self, "counts", {int(w): int(c) for w, c in sorted(self.counts.items()) if c})

    @classmethod
    def from_array(cls, n, q, arr):
        return cls(n, q, {w: int(c) for w, c in enumerate(arr) if c})

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def k(self) -> int:
        t, k = self.total, 0
        while t > 1 and t % self.q == 0:
            t //= self.q
            k += 1
        if t != 1:
            raise ValueError("total is not a power of q")
        return k

    def min_distance(self) -> int | None:
        return min((w for w in self.counts if w > 0), default=None)

    def as_list(self) -> list[int]:
        return [self.counts.get(w, 0) for w in range(self.n + 1)]

    def polynomial(self) -> str:
        parts = []
        for w, c in self.counts.items():
            parts.append(str(c) if w == 0 else f"{'' if c == 1 else c}z^{w}")
        return "+".join(parts)

    def __eq__(self, other):
        return isinstance(other, WeightEnumerator) and (self.n, self.q, self.counts) == (other.n, other.q, other.counts)


def _runs(flags) -> int:
    """Longest cyclic run of True in a 1-d boolean array."""
    L = len(flags)
    if L == 0:
        return 0
    if flags.all():
        return L
    start = int(np.argmin(flags))
    best = cur = 0
    for f in np.roll(flags, -start):
        cur = cur + 1 if f else 0
        best = max(best, cur)
    return best


def bch_bound(T: DefiningSet, all_primitive: bool = False) -> int:
    """1 + longest run of consecutive roots in T.

    Cyclic: consecutive residues t mod n.  Negacyclic: consecutive s mod n with
    1 + 2s in T.  With ``all_primitive`` every primitive root of the same order
    is tried (multipliers coprime to the modulus), keeping the best run.
    """
    N = T.modulus
    member = np.zeros(N, dtype=bool)
    member[list(T.exponents)] = True
    if T.parity == "odd":
        n = N // 2
        base = 1 + 2 * np.arange(n)
    else:
        n = N
        base = np.arange(n)
    mults = [a for a in range(1, N) if gcd(a, N) == 1] if all_primitive else [1]
    best = 0
    for a in mults:
        best = max(best, _runs(member[(a * base) % N]))
        if best == n:
            break
    return best + 1


def _expand_gfp(G, gf):
    """K x n symbol matrix -> (K*e) x (n*e) GF(p) digit matrix spanning the same code."""
    G = np.asarray(G, dtype=np.int64)
    K, n = G.shape
    e = gf.e
    coords = np.asarray(gf.coords, dtype=np.uint8)
    out = np.zeros((K * e, n * e), dtype=np.uint8)
    mul = np.asarray(gf.mul, dtype=np.int64)
    for i in range(K):
        for j, b in enumerate(gf.basis):
            out[i * e + j] = coords[mul[b][G[i]]].reshape(-1)
    return out


def weights_of_matrix(G, gf, budget: int = DEFAULT_ENUM_BUDGET, impl=None) -> WeightEnumerator:
    G = np.asarray(G, dtype=np.int64)
    K, n = G.shape
    if gf.q**K > budget:
        raise BudgetExceeded(f"q^k = {gf.q}^{K} exceeds enumeration budget {budget}")
    counts = kernels.weight_distribution(_expand_gfp(G, gf), gf.p, gf.e, impl=impl)
    return WeightEnumerator.from_array(n, gf.q, counts)


def extend_matrix(G, gf):
    """Append the column making every row's coordinate sum zero."""
    G = np.asarray(G, dtype=np.int64)
    col = np.zeros(G.shape[0], dtype=np.int64)
    for i, row in enumerate(G):
        s = 0
        for c in row:
            s = gf.add[s][int(c)]
        col[i] = gf.neg[s]
    return np.hstack([G, col[:, None]])


def weight_enumerator_exhaustive(model: LinearCodeModel, budget: int = DEFAULT_ENUM_BUDGET,
                                 extended: bool = False, impl=None) -> WeightEnumerator:
    if model.q**model.k > budget:
        raise BudgetExceeded(f"q^k = {model.q}^{model.k} exceeds enumeration budget {budget}")
    G = model.generator_matrix()
    if extended:
        G = extend_matrix(G, model.gf) if G.shape[0] else np.zeros((0, model.n + 1), dtype=np.int64)
    if G.shape[0] == 0:
        return WeightEnumerator(G.shape[1], model.q, {0: 1})
    return weights_of_matrix(G, model.gf, budget, impl)


def krawtchouk(n: int, q: int, w: int, i: int) -> int:
    return sum((-1) ** j * (q - 1) ** (w - j) * comb(i, j) * comb(n - i, w - j) for j in range(w + 1))


def krawtchouk_column(n: int, q: int, i: int) -> list[int]:
    """[K_w(i) for w = 0..n] by the three-term recurrence in w."""
    col = [1]
    if n >= 1:
        col.append((q - 1) * n - q * i)
    for w in range(1, n):
        nxt = (w + (q - 1) * (n - w) - q * i) * col[w] - (q - 1) * (n - w + 1) * col[w - 1]
        col.append(nxt // (w + 1))
    return col


def macwilliams_transform(W: WeightEnumerator, n: int | None = None, q: int | None = None) -> WeightEnumerator:
    """Enumerator of the dual code, exact integer arithmetic."""
    n = W.n if n is None else n
    q = W.q if q is None else q
    size = W.total
    sums = [0] * (n + 1)
    for i, c in W.counts.items():
        for w, kw in enumerate(krawtchouk_column(n, q, i)):
            sums[w] += c * kw
    out = {}
    for w, s in enumerate(sums):
        if s % size:
            raise NonIntegerResult(f"B_{w} = {s}/{size} is not an integer")
        if s < 0:
            raise NonIntegerResult(f"B_{w} = {s // size} is negative")
        out[w] = s // size
    return WeightEnumerator(n, q, out)


def dual_min_weight(W: WeightEnumerator) -> int | None:
    """Smallest positive weight of the dual code, without the full transform.

    Steps the Krawtchouk recurrence in w for every weight of W at once and
    stops at the first nonzero dual coefficient; memory is O(len(W.counts)).
    """
    n, q, size = W.n, W.q, W.total
    if n == 0:
        return None
    items = list(W.counts.items())
    prev = [1] * len(items)
    cur = [(q - 1) * n - q * i for i, _ in items]
    for w in range(1, n + 1):
        s = sum(c * k for (_, c), k in zip(items, cur))
        if s % size:
            raise NonIntegerResult(f"B_{w} = {s}/{size} is not an integer")
        if s:
            return w
        nxt = [
            ((w + (q - 1) * (n - w) - q * i) * k - (q - 1) * (n - w + 1) * kp) // (w + 1)
            for (i, _), k, kp in zip(items, cur, prev)
        ]
        prev, cur = cur, nxt
    return None


def weights_via_dual(model: LinearCodeModel, budget: int = DEFAULT_ENUM_BUDGET) -> WeightEnumerator:
    return macwilliams_transform(weight_enumerator_exhaustive(dual_code(model), budget))


def min_distance(model: LinearCodeModel, budget: int = DEFAULT_ENUM_BUDGET) -> tuple[int, str]:
    """(d, certificate) with certificate 'exact' or 'lower-bound-only'.

    Enumerates whichever of the code and its dual is smaller.
    """
    if model.k == 0:
        raise ValueError("the zero code has no minimum distance")
    q, k, r = model.q, model.k, model.n - model.k
    if q**k <= budget and k <= r:
        return weight_enumerator_exhaustive(model, budget).min_distance(), "exact"
    if q**r <= budget:
        return dual_min_weight(weight_enumerator_exhaustive(dual_code(model), budget)), "exact"
    if q**k <= budget:
        return weight_enumerator_exhaustive(model, budget).min_distance(), "exact"
    return bch_bound(model.defining_set), "lower-bound-only"


@dataclass(frozen=True)
class SpherePacking:
    ball_lhs: int
    ball_rhs: int
    even_lhs: int | None
    even_rhs: int | None

    @property
    def ball_ok(self) -> bool:
        return self.ball_lhs <= self.ball_rhs

    @property
    def even_ok(self) -> bool:
        return self.even_lhs is None or self.even_lhs <= self.even_rhs

    @property
    def feasible(self) -> bool:
        return self.ball_ok and self.even_ok


def sphere_packing_check(n: int, k: int, d: int, q: int) -> SpherePacking:
    """Both packing inequalities for an [n, k, d]_q code, exact integers."""
    if not (0 <= k <= n and 1 <= d <= n):
        raise ValueError(f"invalid parameters [{n}, {k}, {d}]")
    ball = sum((q - 1) ** i * comb(n, i) for i in range((d - 1) // 2 + 1))
    even_lhs = even_rhs = None
    if d % 2 == 0:
        even_lhs = sum((q - 1) ** i * comb(n - 1, i) for i in range((d - 2) // 2 + 1))
        # q^(n-k-1) is fractional at k = n; the inequality then fails for any even d
        even_rhs = q ** (n - k - 1) if k < n else 0
    return SpherePacking(ball, q ** (n - k), even_lhs, even_rhs)


@dataclass(frozen=True)
class DuallyBCH:
    dually_bch: bool
    witness: tuple[int, int] | None
    dual_defining_set: DefiningSet

    def __bool__(self):
        return self.dually_bch


def is_dually_bch(model: LinearCodeModel) -> DuallyBCH:
    """Is T^perp = C_b U C_{b+1} U ... U C_{b+delta'-2} for some b and delta' >= 2?

    The witness is the smallest such b with its smallest delta'.
    """
    if model.lam != 1:
        raise SpecMismatch("dually-BCH test applies to cyclic codes")
    Td = dual_defining_set(model)
    return DuallyBCH(*consecutive_union(Td, model.q), Td)


def consecutive_union(T: DefiningSet, q: int):
    """(True, (b, delta')) if T is the coset union over b .. b+delta'-2, else (False, None)."""
    n = T.modulus
    target = len(T)
    if target == 0:
        return False, None
    table = leader_table(n, q)
    inside = np.zeros(n, dtype=bool)
    inside[list(T.exponents)] = True
    for b in range(n):
        if not inside[b]:
            continue
        seen = set()
        covered = 0
        i = b
        for steps in range(n):
            if not inside[i]:
                break
            l = table.leader_of(i)
            if l not in seen:
                seen.add(l)
                covered += table.size_of(l)
            if covered == target:
                return True, (b, steps + 2)
            i = (i + 1) % n
    return False, None
