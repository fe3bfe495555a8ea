"""Closed-form parameters for BCH codes of length n = (q^m - 1)/2.

Every function here is pure integer arithmetic (no floats: ceilings and
floors go through integer division) and refuses parameters outside the range
on which the formula is known to hold.  The digit-counting functions at the
bottom are independent oracles for the dimension sums: they count q-adic
digit strings directly and share nothing with the coset machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from bchlab.analysis import WeightEnumerator
from bchlab.claims import ParamClaim
from bchlab.errors import ConditionViolated, DivisibilityViolation, OutOfRange, ParityMismatch


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


def _odd_prime_power(q: int):
    if q < 3 or q % 2 == 0:
        raise OutOfRange(f"q must be an odd prime power, got {q}")


def _n(q: int, m: int) -> int:
    return (q**m - 1) // 2


def designed_from_tilde(t: int) -> int:
    """ceil((t + 1) / 2): the negacyclic designed distance covering 1 .. t."""
    return _cdiv(t + 1, 2)


# --- small designed distances -------------------------------------------------

def small_delta_cap(q: int, m: int) -> int:
    return q ** (m // 2) + 1 if m % 2 == 0 else (q ** ((m + 1) // 2) + 1) // 2


def dim_small_delta(q: int, m: int, delta: int) -> tuple[int, int]:
    """(k, d lower bound) of the negacyclic code C(n, -1, delta, 0) for small delta."""
    _odd_prime_power(q)
    if m < 1:
        raise OutOfRange("m must be positive")
    cap = small_delta_cap(q, m)
    if not 2 <= delta <= cap:
        raise OutOfRange(f"delta must lie in [2, {cap}] for q={q}, m={m}")
    k = _n(q, m) - m * _cdiv((2 * delta - 3) * (q - 1), 2 * q)
    d = delta + 1 if (delta - (q + 1) // 2) % q == 0 else delta
    return k, d


# --- constant-digit designed distances -----------------------------------------

def _check_constant(q, m, a):
    _odd_prime_power(q)
    if q <= 3 or m <= 2:
        raise OutOfRange("requires q > 3 and m > 2")
    if not (1 <= a and 2 * a < q - 1):
        raise OutOfRange(f"a must satisfy 1 <= a < (q-1)/2, got {a}")


def delta_constant_digits(q: int, m: int, a: int) -> int:
    _check_constant(q, m, a)
    return designed_from_tilde(a * (q**m - 1) // (q - 1))


def dim_constant_digits(q: int, m: int, a: int) -> int:
    """k for delta = ceil((a(q^m-1)/(q-1) + 1)/2): every digit of a survivor is >= a."""
    _check_constant(q, m, a)
    odd, even = _cdiv(q - a - 1, 2), (q - a + 1) // 2
    return sum(odd ** (2 * j + 1) * even ** (m - 2 * j - 1) * comb(m, 2 * j + 1) for j in range((m - 1) // 2 + 1))


def delta_constant_digits_shifted(q: int, m: int, a: int) -> int:
    _check_constant(q, m, a)
    return designed_from_tilde(a * q ** (m - 1) - 1)


def dim_constant_digits_shifted(q: int, m: int, a: int) -> int:
    """k for delta = ceil((a q^(m-1) - 1 + 1)/2); adds one orbit when a is even."""
    return dim_constant_digits(q, m, a) + (m if a % 2 == 0 else 0)


# --- alternating-digit designed distances ----------------------------------------

def _check_alternating(q, m, a, b):
    _odd_prime_power(q)
    if m % 2 or m <= 2:
        raise ParityMismatch(f"requires even m > 2, got m={m}")
    if a < 0 or b < 0 or not 1 <= a + b <= q - 1:
        raise OutOfRange(f"requires a, b >= 0 and 1 <= a+b <= q-1, got a={a}, b={b}")
    if _cdiv(q - a - 2, 2) < 1:
        raise OutOfRange(f"requires ceil((q-a-2)/2) >= 1, got a={a}")


def delta_alternating_digits(q: int, m: int, a: int, b: int) -> int:
    _check_alternating(q, m, a, b)
    N = q**m - 1
    return designed_from_tilde(a * N // (q - 1) + b * N // (q * q - 1))


def delta_alternating_digits_shifted(q: int, m: int, a: int, b: int) -> int:
    _check_alternating(q, m, a, b)
    if b < 1:
        raise OutOfRange("requires b >= 1")
    return designed_from_tilde(a * (q ** (m - 1) + q ** (m - 2)) + b * q ** (m - 2) - 1)


def _alternating_sum(q, m, a, b):
    """Sum over t = number of positions u with s_u = a, and j = odd digits next to them."""
    lo, hi = (q - a - b) // 2, _cdiv(q - a - b, 2)
    c_odd, c_even = _cdiv(q - a - 2, 2), (q - a) // 2
    half = m // 2

    def phi(t, j):
        r = m - 2 * t
        if a % 2:
            want_even = (t % 2) != (j % 2)
        else:
            want_even = j % 2 == 1
        if want_even:
            return sum(comb(r, 2 * i) * c_odd ** (2 * i) * c_even ** (r - 2 * i) for i in range(half - t + 1))
        return sum(comb(r, 2 * i + 1) * c_odd ** (2 * i + 1) * c_even ** (r - 2 * i - 1) for i in range(half - t))

    total = 0
    for t in range(half + 1):
        arrangements = m * comb(m - t, t) // (m - t)
        inner = sum(comb(t, j) * lo**j * hi ** (t - j) * phi(t, j) for j in range(t + 1))
        total += arrangements * inner
    return total


def dim_alternating_digits(q: int, m: int, a: int, b: int) -> int:
    """k for delta = ceil((a(q^m-1)/(q-1) + b(q^m-1)/(q^2-1) + 1)/2), m even."""
    _check_alternating(q, m, a, b)
    return _alternating_sum(q, m, a, b)


def dim_alternating_digits_shifted(q: int, m: int, a: int, b: int) -> int:
    """k for delta = ceil((a(q^(m-1)+q^(m-2)) + b q^(m-2) - 1 + 1)/2); adds an orbit for even b."""
    _check_alternating(q, m, a, b)
    if b < 1:
        raise OutOfRange("requires b >= 1")  # at b = 0 no extra orbit appears
    return _alternating_sum(q, m, a, b) + (m if b % 2 == 0 else 0)


def dim_zero_alternating(q: int, m: int, b: int) -> int:
    """k for delta = ceil((b(q^m-1)/(q^2-1) + 1)/2): the alternating family at a = 0."""
    if not 1 <= b <= q - 1:
        raise OutOfRange(f"b must lie in [1, {q - 1}]")
    return dim_alternating_digits(q, m, 0, b)


def delta_zero_alternating(q: int, m: int, b: int) -> int:
    if not 1 <= b <= q - 1:
        raise OutOfRange(f"b must lie in [1, {q - 1}]")
    return delta_alternating_digits(q, m, 0, b)


# --- largest odd coset leaders modulo 2n ------------------------------------------

# (epsilon, zeta) offsets keyed by index i, one table per residue of m mod 3
_ODD_LEADER_OFFSETS = {
    2: {2: (0, -1), 3: (0, 1), **{i: (1, i - 6) for i in range(4, 8)}},
    0: {2: (-1, -1), 3: (0, -1), 4: (0, 0), 5: (0, 1), **{i: (1, i - 8) for i in range(6, 11)}},
    1: {2: (-1, 0), **{i: (0, i - 4) for i in range(3, 7)}},
}
_ODD_LEADER_MIN_M = {2: 8, 0: 9, 1: 7}


def _family_base(m):
    """(x, y) so that delta_i' = q^m - q^(m-1) - q^(x+eps) - q^(y+zeta) - 1."""
    r = m % 3
    if r == 2:
        return (2 * m - 1) // 3, (m + 1) // 3
    if r == 0:
        return 2 * m // 3, m // 3
    return (2 * m + 1) // 3, (m - 1) // 3


def odd_leader_family(q: int, m: int, i: int) -> tuple[int, int]:
    """(delta_i', |C|) from the mod-3 families of the i-th largest odd leader."""
    _odd_prime_power(q)
    r = m % 3
    if m < _ODD_LEADER_MIN_M[r]:
        raise OutOfRange(f"family for m = {r} (mod 3) needs m >= {_ODD_LEADER_MIN_M[r]}")
    table = _ODD_LEADER_OFFSETS[r]
    if i not in table:
        raise OutOfRange(f"i must lie in [{min(table)}, {max(table)}] for m = {r} (mod 3)")
    eps, zeta = table[i]
    x, y = _family_base(m)
    value = q**m - q ** (m - 1) - q ** (x + eps) - q ** (y + zeta) - 1
    size = m // 3 if (i == 2 and r == 0) else m
    return value, size


def top_odd_leader(q: int, m: int, i: int) -> tuple[int, int]:
    """(delta_i', |C|) for i in {1, 2, 3}, valid for every m (i = 3 needs q^m >= 25)."""
    _odd_prime_power(q)
    if m < 1:
        raise OutOfRange("m must be positive")
    Q = q**m - q ** (m - 1)
    if i == 1:
        return Q - 1, m
    if i == 2:
        return Q - q ** ((2 * m - 1) // 3) - q ** ((m - 1) // 3) - 1, (m // 3 if m % 3 == 0 else m)
    if i == 3:
        if q**m < 25:
            raise OutOfRange("third largest odd leader formula needs q^m >= 25")
        if (m + 1) % 3:
            return Q - q ** _cdiv(2 * m - 1, 3) - q ** ((m - 1) // 3) - 1, m
        return Q - q ** ((2 * m - 1) // 3) - q ** ((m + 1) // 3) - 1, m
    raise OutOfRange("i must be 1, 2 or 3; use odd_leader_family for larger i")


def odd_leader(q: int, m: int, i: int) -> tuple[int, int]:
    """The i-th largest odd coset leader modulo q^m - 1, with its orbit size."""
    if i <= 3:
        return top_odd_leader(q, m, i)
    return odd_leader_family(q, m, i)


def dim_top_odd_leaders(q: int, m: int, i: int) -> int:
    """k of C(n, -1, (delta_i' + 1)/2, 0): the i largest odd orbits survive."""
    _odd_prime_power(q)
    r = m % 3
    if m < _ODD_LEADER_MIN_M[r]:
        raise OutOfRange(f"requires m >= {_ODD_LEADER_MIN_M[r]} for m = {r} (mod 3)")
    lo, hi = {2: (1, 7), 0: (2, 10), 1: (2, 6)}[r]
    if not lo <= i <= hi:
        raise OutOfRange(f"i must lie in [{lo}, {hi}] for m = {r} (mod 3)")
    # one orbit of size m/3 when 3 | m
    return i * m - (2 * m // 3 if r == 0 else 0)


# --- largest coset leaders modulo n --------------------------------------------------

@dataclass(frozen=True)
class LeaderPair:
    delta1: int
    size1: int
    delta2: int
    size2: int


def top_leaders(q: int, m: int) -> LeaderPair:
    """Largest and second-largest coset leaders modulo n with their orbit sizes."""
    _odd_prime_power(q)
    if m < 2:
        raise OutOfRange("requires m >= 2")
    base = q**m - 1 - q ** (m - 1)
    d1 = (base - q ** ((m - 1) // 2)) // 2
    d2 = (base - q ** ((m + 1) // 2)) // 2
    return LeaderPair(d1, m if m % 2 else m // 2, d2, m)


# --- extended-code weight tables ---------------------------------------------------------

@dataclass(frozen=True)
class WeightTable:
    enumerator: WeightEnumerator
    claim: ParamClaim  # extended code
    dual_claim: ParamClaim | None  # dual of the unextended code
    delta: int  # designed distance of the realising code C(n, 1, delta, 1)
    rows: tuple  # (weight, frequency) as listed, before merging equal weights


def _table_rows(q, m, which):
    Q = q**m
    if which == "T1":
        h = q ** (m // 2)
        return [
            ((Q - q ** (m - 1) - q ** (m // 2 - 1) + 1) // 2, (q - 1) * (h - 1)),
            ((q - 1) * (q ** (m - 1) + q ** (m // 2 - 1)) // 2, h - 1),
            ((Q + 1) // 2, q - 1),
        ]
    if which == "T2":
        s = q ** ((m - 1) // 2)
        return [
            ((Q - q ** (m - 1) - s + 1) // 2, (q - 1) * (Q - 1) // 2),
            ((Q - q ** (m - 1)) // 2, Q - 1),
            ((Q - q ** (m - 1) + s + 1) // 2, (q - 1) * (Q - 1) // 2),
            ((Q + 1) // 2, q - 1),
        ]
    if which == "T3":
        s = q ** ((m - 1) // 2)
        u = q ** ((m + 1) // 2)
        v = q ** ((m + 3) // 2)
        p1 = q ** (m - 1)
        return [
            ((Q - p1 - u + 1) // 2, (Q - 1) * (p1 - 1) // (2 * (q + 1))),
            ((q - 1) * (p1 - s) // 2, (Q - 1) * (p1 + s) // 2),
            ((Q - p1 - s + 1) // 2, (Q - 1) * (q ** (m + 2) - Q - p1 - v + s + q * q) // (2 * (q + 1))),
            ((Q - p1) // 2, (Q - 1) * (Q - p1 + 1)),
            ((Q - p1 + s + 1) // 2, (Q - 1) * (q ** (m + 2) - Q - p1 + v - s + q * q) // (2 * (q + 1))),
            ((q - 1) * (p1 + s) // 2, (Q - 1) * (p1 - s) // 2),
            ((Q - p1 + u + 1) // 2, (Q - 1) * (p1 - 1) // (2 * (q + 1))),
            ((Q + 1) // 2, q - 1),
        ]
    if which == "T4":
        h = q ** (m // 2)
        hm = q ** ((m - 2) // 2)
        hp = q ** ((m + 2) // 2)
        p1 = q ** (m - 1)
        return [
            ((Q - p1 - h + 1) // 2, _exact((Q - 1) * (hp + hm - 2), 2 * (q + 1))),
            ((q - 1) * (p1 - hm) // 2, _exact((Q - 1) * (hp + q), 2 * (q + 1))),
            ((Q - p1 - hm + 1) // 2, _exact((h - 1) * (q ** (m + 1) - 2 * Q + q), 2)),
            ((Q - p1) // 2, (Q - 1) * hm),
            ((Q - p1 + hm + 1) // 2, _exact((Q - 1) * (hp + q) * (q - 1), 2 * (q + 1))),
            ((q - 1) * (p1 + hm) // 2, _exact((hp - q) * (Q - 2 * p1 + 1), 2 * (q - 1))),
            ((Q - p1 + h + 1) // 2, _exact((Q - 1) * (h - hm), 2)),
            ((q - 1) * (p1 + h) // 2, _exact((Q - 1) * (hm - 1), q * q - 1)),
            ((Q + 1) // 2, q - 1),
        ]
    raise OutOfRange(f"unknown table {which!r}")


def _exact(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return num // den


_TABLE_PARITY = {"T1": 0, "T2": 1, "T3": 1, "T4": 0}


def extended_weight_table(q: int, m: int, which: str) -> WeightTable:
    """Closed-form weight distribution of the extended code of C(n, 1, delta, 1).

    T1/T2 hold for delta_2 + 1 <= delta <= delta_1 (m even / odd); T3/T4 for
    delta = delta_2 (m odd / even).  Rows with equal weights are merged.
    """
    _odd_prime_power(q)
    which = which.upper()
    if which not in _TABLE_PARITY:
        raise OutOfRange(f"unknown table {which!r}")
    if m < 2 or m % 2 != _TABLE_PARITY[which]:
        raise ParityMismatch(f"table {which} needs {'odd' if _TABLE_PARITY[which] else 'even'} m, got {m}")
    if which == "T2" and m < 3:
        raise OutOfRange("requires m >= 3")
    if which == "T3" and m < 3:
        raise OutOfRange("requires m >= 3")
    if which == "T4" and (q, m) == (3, 2):
        raise OutOfRange("(q, m) = (3, 2) is excluded: delta_2 = 1 gives no code")
    n = _n(q, m)
    lp = top_leaders(q, m)
    rows = _table_rows(q, m, which)
    counts = {0: 1}
    for w, c in rows:
        if c < 0:
            raise ArithmeticError(f"negative frequency {c} at weight {w}")
        counts[w] = counts.get(w, 0) + c
    enum = WeightEnumerator(n + 1, q, counts)
    tag = {"T1": "table1", "T2": "table2", "T3": "table3", "T4": "table4"}[which]
    if which in ("T1", "T2"):
        k = (m // 2 if which == "T1" else m) + 1
        d = lp.delta1 + 1
        delta = lp.delta1
    else:
        k = (2 * m if which == "T3" else 3 * m // 2) + 1
        d = lp.delta2 + 1
        delta = lp.delta2
    claim = ParamClaim(n + 1, k, d, d, tag, weights=dict(enum.counts))
    dk = n - k
    if which == "T1":
        dd = 3 if (q, m) == (3, 2) else 2
        dual = ParamClaim(n, dk, dd, dd, tag + "-dual")
    elif which == "T2":
        dual = ParamClaim(n, dk, 3, 4 if q == 3 else 3, tag + "-dual")
    elif which == "T3":
        hi = 6 if q == 3 else (5 if q <= 9 else 4)
        dual = ParamClaim(n, dk, 3, min(hi, n), tag + "-dual")
    else:
        dual = ParamClaim(n, dk, 2, 4, tag + "-dual")
    return WeightTable(enum, claim, dual, delta, tuple(rows))


# --- negacyclic codes with offset b --------------------------------------------------------

@dataclass(frozen=True)
class ShiftedDim:
    k: int
    same_as: tuple[int, int]  # (delta', b') of the equal code with offset 0


def shifted_negacyclic_dim(q: int, m: int, delta: int, b: int) -> ShiftedDim:
    """k of C(n, -1, delta, b) when the offset b is absorbed: C(n,-1,delta,b) = C(n,-1,b+delta,0)."""
    _odd_prime_power(q)
    if m < 2:
        raise OutOfRange("requires m >= 2")
    if delta < 2 or b < 0:
        raise OutOfRange(f"requires delta >= 2 and b >= 0, got delta={delta}, b={b}")
    top = 1 + 2 * (b + delta - 2)
    cap = q ** ((m + 1) // 2) - 1 if m % 2 else 2 * q ** (m // 2) - 1
    if top > cap:
        raise OutOfRange(f"1 + 2(b + delta - 2) = {top} exceeds {cap}")
    if b > 0 and 1 + 2 * b > (b + delta - 2) // q:
        raise ConditionViolated(f"1 + 2b = {1 + 2 * b} > floor((b+delta-2)/q) = {(b + delta - 2) // q}")
    k = _n(q, m) - m * _cdiv((2 * delta + 2 * b - 3) * (q - 1), 2 * q)
    return ShiftedDim(k, (b + delta, 0))


@dataclass(frozen=True)
class LowWeightBounds:
    d_lower: int
    d_upper: int
    delta: int
    exact_delta: bool  # False when (k*delta_a - 1)/2 or k*delta_a/2 is fractional


def low_weight_bounds(q: int, n: int, k: int, delta_a: int) -> LowWeightBounds:
    """Two-sided distance window for C(n, -1, delta, 1) from an explicit codeword of weight <= d_upper.

    delta = (k delta_a - 1)/2 for odd k and k delta_a / 2 for even k; a
    fractional value is rounded up (the code realised is the next integer one).
    """
    _odd_prime_power(q)
    if n % (q - 1):
        raise DivisibilityViolation(f"q - 1 = {q - 1} does not divide n = {n}")
    if delta_a < 1 or (n // (q - 1)) % delta_a:
        raise DivisibilityViolation(f"delta_a = {delta_a} does not divide n/(q-1) = {n // (q - 1)}")
    if not 1 <= k <= q - 1:
        raise OutOfRange(f"k must lie in [1, {q - 1}]")
    if k % 2:
        num, upper = k * delta_a - 1, (k + 1) * delta_a // 2
    else:
        num, upper = k * delta_a, (k // 2 + 1) * delta_a
    delta = _cdiv(num, 2)
    return LowWeightBounds(delta, upper, delta, num % 2 == 0)


def dually_bch_range(q: int, m: int, delta: int) -> bool:
    """Whether C(n, 1, delta, 2) is dually-BCH: delta_1 - 1 < delta <= n - 1."""
    _odd_prime_power(q)
    if m < 2:
        raise OutOfRange("requires m >= 2")
    n = _n(q, m)
    if not 2 <= delta <= n - 1:
        raise OutOfRange(f"delta must lie in [2, {n - 1}]")
    return top_leaders(q, m).delta1 - 1 < delta <= n - 1


def two_orbit_claims(q: int, m: int) -> tuple[ParamClaim, ParamClaim]:
    """[n, 2m, >= ((q-2)q^(m-1)-1)/2] for the code with check polynomial M_1 M_{delta_1'}, and its dual."""
    _odd_prime_power(q)
    if m < 3:
        raise OutOfRange("requires m >= 3")
    n = _n(q, m)
    return (ParamClaim(n, 2 * m, ((q - 2) * q ** (m - 1) - 1) // 2, n, "thm22"),
            ParamClaim(n, n - 2 * m, 3, 5, "thm22-dual"))


# --- independent digit-counting oracles ------------------------------------------------------

def count_constant_digits(q: int, m: int, a: int) -> int:
    """# odd s in Z_{q^m-1} whose q-adic digits all lie in [a, q-1], via parity DP."""
    even, odd = 1, 0
    n_odd = sum(1 for d in range(a, q) if d % 2)
    n_even = (q - a) - n_odd
    for _ in range(m):
        even, odd = even * n_even + odd * n_odd, even * n_odd + odd * n_even
    return odd  # all-(q-1) string is q^m - 1 = 0 and has even parity, so never counted


def count_alternating_digits(q: int, m: int, a: int, b: int) -> int:
    """# odd s in Z_{q^m-1} with, cyclically, s_u = a => s_{u-1} >= a+b and s_u > a => s_{u-1} >= a.

    Transfer matrix on digits with a sign for odd digits: the odd-parity count is
    (tr M_+^m - tr M_-^m) / 2.
    """
    digits = list(range(q))

    def allowed(x, y):  # y = s_{u-1} follows x = s_u
        if x < a:
            return False
        return y >= (a + b if x == a else a)

    def trace_power(sign):
        M = [[(sign if y % 2 else 1) if allowed(x, y) else 0 for y in digits] for x in digits]
        P = [[int(i == j) for j in digits] for i in digits]
        for _ in range(m):
            P = [[sum(P[i][l] * M[l][j] for l in digits) for j in digits] for i in digits]
        return sum(P[i][i] for i in digits)

    return (trace_power(1) - trace_power(-1)) // 2


# --- registry used by the command line --------------------------------------------------------

@dataclass(frozen=True)
class Formula:
    id: str
    func: Callable
    params: tuple[str, ...]
    summary: str


FORMULAS: dict[str, Formula] = {
    f.id: f
    for f in [
        Formula("lemma7", dim_small_delta, ("q", "m", "delta"), "k and d bound of C(n,-1,delta,0) for small delta"),
        Formula("lemma8", dim_constant_digits, ("q", "m", "a"), "k for delta~ = a(q^m-1)/(q-1)"),
        Formula("lemma10", dim_constant_digits_shifted, ("q", "m", "a"), "k for delta~ = a q^(m-1) - 1"),
        Formula("lemma11", dim_alternating_digits, ("q", "m", "a", "b"), "k for delta~ = a(q^m-1)/(q-1) + b(q^m-1)/(q^2-1)"),
        Formula("lemma13", dim_alternating_digits_shifted, ("q", "m", "a", "b"), "k for delta~ = a(q^(m-1)+q^(m-2)) + b q^(m-2) - 1"),
        Formula("lemma14", dim_zero_alternating, ("q", "m", "b"), "k for delta~ = b(q^m-1)/(q^2-1)"),
        Formula("leaders15", top_odd_leader, ("q", "m", "i"), "i-th largest odd leader mod q^m-1, i <= 3"),
        Formula("leaders16", odd_leader_family, ("q", "m", "i"), "i-th largest odd leader, m = 2 mod 3"),
        Formula("leaders18", odd_leader_family, ("q", "m", "i"), "i-th largest odd leader, m = 0 mod 3"),
        Formula("leaders20", odd_leader_family, ("q", "m", "i"), "i-th largest odd leader, m = 1 mod 3"),
        Formula("leaders26", top_leaders, ("q", "m"), "largest two coset leaders mod n"),
        Formula("thm17", dim_top_odd_leaders, ("q", "m", "i"), "k at delta = (delta_i'+1)/2, m = 2 mod 3"),
        Formula("thm19", dim_top_odd_leaders, ("q", "m", "i"), "k at delta = (delta_i'+1)/2, m = 0 mod 3"),
        Formula("thm21", dim_top_odd_leaders, ("q", "m", "i"), "k at delta = (delta_i'+1)/2, m = 1 mod 3"),
        Formula("thm22", two_orbit_claims, ("q", "m"), "parameters of the two-orbit negacyclic code and its dual"),
        Formula("thm23", shifted_negacyclic_dim, ("q", "m", "delta", "b"), "k of C(n,-1,delta,b) with absorbed offset"),
        Formula("thm24", low_weight_bounds, ("q", "n", "k", "delta_a"), "distance window of C(n,-1,delta,1)"),
        Formula("table1", lambda q, m: extended_weight_table(q, m, "T1"), ("q", "m"), "extended weights, m even, delta_2 < delta <= delta_1"),
        Formula("table2", lambda q, m: extended_weight_table(q, m, "T2"), ("q", "m"), "extended weights, m odd, delta_2 < delta <= delta_1"),
        Formula("table3", lambda q, m: extended_weight_table(q, m, "T3"), ("q", "m"), "extended weights, m odd, delta = delta_2"),
        Formula("table4", lambda q, m: extended_weight_table(q, m, "T4"), ("q", "m"), "extended weights, m even, delta = delta_2"),
        Formula("duallybch", dually_bch_range, ("q", "m", "delta"), "C(n,1,delta,2) is dually-BCH"),
    ]
}
