"""Verification suites: every closed form checked against a brute-force oracle.

A suite expands a grid of (q, m) cells into cases.  Each case records what the
closed form predicts, what the oracle found, and a status; cells that cannot
be evaluated are reported as skipped with the reason, never dropped.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from bchlab import formulas as fm
from bchlab import kernels
from bchlab.analysis import (
    is_dually_bch,
    min_distance,
    sphere_packing_check,
    weight_enumerator_exhaustive,
)
from bchlab.codes import (
    CodeSpec,
    bch_code,
    bch_dimension,
    code_length,
    defining_set,
    dual_code,
    low_weight_codeword,
    two_orbit_code,
)
from bchlab.cyclotomic import cache_dir, leader_table
from bchlab.errors import BchLabError, BudgetExceeded, UnknownSuite
from bchlab.field import build_field

PASS, FAIL = "pass", "fail"
SKIP_BUDGET, SKIP_PRE = "skipped-budget", "skipped-precondition"
STATUSES = (PASS, FAIL, SKIP_BUDGET, SKIP_PRE)

ORACLE_FIELD_LIMIT = 1 << 22  # largest q^m for leader-table oracles
CODEWORD_FIELD_LIMIT = 1 << 14  # largest q^m for explicit extension-field codewords


@dataclass(frozen=True)
class Grid:
    q_set: tuple[int, ...] = (3, 5, 7)
    m_max: int | None = None
    budget: int = 1 << 20  # max q^k for one exhaustive enumeration
    work_budget: int = 1 << 32  # max q^k * n for one exhaustive enumeration

    def cells(self, m_min: int = 2):
        for q in sorted(self.q_set):
            m = m_min
            while q**m <= ORACLE_FIELD_LIMIT and (self.m_max is None or m <= self.m_max):
                yield q, m
                m += 1

    def can_enumerate(self, q: int, k: int, n: int) -> bool:
        return q**k <= self.budget and q**k * n <= self.work_budget

    def snapshot(self) -> dict:
        return {
            "qSet": list(sorted(self.q_set)),
            "mMax": self.m_max,
            "budget": self.budget,
            "workBudget": self.work_budget,
            "fieldLimit": ORACLE_FIELD_LIMIT,
        }


@dataclass
class VerificationCase:
    claim_id: str
    params: dict
    expected: Any
    actual: Any
    status: str
    note: str = ""

    def as_dict(self) -> dict:
        out = {
            "claimId": self.claim_id,
            "params": _jsonable(self.params),
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "status": self.status,
        }
        if self.note:
            out["note"] = self.note
        return out

    def sort_key(self):
        return (self.claim_id, tuple((k, _order(v)) for k, v in self.params.items()))


def _order(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):  # numpy scalar
        return x.item()
    return x


@dataclass
class VerificationReport:
    suite: str
    cases: list[VerificationCase]
    config: dict = field(default_factory=dict)
    wall_clock: float = 0.0

    @property
    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for c in self.cases:
            counts[c.status] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.cases)

    def as_dict(self) -> dict:
        # wall-clock is deliberately absent: identical configs give identical bytes
        return {
            "suite": self.suite,
            "config": self.config,
            "cases": [c.as_dict() for c in self.cases],
            "summary": self.summary,
        }


def _case(claim, params, expected, actual, ok=None, note=""):
    if ok is None:
        ok = expected == actual
    return VerificationCase(claim, dict(params), expected, actual, PASS if ok else FAIL, note)


def _skip(claim, params, status, note):
    return VerificationCase(claim, dict(params), None, None, status, note)


def _n(q, m):
    return code_length(q, m)


# --- dimension formulas ------------------------------------------------------------

def _cell_lemma7(q, m, grid):
    out = []
    n = _n(q, m)
    for delta in range(2, min(fm.small_delta_cap(q, m), n) + 1):
        k, _ = fm.dim_small_delta(q, m, delta)
        out.append(_case("lemma7", {"q": q, "m": m, "delta": delta}, k, bch_dimension(q, m, -1, delta, 0)))
    return out


def _cell_lemma8(q, m, grid, shifted=False):
    claim = "lemma10" if shifted else "lemma8"
    p = {"q": q, "m": m}
    if q <= 3 or m <= 2:
        return [_skip(claim, p, SKIP_PRE, "requires q > 3 and m > 2")]
    out = []
    for a in range(1, (q - 1) // 2):
        pa = {**p, "a": a}
        if shifted:
            k = fm.dim_constant_digits_shifted(q, m, a)
            delta = fm.delta_constant_digits_shifted(q, m, a)
        else:
            k = fm.dim_constant_digits(q, m, a)
            delta = fm.delta_constant_digits(q, m, a)
            out.append(_case(claim + "/digits", pa, k, fm.count_constant_digits(q, m, a)))
        out.append(_case(claim, {**pa, "delta": delta}, k, bch_dimension(q, m, -1, delta, 0)))
    return out


def _alternating_pairs(q, m, b_min):
    for a in range(0, q):
        for b in range(b_min, q):
            try:
                fm.dim_alternating_digits(q, m, a, b)
            except BchLabError:
                continue
            yield a, b


def _cell_lemma11(q, m, grid, variant="lemma11"):
    p = {"q": q, "m": m}
    if m % 2 or m <= 2:
        return [_skip(variant, p, SKIP_PRE, "requires even m > 2")]
    out = []
    if variant == "lemma14":
        pairs = [(0, b) for b in range(1, q)]
    else:
        pairs = list(_alternating_pairs(q, m, 1 if variant == "lemma13" else 0))
    for a, b in pairs:
        pa = {**p, "a": a, "b": b}
        if variant == "lemma13":
            k = fm.dim_alternating_digits_shifted(q, m, a, b)
            delta = fm.delta_alternating_digits_shifted(q, m, a, b)
        elif variant == "lemma14":
            k = fm.dim_zero_alternating(q, m, b)
            delta = fm.delta_zero_alternating(q, m, b)
        else:
            k = fm.dim_alternating_digits(q, m, a, b)
            delta = fm.delta_alternating_digits(q, m, a, b)
        if variant != "lemma13":
            out.append(_case(variant + "/digits", pa, k, fm.count_alternating_digits(q, m, a, b)))
        out.append(_case(variant, {**pa, "delta": delta}, k, bch_dimension(q, m, -1, delta, 0)))
    return out


# --- coset leaders -----------------------------------------------------------------------

def _true_odd_leader(q, m, i):
    N = q**m - 1
    table = leader_table(N, q)
    odd = table.odd_leaders()
    if i > len(odd):
        return None
    v = int(odd[-i])
    return [v, table.size_of(v)]


def _cell_leaders15(q, m, grid):
    out = []
    for i in (1, 2, 3):
        p = {"q": q, "m": m, "i": i}
        try:
            expected = list(fm.top_odd_leader(q, m, i))
        except BchLabError as e:
            out.append(_skip("leaders15", p, SKIP_PRE, str(e)))
            continue
        out.append(_case("leaders15", p, expected, _true_odd_leader(q, m, i)))
    return out


_FAMILY = {"leaders16": 2, "leaders18": 0, "leaders20": 1}
_FAMILY_THM = {"thm17": 2, "thm19": 0, "thm21": 1}


def _cell_leader_family(q, m, grid, claim):
    r = _FAMILY[claim]
    p = {"q": q, "m": m}
    if m % 3 != r or m < fm._ODD_LEADER_MIN_M[r]:
        return [_skip(claim, p, SKIP_PRE, f"requires m = {r} (mod 3), m >= {fm._ODD_LEADER_MIN_M[r]}")]
    out = []
    for i in sorted(fm._ODD_LEADER_OFFSETS[r]):
        expected = list(fm.odd_leader_family(q, m, i))
        out.append(_case(claim, {**p, "i": i}, expected, _true_odd_leader(q, m, i)))
    return out


def _cell_leaders26(q, m, grid):
    n = _n(q, m)
    table = leader_table(n, q)
    lp = fm.top_leaders(q, m)
    L = table.leaders
    p = {"q": q, "m": m}
    actual1 = [int(L[-1]), table.size_of(int(L[-1]))]
    actual2 = [int(L[-2]), table.size_of(int(L[-2]))] if len(L) > 1 else None
    return [
        _case("leaders26", {**p, "i": 1}, [lp.delta1, lp.size1], actual1),
        _case("leaders26", {**p, "i": 2}, [lp.delta2, lp.size2], actual2),
    ]


def _cell_leader_dim(q, m, grid, claim):
    r = _FAMILY_THM[claim]
    p = {"q": q, "m": m}
    lo_m = fm._ODD_LEADER_MIN_M[r]
    if m % 3 != r or m < lo_m:
        return [_skip(claim, p, SKIP_PRE, f"requires m = {r} (mod 3), m >= {lo_m}")]
    lo, hi = {2: (1, 7), 0: (2, 10), 1: (2, 6)}[r]
    out = []
    for i in range(lo, hi + 1):
        k = fm.dim_top_odd_leaders(q, m, i)
        v, _ = _true_odd_leader(q, m, i)
        out.append(_case(claim, {**p, "i": i, "delta": (v + 1) // 2}, k, bch_dimension(q, m, -1, (v + 1) // 2, 0)))
    return out


# --- specific codes ----------------------------------------------------------------------

def _cell_thm22(q, m, grid):
    p = {"q": q, "m": m}
    if m < 3:
        return [_skip("thm22", p, SKIP_PRE, "requires m >= 3")]
    claim, dual_claim = fm.two_orbit_claims(q, m)
    n = claim.n
    out = []
    if not grid.can_enumerate(q, 2 * m, n):
        return [_skip("thm22", p, SKIP_BUDGET, f"q^(2m) = {q}^{2 * m} words")]
    model, _, _ = two_orbit_code(build_field(q, m))
    out.append(_case("thm22/k", p, claim.k, model.k))
    d = weight_enumerator_exhaustive(model, grid.budget).min_distance()
    out.append(_case("thm22/d", p, {"min": claim.d_lower}, d, ok=d >= claim.d_lower))
    dual = dual_code(model)
    out.append(_case("thm22/dual-k", p, dual_claim.k, dual.k))
    dd, cert = min_distance(dual, grid.budget)
    out.append(_case("thm22/dual-d", p, {"min": 3, "max": 5}, dd, ok=cert == "exact" and 3 <= dd <= 5))
    # packing arguments excluding d = 7 and d = 6 for the dual
    sp7 = sphere_packing_check(n, n - 2 * m, 7, q) if n >= 7 else None
    sp6 = sphere_packing_check(n, n - 2 * m, 6, q) if n >= 6 else None
    if sp7 is not None:
        out.append(_case("thm22/packing-d7", p, {"infeasible": True},
                         [sp7.ball_lhs, sp7.ball_rhs], ok=not sp7.ball_ok))
    if sp6 is not None:
        out.append(_case("thm22/packing-d6", p, {"infeasible": True},
                         [sp6.even_lhs, sp6.even_rhs], ok=not sp6.even_ok))
    return out


def _union_sizes(table, q, start, stop):
    """|union of C_{1+2i}, i = start..j| for j = start..stop-1, by incremental sweep."""
    seen = set()
    size = 0
    out = []
    for i in range(start, stop):
        l = table.leader_of(1 + 2 * i)
        if l not in seen:
            seen.add(l)
            size += table.size_of(l)
        out.append(size)
    return out


def _cell_thm23(q, m, grid):
    """One case per offset b: how many admissible delta agree on k and on the code itself."""
    p = {"q": q, "m": m}
    n = _n(q, m)
    cap = q ** ((m + 1) // 2) - 1 if m % 2 else 2 * q ** (m // 2) - 1
    half = (cap - 1) // 2  # largest admissible b + delta - 2
    out = []
    table = None
    b = 1
    while q * (1 + 2 * b) <= half:
        lo, hi = max(2, q * (1 + 2 * b) - b + 2), half - b + 2
        b += 1
        if lo > hi:
            continue
        bb = b - 1
        if table is None:
            table = leader_table(2 * n, q)
            prefix = _union_sizes(table, q, 0, half + 1)  # index j -> |T(j + 2, 0)|
        shifted = _union_sizes(table, q, bb, half + 1)  # index j -> |T(j + 2, b)|
        agree, first_bad = 0, None
        for delta in range(lo, hi + 1):
            res = fm.shifted_negacyclic_dim(q, m, delta, bb)
            size_b = shifted[delta - 2]
            size_0 = prefix[bb + delta - 2]
            if res.k == n - size_b and size_b == size_0 and res.same_as == (bb + delta, 0):
                agree += 1
            elif first_bad is None:
                first_bad = f"delta={delta}: formula k={res.k}, oracle k={n - size_b}, absorbed k={n - size_0}"
        out.append(_case("thm23", {**p, "b": bb, "deltaMin": lo, "deltaMax": hi},
                         {"agree": hi - lo + 1}, {"agree": agree}, note=first_bad or ""))
    if not out:
        out.append(_skip("thm23", p, SKIP_PRE, "no (delta, b) satisfies the range and absorption conditions"))
    return out


def _cell_thm24(q, m, grid):
    p = {"q": q, "m": m}
    n = _n(q, m)
    if n % (q - 1):
        return [_skip("thm24", p, SKIP_PRE, "q - 1 does not divide n")]
    if q**m > CODEWORD_FIELD_LIMIT:
        return [_skip("thm24", p, SKIP_BUDGET, "field too large for codeword construction")]
    F = build_field(q, m)
    out = []
    quotient = n // (q - 1)
    for delta_a in [d for d in range(1, quotient + 1) if quotient % d == 0]:
        for k in range(1, q):
            pc = {**p, "k": k, "delta_a": delta_a}
            bounds = fm.low_weight_bounds(q, n, k, delta_a)
            if delta_a % 2 == 1:
                f = low_weight_codeword(F, delta_a, k)
                vanishes = f.vanishes_at(1 + 2 * i for i in range(1, bounds.delta))
                out.append(_case("thm24/codeword", pc, {"maxWeight": bounds.d_upper, "vanishes": True},
                                 [f.weight(), vanishes], ok=vanishes and f.weight() <= bounds.d_upper))
            if not 2 <= bounds.delta <= n:
                out.append(_skip("thm24", pc, SKIP_PRE, f"designed distance {bounds.delta} outside [2, n]"))
                continue
            model = bch_code(q, m, -1, bounds.delta, 1)
            if model.k == 0:
                out.append(_skip("thm24", pc, SKIP_PRE, "zero code"))
                continue
            r = min(model.k, n - model.k)
            if not grid.can_enumerate(q, r, n):
                out.append(_skip("thm24", pc, SKIP_BUDGET, f"min(q^k, q^(n-k)) = {q}^{r} words"))
                continue
            d, _ = min_distance(model, grid.budget)
            out.append(_case("thm24", pc, {"min": bounds.d_lower, "max": bounds.d_upper}, d,
                             ok=bounds.d_lower <= d <= bounds.d_upper))
    return out


# --- weight tables --------------------------------------------------------------------------

_TABLES = {"table1": "T1", "table2": "T2", "table3": "T3", "table4": "T4"}


def _table_deltas(q, m, which, table):
    lp = fm.top_leaders(q, m)
    # every delta in (delta_2, delta_1] gives the same code
    return [lp.delta1] if which in ("T1", "T2") else [lp.delta2]


def _cell_table(q, m, grid, claim):
    which = _TABLES[claim]
    p = {"q": q, "m": m}
    try:
        table = fm.extended_weight_table(q, m, which)
    except BchLabError as e:
        return [_skip(claim, p, SKIP_PRE, str(e))]
    out = []
    n = _n(q, m)
    for delta in _table_deltas(q, m, which, table):
        pc = {**p, "delta": delta}
        if delta < 2:
            out.append(_skip(claim, pc, SKIP_PRE, "designed distance below 2"))
            continue
        k = bch_dimension(q, m, 1, delta, 1)
        if not grid.can_enumerate(q, k, n + 1):
            out.append(_skip(claim, pc, SKIP_BUDGET, f"q^k = {q}^{k} words of length {n + 1}"))
            continue
        model = bch_code(q, m, 1, delta, 1)
        W = weight_enumerator_exhaustive(model, grid.budget, extended=True)
        out.append(_case(claim, pc, table.enumerator.counts, W.counts))
    return out


def _cell_dualparams(q, m, grid):
    out = []
    n = _n(q, m)
    for claim, which in _TABLES.items():
        p = {"q": q, "m": m, "table": claim}
        try:
            table = fm.extended_weight_table(q, m, which)
        except BchLabError:
            continue
        dc = table.dual_claim
        if table.delta < 2:
            out.append(_skip("dualparams", p, SKIP_PRE, "designed distance below 2"))
            continue
        k = bch_dimension(q, m, 1, table.delta, 1)
        p = {**p, "delta": table.delta}
        out.append(_case("dualparams/k", p, dc.k, n - k))
        if not grid.can_enumerate(q, min(k, n - k), n):
            out.append(_skip("dualparams/d", p, SKIP_BUDGET, "dual too large to enumerate"))
            continue
        d, _ = min_distance(dual_code(bch_code(q, m, 1, table.delta, 1)), grid.budget)
        out.append(_case("dualparams/d", p, {"min": dc.d_lower, "max": dc.d_upper}, d, ok=dc.contains(d)))
    if not out:
        out.append(_skip("dualparams", {"q": q, "m": m}, SKIP_PRE, "no table applies"))
    return out


DUALLY_BCH_MAX_N = 4096


def _cell_duallybch(q, m, grid):
    n = _n(q, m)
    p = {"q": q, "m": m}
    if n < 3:
        return [_skip("duallybch", p, SKIP_PRE, "n - 1 < 2")]
    if n > DUALLY_BCH_MAX_N:
        return [_skip("duallybch", p, SKIP_BUDGET, f"n = {n} codes to decide")]
    out = []
    for delta in range(2, n):
        expected = fm.dually_bch_range(q, m, delta)
        res = is_dually_bch(bch_code(q, m, 1, delta, 2))
        note = f"witness b={res.witness[0]}, delta'={res.witness[1]}" if res.witness else ""
        out.append(_case("duallybch", {**p, "delta": delta}, expected, res.dually_bch, note=note))
    return out


# --- the worked examples ----------------------------------------------------------------------

# printed values, verbatim
PRINTED_EXAMPLES = [
    ("example/dim", {"q": 5, "m": 3, "delta": 16, "b": 0}, 32),
    ("example/dim", {"q": 7, "m": 3, "delta": 58, "b": 0}, 62),
    ("example/dim", {"q": 5, "m": 4, "delta": 105, "b": 0}, 80),
    ("example/dim", {"q": 5, "m": 4, "delta": 183, "b": 0}, 16),
    ("example/params", {"q": 3, "m": 4, "delta": 5, "b": 1}, [40, 28, 6]),
    ("example/weights", {"q": 3, "m": 3, "which": "delta1"}, {0: 1, 8: 26, 9: 26, 11: 26, 14: 2}),
    ("example/weights", {"q": 5, "m": 3, "which": "delta1"}, {0: 1, 48: 248, 50: 124, 53: 248, 63: 4}),
    ("example/weights", {"q": 3, "m": 4, "which": "delta2"},
     {0: 1, 23: 280, 24: 300, 26: 336, 27: 240, 29: 600, 30: 168, 32: 240, 36: 20, 40: 2}),
    ("example/weights", {"q": 3, "m": 3, "which": "delta2"},
     {0: 1, 5: 26, 6: 156, 8: 624, 9: 494, 11: 780, 12: 78, 13: 26, 14: 2}),
]


def _cell_example(idx, grid):
    claim, p, expected = PRINTED_EXAMPLES[idx]
    q, m = p["q"], p["m"]
    if claim == "example/dim":
        actual = bch_dimension(q, m, -1, p["delta"], p["b"])
    elif claim == "example/params":
        model = bch_code(q, m, -1, p["delta"], p["b"])
        d, cert = min_distance(model, max(grid.budget, q ** min(model.k, model.n - model.k)))
        actual = [model.n, model.k, d]
    else:
        lp = fm.top_leaders(q, m)
        delta = lp.delta1 if p["which"] == "delta1" else lp.delta2
        actual = weight_enumerator_exhaustive(bch_code(q, m, 1, delta, 1), extended=True).counts
    return [_case(claim, p, expected, actual)]


# --- suite table -----------------------------------------------------------------------------------

def _grid_tasks(fn, *extra, m_min=2):
    def tasks(grid):
        return [(fn, (q, m, grid) + extra) for q, m in grid.cells(m_min)]
    return tasks


SUITES: dict[str, Callable[[Grid], list]] = {
    "lemma7": _grid_tasks(_cell_lemma7),
    "lemma8": _grid_tasks(_cell_lemma8),
    "lemma10": _grid_tasks(_cell_lemma8, True),
    "lemma11": _grid_tasks(_cell_lemma11, "lemma11"),
    "lemma13": _grid_tasks(_cell_lemma11, "lemma13"),
    "lemma14": _grid_tasks(_cell_lemma11, "lemma14"),
    "leaders15": _grid_tasks(_cell_leaders15),
    "leaders16": _grid_tasks(_cell_leader_family, "leaders16"),
    "leaders18": _grid_tasks(_cell_leader_family, "leaders18"),
    "leaders20": _grid_tasks(_cell_leader_family, "leaders20"),
    "leaders26": _grid_tasks(_cell_leaders26),
    "thm17": _grid_tasks(_cell_leader_dim, "thm17"),
    "thm19": _grid_tasks(_cell_leader_dim, "thm19"),
    "thm21": _grid_tasks(_cell_leader_dim, "thm21"),
    "thm22": _grid_tasks(_cell_thm22),
    "thm23": _grid_tasks(_cell_thm23),
    "thm24": _grid_tasks(_cell_thm24),
    "table1": _grid_tasks(_cell_table, "table1"),
    "table2": _grid_tasks(_cell_table, "table2"),
    "table3": _grid_tasks(_cell_table, "table3"),
    "table4": _grid_tasks(_cell_table, "table4"),
    "dualparams": _grid_tasks(_cell_dualparams),
    "duallybch": _grid_tasks(_cell_duallybch),
    "paperExamples": lambda grid: [(_cell_example, (i, grid)) for i in range(len(PRINTED_EXAMPLES))],
}


def _run_task(task):
    fn, args = task
    try:
        return fn(*args)
    except BudgetExceeded as e:
        return [_skip(fn.__name__.lstrip("_").replace("cell_", ""), {"args": repr(args[:-1])}, SKIP_BUDGET, str(e))]


def run_suite(suite: str, grid: Grid | None = None, jobs: int = 1,
              cells: list[tuple[int, int]] | None = None) -> VerificationReport:
    """Run one suite over the grid (or over explicit (q, m) cells)."""
    if suite not in SUITES:
        raise UnknownSuite(suite)
    grid = grid or Grid()
    start = time.perf_counter()
    tasks = SUITES[suite](grid)
    if cells is not None:
        wanted = {tuple(c) for c in cells}
        tasks = [t for t in tasks if suite == "paperExamples" or tuple(t[1][:2]) in wanted]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    cases = sorted((c for r in results for c in r), key=VerificationCase.sort_key)
    config = {**grid.snapshot(), "backend": kernels.BACKEND, "cacheDir": str(cache_dir())}
    return VerificationReport(suite, cases, config, time.perf_counter() - start)


def emit_report(report: VerificationReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.as_dict(), indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "claimId", "params", "expected", "actual", "status", "note"])
        for c in report.cases:
            d = c.as_dict()
            w.writerow([report.suite, c.claim_id, json.dumps(d["params"]), json.dumps(d["expected"]),
                        json.dumps(d["actual"]), c.status, c.note])
        return buf.getvalue().encode()
    if fmt == "text":
        lines = []
        for c in report.cases:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            line = f"{c.status.upper():<22} {c.claim_id:<22} {params}"
            if c.status == FAIL:
                line += f"  expected={json.dumps(_jsonable(c.expected))} actual={json.dumps(_jsonable(c.actual))}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        s = report.summary
        lines.append(f"suite {report.suite}: {s['pass']} pass, {s['fail']} fail, "
                     f"{s[SKIP_BUDGET]} skipped-budget, {s[SKIP_PRE]} skipped-precondition "
                     f"in {report.wall_clock:.2f}s")
        lines.append("PASS" if report.ok else "FAIL")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")
