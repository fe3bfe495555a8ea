"""Compare the compiled kernels against the NumPy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel call per backend and checks the outputs agree.
"""

import argparse
import time

import numpy as np

from bchlab import kernels
from bchlab.analysis import _expand_gfp
from bchlab.codes import bch_code
from bchlab.field import build_field

LEADER_CASES = [(3**8 - 1, 3), (3**10 - 1, 3), (5**6 - 1, 5), (7**5 - 1, 7)]
WEIGHT_CASES = [(3, 4, -1, 13, 1), (3, 4, 1, 20, 1), (5, 3, -1, 40, 1), (7, 2, 1, 16, 1), (9, 2, 1, 30, 1)]
ANTILOG_CASES = [(3, 10), (5, 7), (7, 6)]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def row(label, fn, impls, repeat):
    times, outs = {}, {}
    for name, impl in impls.items():
        times[name], outs[name] = best_of(lambda: fn(impl), repeat)
    ref = outs["python"]
    agree = all(same(o, ref) for o in outs.values())
    cells = "  ".join(f"{times[k] * 1e3:10.2f}" for k in impls)
    speedup = times["python"] / times["cython"] if "cython" in times else float("nan")
    print(f"{label:<34}{cells}  {speedup:8.1f}x  {'ok' if agree else 'MISMATCH'}", flush=True)
    return agree


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    impls = kernels.backends()
    print(f"{'kernel':<34}" + "  ".join(f"{k + ' ms':>10}" for k in impls) + "   speedup  check")
    ok = True
    for N, q in LEADER_CASES:
        ok &= row(f"leader_array N={N} q={q}", lambda impl: kernels.leader_array(N, q, impl=impl), impls, args.repeat)
    for q, m, lam, delta, b in WEIGHT_CASES:
        model = bch_code(q, m, lam, delta, b)
        G = _expand_gfp(model.generator_matrix(), model.gf)
        label = f"weights [{model.n},{model.k}]_{q}"
        ok &= row(label, lambda impl: kernels.weight_distribution(G, model.gf.p, model.gf.e, impl=impl),
                  impls, args.repeat)
    for p, D in ANTILOG_CASES:
        F = build_field(p, D)
        low = F.modulus[:-1]
        ok &= row(f"antilog_table GF({p}^{D})", lambda impl: kernels.antilog_table(p, D, low, impl=impl),
                  impls, args.repeat)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
