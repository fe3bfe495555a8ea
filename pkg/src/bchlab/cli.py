"""Command-line interface: ``bchlab <command> ...`` (also ``python3 -m bchlab``)."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys

from bchlab import formulas as fm
from bchlab.analysis import (
    WeightEnumerator,
    bch_bound,
    is_dually_bch,
    min_distance,
    weight_enumerator_exhaustive,
    weights_via_dual,
)
from bchlab.claims import ParamClaim
from bchlab.codes import bch_code
from bchlab.cyclotomic import leader_table
from bchlab.errors import BchLabError, BudgetExceeded, OutOfRange, UnknownSuite
from bchlab.field import build_field
from bchlab.harness import SUITES, Grid, emit_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def _to_json(x):
    if isinstance(x, WeightEnumerator):
        return {str(w): c for w, c in x.counts.items()}
    if isinstance(x, ParamClaim):
        return x.as_dict()
    if isinstance(x, fm.WeightTable):
        return {
            "weights": _to_json(x.enumerator),
            "claim": x.claim.as_dict(),
            "dualClaim": x.dual_claim.as_dict(),
            "delta": x.delta,
        }
    if dataclasses.is_dataclass(x):
        return {f.name: _to_json(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, (list, tuple)):
        return [_to_json(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _to_json(v) for k, v in x.items()}
    return x


def cmd_field(args):
    F = build_field(args.q, args.m)
    out = {"p": F.base.p, "e": F.base.e, "D": F.D, "alphaOrder": F.order}
    if args.print_modulus:
        out["modulus"] = list(reversed(F.modulus))  # leading coefficient first, constant last
    _dump(out)
    return EXIT_OK


def cmd_cosets(args):
    table = leader_table(args.modulus, args.q)
    leaders = table.odd_leaders() if args.odd_only else table.leaders
    rows = [(int(l), table.size_of(int(l)), [int(t) for t in table.members(int(l))]) for l in leaders]
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["leader", "size", "members"])
        for l, s, mem in rows:
            w.writerow([l, s, " ".join(map(str, mem))])
    else:
        _dump({"modulus": args.modulus, "q": args.q,
               "cosets": [{"leader": l, "size": s, "members": mem} for l, s, mem in rows]})
    return EXIT_OK


def _model(args):
    return bch_code(args.q, args.m, 1 if args.family == "cyc" else -1, args.delta, args.b)


def cmd_code(args):
    model = _model(args)
    out = {
        "n": model.n,
        "k": model.k,
        "definingSetSize": len(model.defining_set),
        "bchBound": bch_bound(model.defining_set),
    }
    if args.print_gen:
        out["generator"] = model.generator.vector(model.generator.degree + 1)
    _dump(out)
    return EXIT_OK


def cmd_weights(args):
    model = _model(args)
    if args.extended:
        W = weight_enumerator_exhaustive(model, args.budget, extended=True)
        out = {"weights": _to_json(W), "d": W.min_distance(), "certificate": "exact"}
    elif args.via_dual or model.q ** model.k > args.budget:
        try:
            W = weights_via_dual(model, args.budget)
            out = {"weights": _to_json(W), "d": W.min_distance(), "certificate": "exact"}
        except BudgetExceeded:
            d, cert = min_distance(model, args.budget)
            out = {"weights": None, "d": d, "certificate": cert}
    else:
        W = weight_enumerator_exhaustive(model, args.budget)
        out = {"weights": _to_json(W), "d": W.min_distance(), "certificate": "exact"}
    _dump(out)
    return EXIT_OK


def cmd_dualcheck(args):
    res = is_dually_bch(bch_code(args.q, args.m, 1, args.delta, 2))
    witness = {"b": res.witness[0], "delta": res.witness[1]} if res.witness else None
    _dump({"duallyBCH": res.dually_bch, "witness": witness,
           "dualDefiningSet": res.dual_defining_set.sorted()})
    return EXIT_OK


def cmd_formula(args):
    if args.list:
        for f in fm.FORMULAS.values():
            print(f"{f.id:<12} ({', '.join(f.params)})  {f.summary}")
        return EXIT_OK
    if args.id not in fm.FORMULAS:
        print(f"unknown formula id {args.id!r}; see --list", file=sys.stderr)
        return EXIT_USAGE
    f = fm.FORMULAS[args.id]
    kwargs = {}
    for name in f.params:
        v = getattr(args, name, None)
        if v is None:
            print(f"formula {f.id} needs --{name.replace('_', '-')}", file=sys.stderr)
            return EXIT_USAGE
        kwargs[name] = v
    try:
        value, ok, err = _to_json(f.func(**kwargs)), True, None
    except OutOfRange as e:
        value, ok, err = None, False, str(e)
    out = {"value": value, "preconditionsOk": ok}
    if err:
        out["error"] = err
    _dump(out)
    return EXIT_OK


def _int_list(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in s.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def cmd_verify(args):
    grid = Grid(q_set=args.q_set, m_max=args.m_max, budget=args.budget)
    report = run_suite(args.suite, grid, jobs=args.jobs)
    data = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bchlab", description="Cyclic and negacyclic BCH codes of length (q^m-1)/2.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="build GF(q^m) and describe it")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--print-modulus", action="store_true")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("cosets", help="q-cyclotomic cosets modulo N")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--odd-only", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="(default)")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_cosets)

    def code_args(p):
        p.add_argument("--family", choices=("neg", "cyc"), required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--delta", type=int, required=True)
        p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("code", help="construct C(n, lambda, delta, b)")
    code_args(p)
    p.add_argument("--print-gen", action="store_true")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("weights", help="weight distribution and minimum distance")
    code_args(p)
    p.add_argument("--budget", type=int, default=1 << 20, help="max codewords to enumerate")
    p.add_argument("--via-dual", action="store_true", help="enumerate the dual, then MacWilliams")
    p.add_argument("--extended", action="store_true", help="weights of the extended code")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("dualcheck", help="is C(n, 1, delta, 2) dually-BCH?")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_dualcheck)

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("--id")
    p.add_argument("--list", action="store_true")
    for name in ("q", "m", "n", "a", "b", "i", "k", "delta", "delta-a"):
        p.add_argument(f"--{name}", type=int, dest=name.replace("-", "_"))
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--q-set", type=_int_list, default=(3, 5, 7))
    p.add_argument("--m-max", type=int)
    p.add_argument("--budget", type=int, default=Grid.budget)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "formula" and not args.list and not args.id:
        ap.error("formula needs --id or --list")
    try:
        return args.func(args)
    except (BchLabError, ValueError) as e:
        if isinstance(e, UnknownSuite):
            print(f"unknown suite {e}", file=sys.stderr)
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
