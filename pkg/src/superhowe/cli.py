"""
Command-line interface.

    superhowe decompose --n 1 --dmax 8 --format table
    superhowe enumerate --n 1 --d 2 --pair gl
    superhowe verify T62 --n 1
    superhowe family p --n 1 --d 0 --k 3
    superhowe audit --n 1 --dmax 6 --seed 7

Exit codes: 0 success, 2 a mathematical audit failed, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence

from . import hwv
from .decompose import (
    AuditFailure, completeness_audit, decompose_range, direct_sum_audit, joint_hwv_enumerate,
    parity_split, reports_to_csv, reports_to_json, reports_to_table,
)
from .liealg import borel, build_gl_big, build_gl_small, build_osp22, build_spo, format_weight, is_hwv, weight_of
from .superpoly import VarSpace

EXIT_OK, EXIT_AUDIT, EXIT_USAGE = 0, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _common(p: argparse.ArgumentParser, degree=True):
    p.add_argument("--n", type=int, default=None, help="rank n (2n+1 even and 2n+1 odd variables)")
    if degree:
        p.add_argument("--d", type=int, default=None, help="single degree")
        p.add_argument("--dmax", type=int, default=None, help="all degrees 0..dmax")
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superhowe", description="Exact spo(2n|1) x osp(2|2) decompositions of S(E).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("decompose", help="harmonic decomposition tables")
    _common(p)

    p = sub.add_parser("enumerate", help="joint highest weight vectors in one degree")
    _common(p)
    p.add_argument("--pair", choices=("spo", "gl"), default="spo",
                   help="spo: spo(2n|1) + osp(2|2); gl: gl(2n|1) + gl(1|1)")
    p.add_argument("--harmonic", action="store_true", help="restrict to harmonics")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("target")
    _common(p)

    p = sub.add_parser("family", help="print a closed-form HWV family member")
    p.add_argument("family", choices=hwv.FAMILIES)
    p.add_argument("--k", type=int, default=0)
    _common(p)

    p = sub.add_parser("audit", help="dimension audits, parity split and seeded property checks")
    _common(p)
    p.add_argument("--cases", type=int, default=200, help="number of random property cases")
    return parser


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    return args.n


def _degrees(args, default: Optional[int] = None) -> List[int]:
    if args.d is not None and args.dmax is not None:
        raise UsageError("give either --d or --dmax, not both")
    if args.d is not None:
        if args.d < 0:
            raise UsageError("--d must be >= 0")
        return [args.d]
    dmax = args.dmax if args.dmax is not None else default
    if dmax is None:
        raise UsageError("one of --d or --dmax is required")
    if dmax < 0:
        raise UsageError("--dmax must be >= 0")
    return list(range(dmax + 1))


def cmd_decompose(args) -> int:
    n = _need_n(args)
    reports = decompose_range(n, _degrees(args))
    fmt = {"json": reports_to_json, "csv": reports_to_csv, "table": reports_to_table}[args.format]
    _emit(fmt(reports), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = _need_n(args)
    degrees = _degrees(args)
    if args.pair == "gl":
        a, b = build_gl_big(n), build_gl_small(n)
    else:
        a, b = build_spo(n), build_osp22(n)
    rows = []
    for d in degrees:
        for v, wa, wb in joint_hwv_enumerate(n, d, a, b, restrict_harmonic=args.harmonic):
            rows.append({"degree": d, "weight_a": [str(x) for x in wa], "weight_b": [str(x) for x in wb],
                         "hwv": v.to_text()})
    if args.format == "json":
        text = json.dumps({"schema": 1, "n": n, "pair": args.pair, "harmonic": args.harmonic, "vectors": rows},
                          indent=2) + "\n"
    else:
        sep = "," if args.format == "csv" else "  "
        lines = [sep.join(("degree", "weight_a", "weight_b", "hwv"))]
        for r in rows:
            wa = "(" + ",".join(r["weight_a"]) + ")"
            wb = "(" + ",".join(r["weight_b"]) + ")"
            hv = f'"{r["hwv"]}"' if args.format == "csv" else r["hwv"]
            lines.append(sep.join((str(r["degree"]), wa, wb, hv)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import TARGETS, run_target

    if args.target.upper() not in TARGETS:
        raise UsageError(f"unknown target {args.target!r}; known: {', '.join(TARGETS)}")
    if args.n is not None and args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    if args.d is not None:
        raise UsageError("verify takes --dmax, not --d")
    checks = run_target(args.target, args.n, args.dmax)
    lines = [c.line() for c in checks]
    ok = all(c.passed for c in checks)
    lines.append(f"{args.target.upper()}: {sum(c.passed for c in checks)}/{len(checks)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_AUDIT


def _wt(v, alg) -> str:
    w = weight_of(v, alg)
    return "not a weight vector" if w is None else format_weight(w)


def cmd_family(args) -> int:
    n = _need_n(args)
    sp = VarSpace(n)
    d = args.d or 0
    try:
        v = hwv.family(sp, args.family, d, args.k)
    except hwv.FamilyRangeError as exc:
        raise UsageError(str(exc)) from exc
    lines = [f"family {args.family} n={n} d={d} k={args.k}", f"vector: {v.to_text()}"]
    if not v:
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    lines.append(f"normalized: {v.normalized().to_text()}")
    lines.append(f"degree: {v.degree}")
    algs = [
        ("gl(2n|1), b", build_gl_big(n)),
        ("gl(2n|1), b~", borel(n, n)),
        ("gl(1|1), b'", build_gl_small(n)),
        ("spo(2n|1), b^spo", build_spo(n)),
        ("osp(2|2), F-Cartan", build_osp22(n)),
    ]
    for label, alg in algs:
        ok, _ = is_hwv(v, alg)
        lines.append(f"{label}: weight {_wt(v, alg)}, highest weight vector: {'yes' if ok else 'no'}")
    osp = build_osp22(n)
    kills = [g for g in ("F12", "D12", "D22") if not osp[g](v)]
    lines.append("annihilated by: " + (", ".join(kills) if kills else "none of F12, D12, D22"))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    from .props import run_random_properties

    n = _need_n(args)
    degrees = _degrees(args, default=4)
    lines = []
    failed = False
    for d in degrees:
        try:
            a = direct_sum_audit(n, d)
            lines.append(f"PASS  d={d} direct sum: {a['dim_S']} = {a['dim_harmonic']} + {a['dim_image']}")
        except AuditFailure as exc:
            failed = True
            lines.append(f"FAIL  d={d} {exc}")
        try:
            a = completeness_audit(n, d)
            lines.append(f"PASS  d={d} U(n'-) harmonics span S^d: rank {a['rank']} (relations {a['defect']})")
        except AuditFailure as exc:
            failed = True
            lines.append(f"FAIL  d={d} {exc}")
    try:
        reports = decompose_range(n, degrees)
        lines.append(f"PASS  harmonic decomposition audits for d in {degrees[0]}..{degrees[-1]}")
        rep = parity_split(n, degrees[-1], reports)
        lines.append("PASS  (spo weight, parity) multiplicity-free")
        lines += ["      " + s for s in rep.lines()]
    except AuditFailure as exc:
        failed = True
        lines.append(f"FAIL  {exc}")
    res = run_random_properties(n, random.Random(args.seed), args.cases)
    for name, (good, total) in res.items():
        failed |= good != total
        lines.append(f"{'PASS' if good == total else 'FAIL'}  {name}: {good}/{total} (seed {args.seed})")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_AUDIT if failed else EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "family": cmd_family,
    "audit": cmd_audit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"superhowe {args.command}: {exc}\n")
        return EXIT_USAGE
    except AuditFailure as exc:
        sys.stderr.write(f"superhowe {args.command}: {exc}\n")
        return EXIT_AUDIT


if __name__ == "__main__":
    sys.exit(main())
