"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import oracle, ranges
from .errors import DEFAULT_CAP, CapExceededError, ParseError, check_cap
from .framework import ArgumentationFramework, parse_apx, parse_tgf, random_af
from .mapping import MAPPINGS, MappingKind
from .oracle import ExtensionSet
from .program import format_program
from .ranges import ReductionKind
from .verify import OBSERVATIONS, exhaustive_instances, random_instances, run_campaign

SEMANTICS = tuple(oracle.SEMANTICS)
ROUTES = ("oracle", "lp", "pstable", "twovalued")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SolveRequest:
    semantics: str
    route: str = "oracle"
    reduction: ReductionKind = ReductionKind.GL
    cap: int | None = DEFAULT_CAP


def _lp_route(sem: str, reduction: ReductionKind) -> Callable:
    if sem == "semi-stable":
        return lambda af, cap: ranges.semi_stable_via_lp(af, reduction, cap)
    if sem == "stage":
        return lambda af, cap: ranges.stage_via_lp(af, reduction, cap)
    table = {
        "conflict-free": ranges.conflict_free_via_lp,
        "admissible": ranges.admissible_via_lp,
        "complete": ranges.complete_via_lp,
        "stable": ranges.stable_via_lp,
        "preferred": ranges.preferred_via_lp,
    }
    if sem not in table:
        raise UsageError(f"route lp is not available for {sem} semantics")
    return table[sem]


def solver_for(req: SolveRequest) -> Callable[[ArgumentationFramework, int | None], ExtensionSet]:
    if req.semantics not in oracle.SEMANTICS:
        raise UsageError(f"unknown semantics {req.semantics!r}")
    if req.route == "oracle":
        return oracle.SEMANTICS[req.semantics]
    if req.route == "lp":
        return _lp_route(req.semantics, req.reduction)
    if req.route in ("pstable", "twovalued"):
        if req.semantics != "semi-stable":
            raise UsageError(f"route {req.route} is only valid for semi-stable semantics")
        if req.route == "pstable":
            return ranges.semi_stable_via_pstable
        return ranges.semi_stable_via_2valued
    raise UsageError(f"unknown route {req.route!r}")


def format_extensions(af: ArgumentationFramework, exts: ExtensionSet) -> str:
    inner = ",".join("[" + ",".join(af.names_of(e)) + "]" for e in oracle.canonical(exts))
    return f"[{inner}]"


def cmd_solve(af: ArgumentationFramework, req: SolveRequest) -> str:
    solve = solver_for(req)
    return format_extensions(af, solve(af, req.cap)) + "\n"


def cmd_dump_program(af: ArgumentationFramework, mapping: str) -> str:
    return format_program(MAPPINGS[MappingKind(mapping)](af).program)


def cmd_bench(
    n_list: list[int], p: float, seed: int, routes: list[str], semantics: str = "semi-stable",
    repeats: int = 3, cap: int | None = DEFAULT_CAP,
) -> str:
    """Tab-separated timing table, one row per (n, route), median of ``repeats`` runs."""
    solvers = [(r, solver_for(SolveRequest(semantics, r, cap=cap))) for r in routes]
    for n in n_list:
        check_cap(n, cap)
    rows = ["n\troute\tsemantics\tseconds\textensions"]
    for n in n_list:
        af = random_af(seed, n, p)
        for route, solve in solvers:
            times = []
            for _ in range(repeats):
                t0 = time.perf_counter()
                exts = solve(af, cap)
                times.append(time.perf_counter() - t0)
            rows.append(f"{n}\t{route}\t{semantics}\t{statistics.median(times):.6f}\t{len(exts)}")
    return "\n".join(rows) + "\n"


def _read_framework(path: str, fmt: str | None) -> ArgumentationFramework:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text(encoding="utf-8")
    if fmt is None:
        fmt = "tgf" if path.endswith(".tgf") else "apx"
    return parse_tgf(text) if fmt == "tgf" else parse_apx(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _cap(text: str) -> int | None:
    return None if text == "none" else int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rangesem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", help="framework file, or - for stdin")
        p.add_argument("--format", choices=("apx", "tgf"), default=None,
                       help="input format (default: tgf for *.tgf, else apx)")

    cap_help = "exhaustive enumeration cap in atoms/arguments, or 'none'"

    p = sub.add_parser("solve", help="enumerate the extensions of a framework")
    add_input(p)
    p.add_argument("--semantics", required=True, choices=SEMANTICS)
    p.add_argument("--route", default="oracle", choices=ROUTES)
    p.add_argument("--reduction", default="GL", choices=("GL", "RED"))
    p.add_argument("--cap", type=_cap, default=DEFAULT_CAP, help=cap_help)

    p = sub.add_parser("dump", help="print a compiled program in debug text form")
    add_input(p)
    p.add_argument("--mapping", required=True, choices=[k.value for k in MappingKind])

    p = sub.add_parser("verify", help="cross-check program routes against the oracle")
    p.add_argument("--mode", required=True, choices=("exhaustive", "random"))
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--n-range", default="4,8", help="min,max argument count")
    p.add_argument("--p", dest="p_list", default="0.1,0.2,0.3,0.4,0.5")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=_cap, default=DEFAULT_CAP, help=cap_help)

    p = sub.add_parser("bench", help="time solver routes on seeded random frameworks")
    p.add_argument("--n", dest="n_list", default="6,8,10")
    p.add_argument("--p", type=float, default=0.25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--routes", default="lp,oracle")
    p.add_argument("--semantics", default="semi-stable", choices=SEMANTICS)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--cap", type=_cap, default=DEFAULT_CAP, help=cap_help)
    return parser


def _verify(args, out) -> int:
    if args.mode == "exhaustive":
        instances = exhaustive_instances(args.max_n)
    else:
        lo, hi = _int_list(args.n_range)
        check_cap(hi, args.cap)
        instances = random_instances(args.count, (lo, hi), _float_list(args.p_list), args.seed)
    total = failed = noted = 0
    for report in run_campaign(instances, args.jobs):
        total += 1
        failed += not report.passed
        noted += bool(report.notes)
        out.write(report.line() + "\n")
    verdict = "PASS" if failed == 0 else "FAIL"
    observed = ",".join(sorted(OBSERVATIONS))
    out.write(
        f"# summary instances={total} failed={failed} "
        f"observation_disagreements[{observed}]={noted} result={verdict}\n"
    )
    return 0 if failed == 0 else 1


def main(argv: list[str] | None = None) -> int:
    out = sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "solve":
            req = SolveRequest(args.semantics, args.route, ReductionKind(args.reduction), args.cap)
            solver_for(req)
            out.write(cmd_solve(_read_framework(args.file, args.format), req))
        elif args.command == "dump":
            out.write(cmd_dump_program(_read_framework(args.file, args.format), args.mapping))
        elif args.command == "verify":
            return _verify(args, out)
        elif args.command == "bench":
            routes = [r for r in args.routes.split(",") if r]
            out.write(cmd_bench(_int_list(args.n_list), args.p, args.seed, routes,
                                args.semantics, args.repeats, args.cap))
    except CapExceededError as exc:
        print(f"rangesem: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ParseError, ValueError, OSError) as exc:
        print(f"rangesem: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
