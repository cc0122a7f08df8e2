"""Command line front end.

Exit codes: 0 success, 1 solver/formula mismatch (verify only),
2 usage or parse error, 3 resource limit (box volume, time budget).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from . import formulas
from .ideal import maximal_ideal, parse_ideal, path_ideal, power
from .poset import EmptyPosetError, Mode, VolumeLimitError, build_poset, dump_poset
from .solver import (
    ResourceError,
    SearchBudgetExceeded,
    SearchStats,
    certificate_problems,
    sdepth_of_poset,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    family: str | None
    file: str | None
    n: int
    t: int | None
    g: list[int]
    mode: str
    computed_sdepth: int
    formula_sdepth: int | None
    match: bool | None
    wall_time_ms: float | None
    node_count: int
    threads: int
    certificate_valid: bool
    certificate_problems: list[str] = field(default_factory=list)


def parse_range(text: str) -> list[int]:
    """``3``, ``2..8`` (inclusive) or ``2,4,6``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}") from None


def parse_bound(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse bound vector {text!r}") from None


def family_ideal(family: str, n: int, t: int):
    if family in ("path", "path-power"):
        return power(path_ideal(n), t)
    if family == "maximal":
        if t != 1:
            raise UsageError("the maximal family takes no --t")
        return maximal_ideal(n)
    raise UsageError(f"unknown family {family!r}")


def default_mode(family: str | None) -> Mode:
    return Mode.IDEAL if family == "maximal" else Mode.QUOTIENT


def formula_for(family: str | None, mode: Mode, n: int, t: int) -> int | None:
    if family in ("path", "path-power") and mode is Mode.QUOTIENT:
        return formulas.path_power_sdepth(n, t)
    if family == "maximal" and mode is Mode.IDEAL:
        return formulas.maximal_ideal_sdepth(n)
    return None


def solver_options(args) -> dict:
    return {
        "branching": args.branching,
        "lp_prune": not args.no_lp,
        "threads": args.threads,
        "time_budget_ms": args.time_budget_ms,
    }


def solve_instance(P, args) -> tuple[int, object, SearchStats, float]:
    stats = SearchStats()
    start = time.perf_counter()
    value, cert = sdepth_of_poset(P, stats=stats, **solver_options(args))
    return value, cert, stats, (time.perf_counter() - start) * 1000.0


def cmd_compute(args) -> int:
    if (args.ideal is None) == (args.family is None):
        raise UsageError("give exactly one of --ideal FILE or --family NAME")
    if args.ideal is not None:
        try:
            I = parse_ideal(Path(args.ideal).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.ideal}: {exc.strerror}") from None
        n, t = I.n_vars, None
    else:
        if args.n is None:
            raise UsageError("--family needs --n")
        n, t = args.n, args.t if args.t is not None else 1
        I = family_ideal(args.family, n, t)
    mode = Mode(args.mode) if args.mode else default_mode(args.family)
    P = build_poset(I, mode, parse_bound(args.g))
    if args.dump_poset:
        Path(args.dump_poset).write_text(dump_poset(P))

    value, cert, stats, ms = solve_instance(P, args)
    problems = certificate_problems(P, cert)
    expected = formula_for(args.family, mode, n, t) if args.family else None
    report = RunReport(
        family=args.family,
        file=args.ideal,
        n=n,
        t=t,
        g=list(P.g),
        mode=mode.value,
        computed_sdepth=value,
        formula_sdepth=expected,
        match=None if expected is None else value == expected,
        wall_time_ms=None if args.no_timing else round(ms, 3),
        node_count=stats.nodes,
        threads=args.threads,
        certificate_valid=not problems,
        certificate_problems=problems,
    )
    if args.out:
        Path(args.out).write_text(cert.to_json(indent=2) + "\n")
    if args.pretty:
        width = max(len(k) for k in asdict(report))
        for key, val in asdict(report).items():
            print(f"{key:<{width}}  {val}")
    else:
        print(json.dumps(asdict(report)))
    return EXIT_OK


def cmd_verify(args) -> int:
    ns = parse_range(args.n)
    if args.t is not None:
        ts = parse_range(args.t)
    elif args.family in ("path", "maximal"):
        ts = [1]
    else:
        raise UsageError("--family path-power needs --t")
    mode = default_mode(args.family)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "t", "formula", "solver", "match", "ms", "nodes"])
    all_ok = True
    for n in ns:
        for t in ts:
            expected = formula_for(args.family, mode, n, t)
            I = family_ideal(args.family, n, t)
            try:
                P = build_poset(I, mode)
                value, cert, stats, ms = solve_instance(P, args)
            except (SearchBudgetExceeded, VolumeLimitError, ResourceError) as exc:
                print(f"# n={n} t={t} skipped: {exc}", file=sys.stderr)
                writer.writerow([n, t, expected, "skipped", "skipped", "-", "-"])
                sys.stdout.flush()
                continue
            problems = certificate_problems(P, cert)
            if problems:
                print(f"# n={n} t={t} invalid certificate: {'; '.join(problems)}", file=sys.stderr)
            ok = value == expected and not problems
            all_ok &= ok
            ms_field = "-" if args.no_timing else f"{ms:.0f}"
            writer.writerow([n, t, expected, value, "yes" if ok else "no", ms_field, stats.nodes])
            sys.stdout.flush()
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_dump_poset(args) -> int:
    if (args.ideal is None) == (args.family is None):
        raise UsageError("give exactly one of --ideal FILE or --family NAME")
    if args.ideal is not None:
        try:
            I = parse_ideal(Path(args.ideal).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.ideal}: {exc.strerror}") from None
    else:
        if args.n is None:
            raise UsageError("--family needs --n")
        I = family_ideal(args.family, args.n, args.t or 1)
    mode = Mode(args.mode) if args.mode else default_mode(args.family)
    sys.stdout.write(dump_poset(build_poset(I, mode, parse_bound(args.g))))
    return EXIT_OK


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=formulas.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--ideal", metavar="FILE", help="ideal file: 'vars <n>' then one monomial per line")
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--g", metavar="G1,G2,...", help="bound vector (default: generator maxima, at least 1)")


def _add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1, help="worker processes for top-level branches")
    p.add_argument("--time-budget-ms", type=float, default=None)
    p.add_argument("--branching", choices=["mrv", "anchor"], default="mrv")
    p.add_argument("--no-lp", action="store_true", help="disable the LP relaxation pre-check")
    p.add_argument("--no-timing", action="store_true", help="omit wall times for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdepth", description="Exact Stanley depth via poset interval partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute sdepth of one instance")
    _add_instance_args(p)
    _add_solver_args(p)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--out", metavar="PATH", help="write the certificate JSON here")
    p.add_argument("--dump-poset", metavar="PATH", help="also write the poset dump here")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="compare solver and closed forms over a grid (CSV)")
    p.add_argument("--family", choices=formulas.FAMILIES, required=True)
    p.add_argument("--n", required=True, help="e.g. 2..8")
    p.add_argument("--t", help="e.g. 2..3")
    _add_solver_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump-poset", help="print the characteristic poset")
    _add_instance_args(p)
    p.set_defaults(func=cmd_dump_poset)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (VolumeLimitError, ResourceError, SearchBudgetExceeded) as exc:
        print(f"sdepth: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except EmptyPosetError as exc:
        print(f"sdepth: empty poset: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"sdepth: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
