"""Command-line driver: ``s7check <command> [options]``.

Exit status is 0 when every check passes, 1 when any check fails and 2 for
usage or I/O errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .campaigns import COMMANDS, RunConfig, run
from .report import ReportWriteError, emit_report

SEED_ENV = "S7CHECK_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"s7check: {SEED_ENV} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"RNG seed (default 1, or ${SEED_ENV})")
    common.add_argument("--trials", type=int, default=100_000, help="random samples / Monte Carlo trials per check")
    common.add_argument("--pairs", type=int, default=20, help="random detector setting pairs")
    common.add_argument("--tolerance", type=float, default=1e-10, help="relative tolerance for norm checks")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", default=None, help="report path (default: standard output)")
    common.add_argument("--workers", type=int, default=1, help="threads for simulate-singlet shards")
    common.add_argument("--trials-csv", default=None, help="dump per-trial records of the first simulated pair")
    common.add_argument("--quiet", "-q", action="store_true", help="no summary on standard error")

    parser = argparse.ArgumentParser(prog="s7check", description="Mechanical checks of K-algebra norms, the singlet simulation and CHSH spectra.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "verify-algebra": "Cl(4,0) product table and multivector identities",
        "verify-norms": "composition law, positive definiteness, light cone, S^7",
        "counterexample": "X = eps - 1, Y = eps + 1 under both norms",
        "simulate-singlet": "Monte Carlo singlet correlations over random settings",
        "chsh": "CHSH spectra, eigenvalue non-additivity, +-2 enumeration",
        "all": "every campaign above",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        seed=_default_seed() if args.seed is None else args.seed,
        trials=args.trials,
        pairs=args.pairs,
        tolerance=args.tolerance,
        format=args.format,
        output=args.output,
        workers=args.workers,
        trials_csv=args.trials_csv,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))

    start = time.perf_counter()
    try:
        report = run(cfg)
    except OSError as exc:
        print(f"s7check: {exc}", file=sys.stderr)
        return 2
    report.wall_time = time.perf_counter() - start

    try:
        emit_report(report, cfg.format, cfg.output)
    except ReportWriteError as exc:
        print(f"s7check: {exc}", file=sys.stderr)
        return 2

    if not args.quiet:
        s = report.summary()
        for c in report.checks:
            if not c.passed:
                print(f"FAIL  {c.name}: observed {c.observed!r}, expected {c.expected!r}", file=sys.stderr)
        print(f"{cfg.command}: {s['passed']}/{s['total']} checks passed in {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
