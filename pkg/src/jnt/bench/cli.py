"""``jnt-bench``: run benchmark scenarios and print tables or CSV.

Exit status: 0 on success, 1 when a variant fails verification, 2 on usage
or input/output errors.
"""
from __future__ import annotations

import argparse
import io
import sys

from jnt.bench.harness import CSV_COLUMNS, DEFAULT_MIN_TIME, DEFAULT_SEED
from jnt.bench.scenarios import DEFAULT_SIZES, SCENARIOS, run_scenario
from jnt.errors import ConfigurationError, MatrixMarketError, VerificationError
from jnt.matio.table import write_csv

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


def _sizes(text):
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not sizes or any(s <= 0 for s in sizes):
        raise argparse.ArgumentTypeError(f"sizes must be positive integers, got {text!r}")
    return sizes


def _min_time(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected seconds, got {text!r}") from None
    if not value > 0.0:
        raise argparse.ArgumentTypeError("--min-time must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jnt-bench", description="Numerical kernel microbenchmarks.")
    p.add_argument("scenario", choices=SCENARIOS + ("all",))
    p.add_argument("--min-time", type=_min_time, default=DEFAULT_MIN_TIME, metavar="SECONDS",
                   help=f"timing floor per case (default {DEFAULT_MIN_TIME})")
    p.add_argument("--sizes", type=_sizes, default=None, metavar="N,N,...",
                   help="matrix orders for the blocked scenario (default "
                        + ",".join(map(str, DEFAULT_SIZES)) + ")")
    p.add_argument("--matrix", action="append", default=None, metavar="PATH",
                   help="Matrix Market file for the sparse scenario; repeatable (default: bundled WEST0156 stand-in)")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    return p


def render(results, fmt) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        write_csv(buf, CSV_COLUMNS, [row for r in results for row in r.csv_rows()])
        return buf.getvalue()
    return "\n".join(r.to_text() for r in results)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        results = run_scenario(args.scenario, args.min_time, args.seed, args.sizes, args.matrix)
    except VerificationError as exc:
        print(f"jnt-bench: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (OSError, MatrixMarketError, ConfigurationError, ValueError) as exc:
        print(f"jnt-bench: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(results, args.format)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        print(f"jnt-bench: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
