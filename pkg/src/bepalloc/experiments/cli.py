"""Command-line front end.

One subcommand per figure sweep plus ``report`` for the analytic-vs-Monte
Carlo validation grid.  Exit status: 0 on success, 1 when report cells
disagree, 2 on configuration or usage errors.
"""

import argparse
import sys

from ..errors import BepAllocError
from .config import load_config
from .csvio import write_csv
from .runners import RUNNERS, run_report

_FIGURES = sorted(RUNNERS, key=lambda name: int(name[3:]))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bepalloc",
        description="BEP-constrained power allocation experiment sweeps (CSV output).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _FIGURES + ["report"]:
        doc = run_report.__doc__ if name == "report" else RUNNERS[name].__doc__
        p = sub.add_parser(name, help=doc.splitlines()[0])
        p.add_argument("--config", default=None, help="key = value config file")
        p.add_argument("--seed", type=int, default=None, help="64-bit stream seed")
        p.add_argument("--trials", type=int, default=None, help="Monte Carlo trials per point")
        p.add_argument("--out", default=None, help="output CSV path (default: stdout)")
        p.add_argument("--workers", type=int, default=None,
                       help="parallel workers (never changes values)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(
            args.config,
            seed=args.seed,
            trials=args.trials,
            out=args.out,
            workers=args.workers,
        )
        if args.command == "report":
            metadata, header, rows, all_pass = run_report(cfg)
        else:
            metadata, header, rows = RUNNERS[args.command](cfg)
            all_pass = True
        text = write_csv(cfg.out or None, metadata, header, rows)
        if not cfg.out:
            sys.stdout.write(text)
        elif args.command == "report":
            status = "all cells passed" if all_pass else "DISAGREEMENT DETECTED"
            print(f"report: {status}; wrote {cfg.out}")
    except BepAllocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if all_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
