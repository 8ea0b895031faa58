"""
Command-line entry point

    ncyb verify <suite> [--n INT] [--mode symbolic|numeric|dual] [--seed U64]
                        [--trunc-order INT] [--samples INT] [--json PATH]
    ncyb demo map [--n 2|3] [--quantum]

Exit status: 0 when every check passes, 1 when any check fails, 2 on usage,
configuration or I/O errors.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from ncyb.config import SUITE_NAMES, build_config
from ncyb.core.report import Report
from ncyb.utils.exceptions import ConfigurationError, SuiteError
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FORMATS = ("json", "text")


class UsageError(Exception):
    """argparse error turned into exit status 2"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ncyb",
        description="Exact verification of quasi-determinant Yang-Baxter maps",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncyb verify quasidet --n 4 --seed 7
  ncyb verify ybmap --n 2 --mode symbolic --json report.json
  ncyb demo map --n 3
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", help=f"One of: {', '.join(SUITE_NAMES)}")
    verify.add_argument("--n", type=int, help="Rank n of gl(n)")
    verify.add_argument("--mode", choices=("symbolic", "numeric", "dual"), help="Scalar mode")
    verify.add_argument("--seed", type=int, help="Run seed (unsigned 64-bit)")
    verify.add_argument("--trunc-order", type=int, help="Truncation order K of series")
    verify.add_argument("--samples", type=int, help="Number of seeded samples")
    verify.add_argument("--json", metavar="PATH", help="Write the JSON report to PATH")

    demo = commands.add_parser("demo", help="Print a worked example")
    demo.add_argument("what", choices=("map",))
    demo.add_argument("--n", type=int, default=3, help="Rank (2 or 3)")
    demo.add_argument("--quantum", action="store_true", help="Quantum map on the fundamental state")
    return parser


def emit_report(report: Report, fmt: str = "json", path: Optional[str] = None) -> str:
    """Serialize a report; with a path the text is also written there (UTF-8)."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}")
    text = report.to_json() if fmt == "json" else report.to_text()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _verify(args: argparse.Namespace) -> int:
    from ncyb.core.suites import run_suite

    if args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITE_NAMES)}")
    config = build_config(
        args.suite,
        n=args.n,
        mode=args.mode,
        seed=args.seed,
        trunc_order=args.trunc_order,
        samples=args.samples,
        output=args.json,
    )
    report = run_suite(config)
    if config.output:
        emit_report(report, "json", config.output)
        sys.stdout.write(emit_report(report, "text"))
    else:
        sys.stdout.write(emit_report(report, "json"))
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def _demo(args: argparse.Namespace) -> int:
    if args.quantum:
        from ncyb.ybmap.verify import demo_quantum_map

        sys.stdout.write(demo_quantum_map(args.n if args.n else 2))
    else:
        from ncyb.classical.verify import demo_map

        sys.stdout.write(demo_map(args.n))
    return EXIT_PASS


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _verify(args)
        return _demo(args)
    except UsageError as e:
        sys.stderr.write(f"ncyb: {e}\n")
        return EXIT_USAGE
    except (ConfigurationError, SuiteError, ValidationError) as e:
        logger.error("configuration error", error=str(e))
        sys.stderr.write(f"ncyb: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        logger.error("i/o error", error=str(e))
        sys.stderr.write(f"ncyb: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
