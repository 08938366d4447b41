"""
bott-spinc

Command-line entry point: analyze one Bott matrix, run the census of
orientable matrices or run the oracle consistency harness.
"""

import argparse
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import Optional, Sequence

import structlog

from .config import Settings, get_settings, load_dotenv_if_exists
from .core import DimensionRangeError, MatrixParseError
from .di_container import DIContainer
from .formatting import render_analysis, render_census, render_verification
from .services.census import LongRunRefusedError

logger = structlog.get_logger(__name__)


class ExitCode(IntEnum):
    OK = 0
    IO_ERROR = 1
    PARSE_ERROR = 2
    LONG_RUN_REFUSED = 3
    VERIFICATION_FAILED = 4


def configure_logging(level: str) -> None:
    """Structured logs go to stderr; stdout carries only results"""
    log_level = getattr(logging, level.upper())
    logging.basicConfig(stream=sys.stderr, format="%(message)s")
    logging.getLogger().setLevel(log_level)
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def parse_dims(text: str) -> range:
    """'A..B' or 'A' as an inclusive range"""
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected A..B or A, got {text!r}") from None
    if stop < start:
        raise argparse.ArgumentTypeError(f"Empty dimension range {text!r}")
    return range(start, stop + 1)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bott-spinc",
        description="Spin and spin^c structures on real Bott manifolds",
    )
    parser.add_argument(
        "--format",
        choices=["table", "csv", "json-lines"],
        default=settings.output_format,
        help=f"Output format (default: {settings.output_format})",
    )
    parser.add_argument(
        "--log-level",
        default=settings.log_level,
        choices=["debug", "info", "warning", "error"],
        help=f"Log level (default: {settings.log_level})",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="Analyze the Bott matrix in a file")
    analyze.add_argument("path", type=Path, help="Matrix file, '-' for stdin")
    analyze.add_argument(
        "--all-oracles", action="store_true", help="Report every spin^c oracle"
    )

    census = commands.add_parser("census", help="Count spin^c and spin matrices per dimension")
    census.add_argument(
        "--dims",
        type=parse_dims,
        default=range(settings.min_dimension, 9),
        help="Dimension range A..B (default: 4..8)",
    )
    census.add_argument("--workers", type=int, default=settings.workers, help="Worker processes")
    census.add_argument(
        "--allow-long", action="store_true", help="Allow the dimension 10 census"
    )
    census.add_argument(
        "--no-timing", action="store_true", help="Leave elapsed time out of the output"
    )

    verify = commands.add_parser("verify", help="Cross-check the spin^c oracles")
    verify.add_argument(
        "--max-exhaustive",
        type=int,
        default=settings.verify_max_exhaustive,
        help=f"Largest exhaustively checked dimension (default: {settings.verify_max_exhaustive})",
    )
    verify.add_argument(
        "--samples",
        type=int,
        default=settings.verify_samples,
        help="Random matrices per larger dimension",
    )
    verify.add_argument("--seed", type=int, default=settings.verify_seed, help="Sampler seed")
    return parser


def _read(path: Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return path.read_text(encoding="utf-8")


def cmd_analyze(container: DIContainer, args: argparse.Namespace) -> int:
    try:
        text = _read(args.path)
    except OSError as e:
        logger.error("Cannot read matrix file", path=str(args.path), error=str(e))
        print(f"{args.path}: {e.strerror or e}", file=sys.stderr)
        return ExitCode.IO_ERROR
    except UnicodeDecodeError as e:
        logger.error("Matrix file is not UTF-8 text", path=str(args.path), position=e.start)
        print(f"{args.path}: not UTF-8 text (byte {e.start})", file=sys.stderr)
        return ExitCode.IO_ERROR

    try:
        report = container.get_analysis_service().analyze_text(text, args.all_oracles)
    except MatrixParseError as e:
        logger.error("Malformed matrix", path=str(args.path), line=e.line, column=e.column)
        print(f"{args.path}: {e}", file=sys.stderr)
        return ExitCode.PARSE_ERROR

    sys.stdout.write(render_analysis(report, args.format))
    return ExitCode.OK


def cmd_census(container: DIContainer, args: argparse.Namespace) -> int:
    if args.workers < 1:
        print("--workers must be at least 1", file=sys.stderr)
        return ExitCode.PARSE_ERROR
    try:
        rows = container.get_census_service().census_range(
            list(args.dims), workers=args.workers, allow_long=args.allow_long
        )
    except LongRunRefusedError as e:
        logger.warning("Long census refused", dims=f"{args.dims.start}..{args.dims.stop - 1}")
        print(str(e), file=sys.stderr)
        return ExitCode.LONG_RUN_REFUSED
    except DimensionRangeError as e:
        print(str(e), file=sys.stderr)
        return ExitCode.PARSE_ERROR

    sys.stdout.write(render_census(rows, args.format, timing=not args.no_timing))
    return ExitCode.OK


def cmd_verify(container: DIContainer, args: argparse.Namespace) -> int:
    try:
        report = container.get_verification_service().verify_oracles(
            args.max_exhaustive, args.samples, args.seed
        )
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return ExitCode.PARSE_ERROR

    sys.stdout.write(render_verification(report, args.format))
    return ExitCode.OK if report.success else ExitCode.VERIFICATION_FAILED


COMMANDS = {
    "analyze": cmd_analyze,
    "census": cmd_census,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, container: Optional[DIContainer] = None) -> int:
    """Main entry point with command line argument parsing"""
    load_dotenv_if_exists()
    try:
        settings = container.settings if container else get_settings()
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return ExitCode.IO_ERROR

    args = build_parser(settings).parse_args(argv)
    configure_logging(args.log_level)
    container = container or DIContainer(settings)

    logger.debug("Running command", command=args.command)
    return int(COMMANDS[args.command](container, args))


if __name__ == "__main__":
    sys.exit(main())
