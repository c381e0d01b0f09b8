"""
Main application entry point for the Fermat quintic certification tools.

Subcommands:
  certify    full certificate for one parameter t
  isolate-r  decimal enclosure of r, the end of the totally real range
  search     admissible parameters up to a height bound, grouped by kernel
  points     the six real points for a totally real t (CSV, SVG or certificate)

Exit codes: 0 success, 1 usage error, 2 a mathematical check failed.
"""

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

# Enable running this file directly (python /path/to/src/main.py) by ensuring the
# project root (which contains the 'src' package) is on sys.path.
if __package__ is None:  # pragma: no cover
    current_dir = os.path.dirname(os.path.abspath(__file__))
    project_root = os.path.dirname(current_dir)
    if project_root not in sys.path:
        sys.path.insert(0, project_root)

from src.arith import parse_rational
from src.certificate_service import CertificateService
from src.logging_config import get_logger, setup_logging
from src.models import CertificationError, CertifyOptions, CliConfig
from src.quintic import build_params
from src.renderer import CertificateRenderer

# Load environment variables
load_dotenv()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2

USAGE_CODES = {"INVALID_RATIONAL", "INVALID_ARGUMENT", "DEGENERATE_PARAMETER"}

DEFAULT_FORMATS = {"certify": "cert", "search": "cert", "points": "csv", "isolate-r": "cert"}


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as exceptions instead of exiting with 2."""

    def error(self, message: str):
        raise CertificationError(code="INVALID_ARGUMENT", message=message)


def configure_logging(verbose: bool = False) -> None:
    """Set up logging from LOG_LEVEL, LOG_DIR, LOG_FORMAT and LOG_TO_FILE."""
    setup_logging(
        log_level="DEBUG" if verbose else os.getenv("LOG_LEVEL", "INFO"),
        log_dir=os.getenv("LOG_DIR", "logs"),
        enable_console=True,
        enable_file=os.getenv("LOG_TO_FILE", "false").lower() == "true",
        json_format=os.getenv("LOG_FORMAT", "text").lower() == "json",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Build the command-line parser.

    Returns:
        Parser with one subparser per command
    """
    common = CliArgumentParser(add_help=False)
    common.add_argument("--out", type=str, help="Write output to PATH instead of stdout")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["cert", "csv", "svg"],
        help="Output format (certificate JSON, CSV rows, SVG plot)",
    )
    common.add_argument("--verbose", action="store_true", help="Enable debug logging")

    parser = CliArgumentParser(
        description="Certify degree-6 totally real points on the Fermat quintic",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s certify --t 5/2
  %(prog)s isolate-r --digits 3
  %(prog)s search --height 10 --out certificates.json
  %(prog)s points --t 5/2 --precision 6 --format svg --out points.svg
        """,
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=CliArgumentParser)

    certify = subparsers.add_parser("certify", parents=[common], help="Certificate for one t")
    certify.add_argument("--t", type=str, help="Parameter as p/q")
    certify.add_argument("--precision", type=int, default=6, help="Point width 10^-N (default: 6)")

    isolate = subparsers.add_parser("isolate-r", parents=[common], help="Enclose r")
    isolate.add_argument("--digits", type=int, default=3, help="Decimal places (default: 3)")

    search = subparsers.add_parser("search", parents=[common], help="Distinct-field search")
    search.add_argument("--height", type=int, default=10, help="Largest denominator (default: 10)")

    points = subparsers.add_parser("points", parents=[common], help="Six real points for t")
    points.add_argument("--t", type=str, help="Parameter as p/q")
    points.add_argument("--precision", type=int, default=6, help="Point width 10^-N (default: 6)")
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> CliConfig:
    """
    Parse and validate command-line arguments.

    Raises:
        CertificationError: INVALID_ARGUMENT for a malformed command line
    """
    args = build_parser().parse_args(argv)
    config = CliConfig(
        subcommand=args.subcommand,
        t=getattr(args, "t", None),
        height=getattr(args, "height", 10),
        digits=getattr(args, "digits", 3),
        precision=getattr(args, "precision", 6),
        out=args.out,
        output_format=args.output_format or DEFAULT_FORMATS[args.subcommand],
        verbose=args.verbose,
    )
    config.validate()
    return config


def emit(text: str, out: Optional[str]) -> None:
    """Write output to the requested path, or to stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        get_logger(__name__).info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def cmd_certify(config: CliConfig, service: CertificateService, renderer: CertificateRenderer) -> int:
    """Certificate for --t; exit 2 if any applicable check failed."""
    cert = service.certify(config.t)
    emit(renderer.to_json(cert), config.out)
    return EXIT_OK if cert.all_checks_pass else EXIT_CHECK_FAILED


def cmd_isolate_r(config: CliConfig, service: CertificateService, renderer: CertificateRenderer) -> int:
    """Decimal enclosure of r to --digits places, with the exact interval."""
    interval = service.isolate_r(config.digits)
    lo, hi = renderer.r_enclosure(interval, config.digits)
    emit(f"r in [{lo}, {hi}]\nexact: {interval}\n", config.out)
    return EXIT_OK


def cmd_search(config: CliConfig, service: CertificateService, renderer: CertificateRenderer) -> int:
    """Table of admissible t on stdout; certificates to --out when given."""
    result = service.search_distinct_fields(config.height)
    sys.stdout.write(renderer.search_table(result))
    if config.out:
        emit(renderer.search_to_json(result), config.out)
    failed = [hit for hit in result.hits if not hit.certificate.all_checks_pass]
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_points(config: CliConfig, service: CertificateService, renderer: CertificateRenderer) -> int:
    """Six real points for --t as CSV, SVG or a certificate with points attached."""
    if config.output_format == "cert":
        service.options.include_points = True
        cert = service.certify(config.t)
        if cert.totally_real is None or not cert.totally_real.verdict:
            raise CertificationError(
                code="NOT_TOTALLY_REAL",
                message="no real points to attach outside 2 < t < r",
                details={"t": config.t},
            )
        emit(renderer.to_json(cert), config.out)
        return EXIT_OK if cert.all_checks_pass else EXIT_CHECK_FAILED
    t = parse_rational(config.t)
    points = service.numeric_points(t)
    if config.output_format == "svg":
        emit(renderer.points_svg(build_params(t), points), config.out)
    else:
        emit(renderer.points_csv(t, points), config.out)
    return EXIT_OK


COMMANDS = {
    "certify": cmd_certify,
    "isolate-r": cmd_isolate_r,
    "search": cmd_search,
    "points": cmd_points,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main application entry point.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Exit code (0 success, 1 usage error, 2 failed check)
    """
    logger = get_logger(__name__)
    config: Optional[CliConfig] = None

    try:
        config = parse_arguments(argv)
        configure_logging(config.verbose)
        logger.debug(f"Parsed arguments: {config}")

        options = CertifyOptions.from_env()
        options.precision_exponent = config.precision
        service = CertificateService(options)
        renderer = CertificateRenderer()

        code = COMMANDS[config.subcommand](config, service, renderer)
        logger.info(f"{config.subcommand} finished with exit code {code}")
        return code

    except CertificationError as e:
        if e.code in USAGE_CODES:
            logger.error(f"Usage error: {e}")
            print(f"\n❌ Invalid Input: {e}", file=sys.stderr)
            return EXIT_USAGE
        logger.error(f"Check failed: {e}")
        print(f"\n❌ Check Failed: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    except KeyboardInterrupt:  # pragma: no cover
        logger.warning("Cancelled by user (KeyboardInterrupt)")
        print("\n\nCancelled by user.", file=sys.stderr)
        return 130

    except Exception as e:  # pragma: no cover
        logger.critical(f"Unexpected error: {e}", exc_info=True)
        print(f"\n❌ Unexpected Error: {e}", file=sys.stderr)
        if config is not None and config.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
