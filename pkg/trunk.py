import argparse
import logging
import sys

from core.errors import EXIT_INVALID, ToolkitError
from core.log import setup_logging
from core.settings import settings

# import commands
from commands import bench, factor, isprime, issquare, split

logger = logging.getLogger(__name__)


class ToolkitArgumentParser(argparse.ArgumentParser):
    """Usage errors are invalid input (exit 3); exit 2 means budget exhausted."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output; naturals as decimal strings")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = ToolkitArgumentParser(
        prog=settings.app.name,
        description="Fermat difference-of-squares factorization and primality toolkit",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # register commands
    factor.register(subparsers, [common])
    isprime.register(subparsers, [common])
    issquare.register(subparsers, [common])
    split.register(subparsers, [common])
    bench.register(subparsers, [common])

    return parser


def main(argv=None) -> int:
    # naturals of any length cross the CLI as decimal strings
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)

    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        return args.handler(args)
    except ToolkitError as exc:
        logger.debug("%s failed with exit code %s", args.command, exc.exit_code)
        sys.stderr.write(f"{settings.app.name}: {exc.detail}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
