import argparse
import logging
import sys
from typing import Optional, Sequence

from facecrypt.commands import analyze, decrypt, difftest, encrypt, features, keytest
from facecrypt.commands.common import run_guarded
from facecrypt.config import get_settings
from facecrypt.core.logging_config import configure_logging

logger = logging.getLogger(__name__)

COMMANDS = (encrypt, decrypt, analyze, difftest, features, keytest)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Feature-aware chaotic encryption and analysis of grayscale images.",
    )
    parser.add_argument("--version", action="version", version=settings.APP_VERSION)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command, return its exit status."""
    settings = get_settings()
    args = build_parser().parse_args(argv)
    configure_logging(settings, verbose=args.verbose)
    logger.debug(f"{settings.APP_NAME} {settings.APP_VERSION}: {args.command}")
    return run_guarded(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
