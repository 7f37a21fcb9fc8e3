"""Shared argument helpers, report rendering and error translation for commands."""

import argparse
import json
import logging
import sys
from typing import Callable, Optional

from facecrypt.core.exceptions import FaceCryptError
from facecrypt.core.security import resolve_key
from facecrypt.schemas.options import ImageFormat, ReportFormat

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1

Handler = Callable[[argparse.Namespace], int]


# ========================
# Arguments
# ========================

def add_key_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_argument_group("key" if required else "key (optional)")
    group.add_argument("--key-hex", metavar="HEX", help="256-bit key as 64 hex characters")
    group.add_argument("--passphrase", metavar="TEXT", help="key given as a UTF-8 passphrase")


def add_force_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--force", action="store_true", help="overwrite existing output files")


def add_format_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        dest="image_format",
        choices=[f.value for f in ImageFormat],
        default=None,
        help="output image format (default: from the file suffix)",
    )


def add_report_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--report",
        choices=[f.value for f in ReportFormat],
        default=None,
        help="report rendering (default: FACE_DEFAULT_REPORT_FORMAT)",
    )


def key_from_args(args: argparse.Namespace) -> bytes:
    return resolve_key(key_hex=args.key_hex, passphrase=args.passphrase)


def optional_key_from_args(args: argparse.Namespace) -> Optional[bytes]:
    if args.key_hex is None and args.passphrase is None:
        return None
    return key_from_args(args)


# ========================
# Output
# ========================

def render_metrics(
    metrics: dict[str, float],
    report: ReportFormat,
    title: Optional[str] = None,
) -> str:
    """
    Render a metric mapping.

    kv: one JSON object (metric name -> number) on a single line.
    text: an optional title line, then one aligned "name  value" line per metric.
    """
    if ReportFormat(report) is ReportFormat.KV:
        return json.dumps(metrics, sort_keys=False)

    width = max((len(name) for name in metrics), default=0)
    lines = [title] if title else []
    lines.extend(f"{name:<{width}}  {_format_number(value)}" for name, value in metrics.items())
    return "\n".join(lines)


def _format_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.6f}"


def emit(text: str) -> None:
    """Results go to stdout."""
    print(text, file=sys.stdout)


def fail(message: str) -> int:
    """One-line diagnostic on stderr."""
    print(f"error: {message}", file=sys.stderr)
    return EXIT_FAILURE


# ========================
# Error translation
# ========================

def run_guarded(handler: Handler, args: argparse.Namespace) -> int:
    """
    Run a command handler and turn failures into a diagnostic plus exit status 1.
    """
    try:
        return handler(args)
    except FaceCryptError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        return fail(str(e))
    except FileNotFoundError as e:
        return fail(f"cannot read {e.filename}: no such file")
    except FileExistsError as e:
        return fail(str(e))
    except OSError as e:
        name = e.filename if e.filename is not None else ""
        return fail(f"{name}: {e.strerror or e}" if name else str(e))
    except Exception as e:
        logger.debug(f"Unexpected failure in {args.command}", exc_info=True)
        return fail(f"{type(e).__name__}: {e}")
