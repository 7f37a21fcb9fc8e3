"""keytest: flip one key bit and measure the effect on encryption and decryption."""

import argparse
from pathlib import Path
from typing import Optional

from facecrypt.commands.common import (
    EXIT_OK,
    add_key_arguments,
    add_report_argument,
    emit,
    key_from_args,
    render_metrics,
)
from facecrypt.config import get_settings
from facecrypt.schemas.options import ReportFormat
from facecrypt.services.analysis import key_sensitivity_test
from facecrypt.services.storage import read_image


def cmd_keytest(
    input_path: Path,
    key: bytes,
    key_bit: int = 0,
    report: Optional[ReportFormat] = None,
) -> int:
    img = read_image(input_path)
    result = key_sensitivity_test(img, key, key_bit)
    verdict = "wrong key detected" if result.wrong_key_detected else "decrypted to noise"
    title = f"{input_path} key bit {key_bit}: {verdict}"
    emit(render_metrics(result.metrics(), report or get_settings().DEFAULT_REPORT_FORMAT, title))
    return EXIT_OK


def _handle(args: argparse.Namespace) -> int:
    return cmd_keytest(
        input_path=args.input,
        key=key_from_args(args),
        key_bit=args.key_bit,
        report=args.report,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("keytest", help="key sensitivity test")
    parser.add_argument("input", type=Path, help="PGM or PNG image")
    add_key_arguments(parser)
    parser.add_argument(
        "--key-bit", type=int, default=0, help="key bit to flip (0 = LSB of the first byte)"
    )
    add_report_argument(parser)
    parser.set_defaults(handler=_handle)
