"""difftest: one-bit plaintext sensitivity (NPCR / UACI) and the difference image."""

import argparse
from pathlib import Path
from typing import Optional

from facecrypt.commands.common import (
    EXIT_OK,
    add_force_argument,
    add_format_argument,
    add_key_arguments,
    add_report_argument,
    emit,
    key_from_args,
    render_metrics,
)
from facecrypt.config import get_settings
from facecrypt.schemas.options import FlipSpec, ImageFormat, ReportFormat
from facecrypt.services.analysis import IDEAL_NPCR_PERCENT, IDEAL_UACI_PERCENT, differential_test
from facecrypt.services.storage import infer_format, read_image, write_image


def default_diff_path(input_path: Path, fmt: ImageFormat) -> Path:
    return input_path.with_name(f"{input_path.stem}.diff.{fmt.value}")


def cmd_difftest(
    input_path: Path,
    key: bytes,
    flip: FlipSpec,
    output_path: Optional[Path] = None,
    report: Optional[ReportFormat] = None,
    image_format: Optional[ImageFormat] = None,
    force: bool = False,
) -> int:
    settings = get_settings()
    fmt = ImageFormat(image_format or settings.DEFAULT_IMAGE_FORMAT)
    output_path = output_path or default_diff_path(input_path, fmt)

    img = read_image(input_path)
    result = differential_test(img, key, flip)
    out_fmt = image_format or infer_format(output_path, fmt)
    write_image(result.diff_image, output_path, out_fmt, force=force)

    metrics = result.metrics()
    metrics["ideal_npcr_percent"] = IDEAL_NPCR_PERCENT
    metrics["ideal_uaci_percent"] = IDEAL_UACI_PERCENT
    title = f"{input_path} flip ({flip.row},{flip.col}) bit {flip.bit} -> {output_path}"
    emit(render_metrics(metrics, report or settings.DEFAULT_REPORT_FORMAT, title=title))
    return EXIT_OK


def _handle(args: argparse.Namespace) -> int:
    return cmd_difftest(
        input_path=args.input,
        key=key_from_args(args),
        flip=FlipSpec.parse(args.flip),
        output_path=args.output,
        report=args.report,
        image_format=args.image_format,
        force=args.force,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("difftest", help="plaintext sensitivity test")
    parser.add_argument("input", type=Path, help="PGM or PNG image")
    add_key_arguments(parser)
    parser.add_argument(
        "--flip", default="0,0", metavar="R,C[,bit]", help="pixel and bit to toggle (default 0,0,0)"
    )
    parser.add_argument("--output", type=Path, default=None, help="difference image path")
    add_report_argument(parser)
    add_format_argument(parser)
    add_force_argument(parser)
    parser.set_defaults(handler=_handle)
