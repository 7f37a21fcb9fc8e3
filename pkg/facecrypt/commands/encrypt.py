"""encrypt: image file -> container file."""

import argparse
import logging
from pathlib import Path
from typing import Optional

from facecrypt.commands.common import (
    EXIT_OK,
    add_force_argument,
    add_format_argument,
    add_key_arguments,
    emit,
    key_from_args,
)
from facecrypt.config import get_settings
from facecrypt.schemas.options import ImageFormat
from facecrypt.services.pipeline import encrypt_with_trace
from facecrypt.services.storage import (
    ensure_writable,
    read_image,
    write_container,
    write_image,
)

logger = logging.getLogger(__name__)


def cmd_encrypt(
    input_path: Path,
    output_path: Path,
    key: bytes,
    force: bool = False,
    stages_dir: Optional[Path] = None,
    image_format: Optional[ImageFormat] = None,
) -> int:
    """
    Encrypt one image into a container.

    With stages_dir, the padded, segmented, permuted and confused images are
    written there as well.
    """
    img = read_image(input_path)
    container, trace = encrypt_with_trace(img, key)

    stage_paths = {}
    if stages_dir is not None:
        fmt = ImageFormat(image_format or get_settings().DEFAULT_IMAGE_FORMAT)
        stage_paths = {name: stages_dir / f"{name}.{fmt.value}" for name in trace.stages()}
    ensure_writable([output_path, *stage_paths.values()], force)

    write_container(container, output_path, force=force)
    if stages_dir is not None:
        stages_dir.mkdir(parents=True, exist_ok=True)
        for name, stage in trace.stages().items():
            write_image(stage, stage_paths[name], fmt, force=force)
        logger.info(f"Stage images written to {stages_dir}")

    emit(
        f"encrypted {input_path} ({img.width}x{img.height}, padded "
        f"{container.padded_width}x{container.padded_height}) -> {output_path}"
    )
    return EXIT_OK


def _handle(args: argparse.Namespace) -> int:
    return cmd_encrypt(
        input_path=args.input,
        output_path=args.output,
        key=key_from_args(args),
        force=args.force,
        stages_dir=args.stages_dir,
        image_format=args.image_format,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("encrypt", help="encrypt a grayscale image")
    parser.add_argument("input", type=Path, help="PGM or PNG image")
    parser.add_argument("output", type=Path, help="container file (.face)")
    add_key_arguments(parser)
    add_force_argument(parser)
    add_format_argument(parser)
    parser.add_argument(
        "--stages-dir", type=Path, default=None, help="also write every intermediate stage image"
    )
    parser.set_defaults(handler=_handle)
