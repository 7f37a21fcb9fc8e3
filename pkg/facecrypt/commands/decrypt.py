"""decrypt: container file -> image file."""

import argparse
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
from facecrypt.services.pipeline import decrypt
from facecrypt.services.storage import infer_format, read_container, write_image


def cmd_decrypt(
    input_path: Path,
    output_path: Path,
    key: bytes,
    force: bool = False,
    image_format: Optional[ImageFormat] = None,
) -> int:
    container = read_container(input_path)
    img = decrypt(container, key)
    fmt = image_format or infer_format(output_path, get_settings().DEFAULT_IMAGE_FORMAT)
    write_image(img, output_path, fmt, force=force)
    emit(f"decrypted {input_path} -> {output_path} ({img.width}x{img.height})")
    return EXIT_OK


def _handle(args: argparse.Namespace) -> int:
    return cmd_decrypt(
        input_path=args.input,
        output_path=args.output,
        key=key_from_args(args),
        force=args.force,
        image_format=args.image_format,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("decrypt", help="decrypt a container back to an image")
    parser.add_argument("input", type=Path, help="container file (.face)")
    parser.add_argument("output", type=Path, help="image to write")
    add_key_arguments(parser)
    add_force_argument(parser)
    add_format_argument(parser)
    parser.set_defaults(handler=_handle)
