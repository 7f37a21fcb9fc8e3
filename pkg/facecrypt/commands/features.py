"""features: write the segmentation stage's edge map, HE/LE mask and segmented image."""

import argparse
from pathlib import Path
from typing import Optional

from facecrypt.commands.common import (
    EXIT_OK,
    add_force_argument,
    add_format_argument,
    emit,
)
from facecrypt.config import get_settings
from facecrypt.core.padding import pad_image
from facecrypt.schemas.options import ImageFormat
from facecrypt.services.faps import edge_map_image, feature_maps, mask_image
from facecrypt.services.storage import ensure_writable, read_image, write_image


def cmd_features(
    input_path: Path,
    output_dir: Path,
    force: bool = False,
    image_format: Optional[ImageFormat] = None,
    padded: bool = False,
) -> int:
    """Run segmentation on one image; with padded, on its 32-aligned padding as encrypt does."""
    fmt = ImageFormat(image_format or get_settings().DEFAULT_IMAGE_FORMAT)
    img = read_image(input_path)
    if padded:
        img = pad_image(img)
    maps = feature_maps(img)

    outputs = {
        output_dir / f"edges.{fmt.value}": edge_map_image(maps.edges),
        output_dir / f"mask.{fmt.value}": mask_image(maps.high_edge),
        output_dir / f"segmented.{fmt.value}": maps.segmented,
    }
    ensure_writable(outputs, force)

    output_dir.mkdir(parents=True, exist_ok=True)
    for path, out in outputs.items():
        write_image(out, path, fmt, force=force)

    emit(
        f"{input_path}: threshold {maps.threshold:.6f}, "
        f"{maps.high_edge_count} high-edge / {img.size - maps.high_edge_count} low-edge pixels "
        f"-> {output_dir}"
    )
    return EXIT_OK


def _handle(args: argparse.Namespace) -> int:
    return cmd_features(
        input_path=args.input,
        output_dir=args.output_dir,
        force=args.force,
        image_format=args.image_format,
        padded=args.padded,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("features", help="edge map and HE/LE segmentation images")
    parser.add_argument("input", type=Path, help="PGM or PNG image")
    parser.add_argument("output_dir", type=Path, help="directory for the output images")
    parser.add_argument(
        "--padded", action="store_true", help="segment the zero-padded image, as encrypt does"
    )
    add_format_argument(parser)
    add_force_argument(parser)
    parser.set_defaults(handler=_handle)
