"""analyze: statistics of plain images and container cipher pixels."""

import argparse
import asyncio
import csv
import logging
from pathlib import Path
from typing import Optional

from facecrypt.commands.common import (
    EXIT_OK,
    add_force_argument,
    add_key_arguments,
    add_report_argument,
    emit,
    optional_key_from_args,
    render_metrics,
)
from facecrypt.config import get_settings
from facecrypt.core.container import deserialize_container, looks_like_container
from facecrypt.core.exceptions import DegenerateImageError
from facecrypt.models.image import GrayImage
from facecrypt.schemas.analysis import ImageReport
from facecrypt.schemas.options import Direction, ReportFormat
from facecrypt.services.analysis import (
    REFERENCE_CIPHER_ENTROPY,
    REFERENCE_MAX_ABS_CORRELATION,
    adjacent_pairs,
    analyze_many,
    histogram,
)
from facecrypt.services.pipeline import decrypt
from facecrypt.services.storage import ensure_writable, read_image

logger = logging.getLogger(__name__)

DEFAULT_PAIRS_LIMIT = 3000

Item = tuple[GrayImage, str, str]


def load_items(path: Path, key: Optional[bytes] = None) -> list[Item]:
    """
    (image, source, kind) triples for one input file.

    A container yields its cipher pixels; with a key, the decrypted image follows.
    """
    data = path.read_bytes()
    if not looks_like_container(data):
        return [(read_image(path), str(path), "plain")]

    container = deserialize_container(data)
    cipher = GrayImage.from_bytes(
        container.padded_width, container.padded_height, container.cipher_pixels
    )
    items = [(cipher, str(path), "cipher")]
    if key is not None:
        items.append((decrypt(container, key), f"{path} (decrypted)", "plain"))
    return items


def report_metrics(report: ImageReport) -> dict[str, float]:
    metrics = report.metrics()
    metrics["chi_square_uniform"] = 1.0 if report.uniformity.uniform else 0.0
    if report.kind == "cipher":
        metrics["reference_entropy"] = REFERENCE_CIPHER_ENTROPY
        metrics["reference_max_abs_correlation"] = REFERENCE_MAX_ABS_CORRELATION
    return metrics


def write_histogram_csv(reports: list[ImageReport], path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["intensity", *(r.source for r in reports)])
        for value in range(256):
            writer.writerow([value, *(r.histogram[value] for r in reports)])


def write_pairs_csv(items: list[Item], path: Path, limit: int) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["source", "direction", "x", "y"])
        for img, source, _ in items:
            for direction in Direction:
                try:
                    xs, ys = adjacent_pairs(img, direction, limit=limit)
                except DegenerateImageError:
                    continue
                writer.writerows(
                    (source, direction.value, int(x), int(y)) for x, y in zip(xs, ys)
                )


def cmd_analyze(
    inputs: list[Path],
    key: Optional[bytes] = None,
    report: Optional[ReportFormat] = None,
    histogram_out: Optional[Path] = None,
    pairs_out: Optional[Path] = None,
    pairs_limit: int = DEFAULT_PAIRS_LIMIT,
    force: bool = False,
) -> int:
    """Evaluate every input concurrently and print reports in input order."""
    settings = get_settings()
    report = ReportFormat(report or settings.DEFAULT_REPORT_FORMAT)
    ensure_writable([histogram_out, pairs_out], force)

    items: list[Item] = []
    for path in inputs:
        items.extend(load_items(path, key))

    reports = asyncio.run(analyze_many(items, settings.ANALYZE_MAX_CONCURRENCY))

    blocks = []
    for r in reports:
        title = f"{r.source} [{r.kind} {r.width}x{r.height}]"
        blocks.append(render_metrics(report_metrics(r), report, title=title))
    emit(("\n" if report is ReportFormat.KV else "\n\n").join(blocks))

    if histogram_out is not None:
        write_histogram_csv(reports, histogram_out)
        logger.info(f"Histograms written to {histogram_out}")
    if pairs_out is not None:
        write_pairs_csv(items, pairs_out, pairs_limit)
        logger.info(f"Adjacent pairs written to {pairs_out}")
    return EXIT_OK


def _handle(args: argparse.Namespace) -> int:
    return cmd_analyze(
        inputs=args.inputs,
        key=optional_key_from_args(args),
        report=args.report,
        histogram_out=args.histogram_out,
        pairs_out=args.pairs_out,
        pairs_limit=args.pairs_limit,
        force=args.force,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "analyze", help="entropy, correlation and uniformity of images or containers"
    )
    parser.add_argument("inputs", type=Path, nargs="+", help="images and/or containers")
    add_key_arguments(parser, required=False)
    add_report_argument(parser)
    add_force_argument(parser)
    parser.add_argument("--histogram-out", type=Path, default=None, help="histogram CSV")
    parser.add_argument("--pairs-out", type=Path, default=None, help="adjacent-pair CSV")
    parser.add_argument(
        "--pairs-limit",
        type=int,
        default=DEFAULT_PAIRS_LIMIT,
        help="pairs sampled per direction and input for --pairs-out",
    )
    parser.set_defaults(handler=_handle)
