"""
Security evaluation: histogram, entropy, adjacent correlation, chi-square
uniformity, and plaintext/key sensitivity.
"""

import asyncio
import logging
import math
from typing import Iterable, Optional

import numpy as np
from scipy import stats

from facecrypt.config import get_settings
from facecrypt.core.exceptions import DegenerateImageError, WrongKeyError
from facecrypt.core.security import flip_key_bit
from facecrypt.models.image import GrayImage
from facecrypt.schemas.analysis import (
    CorrelationReport,
    DifferentialReport,
    ImageReport,
    KeySensitivityReport,
    UniformityReport,
)
from facecrypt.schemas.options import Direction, FlipSpec
from facecrypt.services.pipeline import decrypt, encrypt

logger = logging.getLogger(__name__)

# Published cipher-image figures for the scheme on natural test images
REFERENCE_CIPHER_ENTROPY = 7.998
REFERENCE_MAX_ABS_CORRELATION = 0.0071
CHI_SQUARE_DOF = 255

# Ideal-cipher expectations for two independent uniform byte images
IDEAL_NPCR_PERCENT = 100.0 * 255.0 / 256.0
IDEAL_UACI_PERCENT = 100.0 * (256.0 * 256.0 - 1.0) / (3.0 * 256.0 * 255.0)


# ========================
# Histogram and entropy
# ========================

def histogram(img: GrayImage) -> np.ndarray:
    """256 intensity counts summing to the pixel count."""
    return np.bincount(img.flat(), minlength=256).astype(np.int64)


def shannon_entropy(img: GrayImage) -> float:
    """-sum p log2 p over the intensity histogram; empty bins contribute 0."""
    counts = histogram(img)
    p = counts[counts > 0] / img.size
    return float(max(0.0, -np.sum(p * np.log2(p))))


def chi_square_uniformity(img: GrayImage) -> float:
    """sum (count - n/256)^2 / (n/256)."""
    expected = img.size / 256.0
    counts = histogram(img).astype(np.float64)
    return float(np.sum((counts - expected) ** 2) / expected)


def chi_square_report(img: GrayImage, alpha: Optional[float] = None) -> UniformityReport:
    """Chi-square statistic with its critical value and p-value at 255 degrees of freedom."""
    alpha = get_settings().UNIFORMITY_ALPHA if alpha is None else alpha
    statistic = chi_square_uniformity(img)
    critical = float(stats.chi2.ppf(1.0 - alpha, CHI_SQUARE_DOF))
    return UniformityReport(
        statistic=statistic,
        degrees_of_freedom=CHI_SQUARE_DOF,
        alpha=alpha,
        critical_value=critical,
        p_value=float(stats.chi2.sf(statistic, CHI_SQUARE_DOF)),
        uniform=statistic < critical,
    )


# ========================
# Adjacent-pixel correlation
# ========================

def _pair_views(img: GrayImage, direction: Direction) -> tuple[np.ndarray, np.ndarray]:
    a = img.pixels
    direction = Direction(direction)
    if direction is Direction.HORIZONTAL:
        return a[:, :-1], a[:, 1:]
    if direction is Direction.VERTICAL:
        return a[:-1, :], a[1:, :]
    return a[:-1, :-1], a[1:, 1:]


def adjacent_pairs(
    img: GrayImage,
    direction: Direction,
    limit: Optional[int] = None,
    seed: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Adjacent (x, y) samples in one direction, row-major.

    With a limit, a reproducible random subset of that many pairs is drawn
    (for scatter plots); without one, every pair is returned.
    """
    first, second = _pair_views(img, direction)
    x = first.reshape(-1)
    y = second.reshape(-1)
    if x.size == 0:
        raise DegenerateImageError(
            f"{img.width}x{img.height} image has no {Direction(direction).value} pairs"
        )
    if limit is not None and limit < x.size:
        pick = np.sort(np.random.default_rng(seed).choice(x.size, size=limit, replace=False))
        x, y = x[pick], y[pick]
    return x.copy(), y.copy()


def adjacent_correlation(img: GrayImage, direction: Direction) -> float:
    """
    Pearson coefficient over all adjacent pairs in the given direction.

    Means are taken over the paired samples. A zero-variance series gives 0.
    """
    x, y = adjacent_pairs(img, direction)
    dx = x.astype(np.float64) - x.mean()
    dy = y.astype(np.float64) - y.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        return 0.0
    r = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def correlation_report(img: GrayImage) -> CorrelationReport:
    h = adjacent_correlation(img, Direction.HORIZONTAL)
    v = adjacent_correlation(img, Direction.VERTICAL)
    d = adjacent_correlation(img, Direction.DIAGONAL)
    return CorrelationReport(
        horizontal=h,
        vertical=v,
        diagonal=d,
        mean_abs=(abs(h) + abs(v) + abs(d)) / 3.0,
    )


# ========================
# Whole-image evaluation
# ========================

def evaluate_image(img: GrayImage, source: str = "", kind: str = "plain") -> ImageReport:
    """Entropy, histogram, correlation and uniformity of one image."""
    try:
        correlation = correlation_report(img)
    except DegenerateImageError:
        logger.warning(f"{source or 'image'}: too small for correlation in every direction")
        correlation = None

    return ImageReport(
        source=source,
        kind=kind,
        width=img.width,
        height=img.height,
        entropy=shannon_entropy(img),
        correlation=correlation,
        uniformity=chi_square_report(img),
        histogram=[int(c) for c in histogram(img)],
    )


async def analyze_many(
    items: Iterable[tuple[GrayImage, str, str]],
    max_concurrency: Optional[int] = None,
) -> list[ImageReport]:
    """
    Evaluate (image, source, kind) triples concurrently.

    Results come back in input order.
    """
    limit = max_concurrency or get_settings().ANALYZE_MAX_CONCURRENCY
    semaphore = asyncio.Semaphore(limit)

    async def _one(img: GrayImage, source: str, kind: str) -> ImageReport:
        async with semaphore:
            return await asyncio.to_thread(evaluate_image, img, source, kind)

    return list(await asyncio.gather(*(_one(*item) for item in items)))


# ========================
# Sensitivity
# ========================

def compare_ciphers(c1: GrayImage, c2: GrayImage) -> DifferentialReport:
    """NPCR, UACI and the absolute difference image of two equally sized images."""
    if c1.pixels.shape != c2.pixels.shape:
        raise ValueError("images must have identical dimensions")
    a = c1.pixels.astype(np.int16)
    b = c2.pixels.astype(np.int16)
    diff = np.abs(a - b)
    npcr = 100.0 * float(np.count_nonzero(diff)) / diff.size
    uaci = 100.0 * float(diff.mean()) / 255.0
    return DifferentialReport(
        npcr_percent=npcr,
        uaci_percent=uaci,
        diff_image=GrayImage(diff.astype(np.uint8)),
    )


def _cipher_image(img: GrayImage, key: bytes) -> GrayImage:
    c = encrypt(img, key)
    return GrayImage.from_bytes(c.padded_width, c.padded_height, c.cipher_pixels)


def flip_pixel_bit(img: GrayImage, flip: FlipSpec) -> GrayImage:
    flip.check_bounds(img.width, img.height)
    pixels = img.pixels.copy()
    pixels[flip.row, flip.col] ^= np.uint8(1 << flip.bit)
    return GrayImage(pixels)


def differential_test(img: GrayImage, key: bytes, flip: Optional[FlipSpec] = None) -> DifferentialReport:
    """
    Encrypt img and a copy with one bit toggled, and compare the cipher pixels.

    The default flip is the least significant bit of pixel (0, 0).
    """
    flip = flip or FlipSpec()
    flipped = flip_pixel_bit(img, flip)
    report = compare_ciphers(_cipher_image(img, key), _cipher_image(flipped, key))
    logger.info(
        f"Differential test at ({flip.row},{flip.col}) bit {flip.bit}: "
        f"NPCR={report.npcr_percent:.4f}% UACI={report.uaci_percent:.4f}%"
    )
    return report


def key_sensitivity_test(img: GrayImage, key: bytes, bit: int = 0) -> KeySensitivityReport:
    """
    Flip one key bit; compare the two ciphertexts and try decrypting with the wrong key.
    """
    other = flip_key_bit(key, bit)
    container = encrypt(img, key)
    cipher = GrayImage.from_bytes(
        container.padded_width, container.padded_height, container.cipher_pixels
    )
    cipher_diff = compare_ciphers(cipher, _cipher_image(img, other))

    try:
        recovered = decrypt(container, other)
    except WrongKeyError:
        return KeySensitivityReport(
            key_bit=bit,
            cipher_npcr_percent=cipher_diff.npcr_percent,
            cipher_uaci_percent=cipher_diff.uaci_percent,
            wrong_key_detected=True,
        )

    return KeySensitivityReport(
        key_bit=bit,
        cipher_npcr_percent=cipher_diff.npcr_percent,
        cipher_uaci_percent=cipher_diff.uaci_percent,
        wrong_key_detected=False,
        decrypted_entropy=shannon_entropy(recovered),
        decrypted_diff_percent=compare_ciphers(img, recovered).npcr_percent,
    )
