"""
Feature-aware pixel segmentation (stage 1).

Sobel edge strength splits the image into high-edge (HE) and low-edge (LE)
pixels around an Otsu threshold; HE samples are written first in descending
intensity, LE samples after them in ascending intensity. The record of where
every sample came from is what decryption needs to undo the rearrangement.
"""

import logging

import numpy as np
from scipy import ndimage

from facecrypt.core.exceptions import InvalidFapsRecordError
from facecrypt.models.faps import EdgeMap, FapsRecord, FeatureMaps, GradientPair
from facecrypt.models.image import GrayImage

logger = logging.getLogger(__name__)

SOBEL_X = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=np.float64)
SOBEL_Y = np.array([[1, 2, 1], [0, 0, 0], [-1, -2, -1]], dtype=np.float64)

OTSU_BINS = 256


# ========================
# Edge detection
# ========================


def sobel_gradients(img: GrayImage) -> GradientPair:
    """
    Horizontal and vertical Sobel responses with replicate border padding.

    Each output pixel is the sum of kernel[i][j] * I(y + i - 1, x + j - 1), the
    kernel applied unflipped; all terms are small integers, so the float64 sums
    are exact.
    """
    pixels = img.pixels.astype(np.float64)
    return GradientPair(
        gx=ndimage.correlate(pixels, SOBEL_X, mode="nearest"),
        gy=ndimage.correlate(pixels, SOBEL_Y, mode="nearest"),
    )


def edge_map(g: GradientPair) -> EdgeMap:
    """sqrt(gx^2 + gy^2) scaled by its maximum; identically zero when the maximum is 0."""
    magnitude = np.sqrt(g.gx * g.gx + g.gy * g.gy)
    peak = float(magnitude.max())
    if peak <= 0.0:
        return EdgeMap(np.zeros_like(magnitude))
    return EdgeMap(magnitude / peak)


# ========================
# Thresholding and classification
# ========================


def edge_histogram(e: EdgeMap) -> np.ndarray:
    """Counts over 256 equal-width bins of [0, 1]; the value 1.0 falls in the last bin."""
    bins = np.minimum((e.values * OTSU_BINS).astype(np.int64), OTSU_BINS - 1)
    return np.bincount(bins.ravel(), minlength=OTSU_BINS)


def otsu_threshold(e: EdgeMap) -> float:
    """
    Otsu threshold of the quantized edge map.

    Candidate k splits bins [0, k] from [k + 1, 255] and stands for the bin upper
    edge (k + 1) / 256. Between-class variance is compared exactly as the integer
    ratio (N * S0 - n0 * S)^2 / (n0 * n1), which is N^2 * sigma_B^2, so ties are
    real ties; the smallest maximizing edge wins. A map occupying a single bin
    returns 0.
    """
    hist = [int(c) for c in edge_histogram(e)]
    if sum(1 for c in hist if c) <= 1:
        return 0.0

    total = sum(hist)
    total_sum = sum(k * c for k, c in enumerate(hist))

    best_k = -1
    best_num, best_den = 0, 1
    n0 = s0 = 0
    for k in range(OTSU_BINS - 1):
        n0 += hist[k]
        s0 += k * hist[k]
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            continue
        num = (total * s0 - n0 * total_sum) ** 2
        den = n0 * n1
        if best_k < 0 or num * best_den > best_num * den:
            best_k, best_num, best_den = k, num, den

    return (best_k + 1) / OTSU_BINS


def classify_pixels(e: EdgeMap, t: float) -> np.ndarray:
    """Boolean grid, True where the pixel is high-edge (e > t, strictly)."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {t!r}")
    return e.values > t


# ========================
# Sorting and grouping
# ========================


def arrange_by_mask(img: GrayImage, high_edge: np.ndarray, threshold: float | None = None):
    """
    Group HE samples (descending) before LE samples (ascending).

    Ties keep ascending original index in both groups. Returns the rearranged
    image, same dimensions, and its FapsRecord.
    """
    if high_edge.shape != img.pixels.shape:
        raise ValueError("mask shape must match the image")

    flat = img.flat()
    mask = high_edge.reshape(-1)
    he_idx = np.flatnonzero(mask)
    le_idx = np.flatnonzero(~mask)

    he_order = he_idx[np.argsort(-flat[he_idx].astype(np.int16), kind="stable")]
    le_order = le_idx[np.argsort(flat[le_idx], kind="stable")]
    index_map = np.concatenate([he_order, le_order])

    segmented = GrayImage(flat[index_map].reshape(img.height, img.width))
    return segmented, FapsRecord(index_map=index_map, threshold=threshold)


def feature_maps(img: GrayImage) -> FeatureMaps:
    """Run the whole segmentation stage and keep every intermediate product."""
    gradients = sobel_gradients(img)
    edges = edge_map(gradients)
    threshold = otsu_threshold(edges)
    high_edge = classify_pixels(edges, threshold)
    segmented, record = arrange_by_mask(img, high_edge, threshold)

    logger.debug(
        f"FAPS {img.width}x{img.height}: threshold={threshold:.6f} "
        f"HE={int(np.count_nonzero(high_edge))} LE={img.size - int(np.count_nonzero(high_edge))}"
    )
    return FeatureMaps(
        gradients=gradients,
        edges=edges,
        threshold=threshold,
        high_edge=high_edge,
        segmented=segmented,
        record=record,
    )


def segment(img: GrayImage) -> tuple[GrayImage, FapsRecord]:
    maps = feature_maps(img)
    return maps.segmented, maps.record


def validate_record(rec: FapsRecord, length: int) -> np.ndarray:
    """
    Check that rec.index_map is a bijection on range(length).

    Returns the map as an int64 array ready for indexing.
    """
    index_map = rec.index_map.astype(np.int64)
    if index_map.size != length:
        raise InvalidFapsRecordError(
            f"invalid FAPS record: {index_map.size} entries for {length} pixels"
        )
    if length and int(index_map.max()) >= length:
        raise InvalidFapsRecordError("invalid FAPS record: index out of range")
    if not np.all(np.bincount(index_map, minlength=length) == 1):
        raise InvalidFapsRecordError("invalid FAPS record: indices repeat")
    return index_map


def unsegment(seg: GrayImage, rec: FapsRecord) -> GrayImage:
    """Scatter every sample back to its original position: out[index_map[p]] = seg[p]."""
    index_map = validate_record(rec, seg.size)
    out = np.empty(seg.size, dtype=np.uint8)
    out[index_map] = seg.flat()
    return GrayImage(out.reshape(seg.height, seg.width))


# ========================
# Visualization helpers
# ========================


def edge_map_image(e: EdgeMap) -> GrayImage:
    """Edge map rendered as round(255 * e)."""
    return GrayImage(np.rint(e.values * 255.0).astype(np.uint8))


def mask_image(high_edge: np.ndarray) -> GrayImage:
    """HE pixels white, LE pixels black."""
    return GrayImage(np.where(high_edge, 255, 0).astype(np.uint8))
