from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from facecrypt.core.exceptions import InvalidFapsRecordError
from facecrypt.models.faps import EdgeMap, FapsRecord, GradientPair
from facecrypt.models.image import GrayImage
from facecrypt.services.faps import (
    arrange_by_mask,
    classify_pixels,
    edge_histogram,
    edge_map,
    edge_map_image,
    feature_maps,
    mask_image,
    otsu_threshold,
    segment,
    sobel_gradients,
    unsegment,
    validate_record,
)
from facecrypt.tests.factories import natural_image, random_image

small_images = st.tuples(
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=0, max_value=2**32 - 1),
).map(lambda t: random_image(t[0], t[1], seed=t[2], low=0, high=8))


def sobel_oracle(pixels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-pixel kernel application with clamped (replicated) coordinates."""
    kx = [[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]]
    ky = [[1, 2, 1], [0, 0, 0], [-1, -2, -1]]
    h, w = pixels.shape
    gx = np.zeros((h, w))
    gy = np.zeros((h, w))
    for y in range(h):
        for x in range(w):
            sx = sy = 0
            for i in range(3):
                for j in range(3):
                    v = int(pixels[min(max(y + i - 1, 0), h - 1), min(max(x + j - 1, 0), w - 1)])
                    sx += kx[i][j] * v
                    sy += ky[i][j] * v
            gx[y, x], gy[y, x] = sx, sy
    return gx, gy


def otsu_oracle(values: np.ndarray) -> float:
    """Exhaustive search over every bin edge with exact rational arithmetic."""
    bins = [min(int(v * 256), 255) for v in values.reshape(-1)]
    hist = Counter(bins)
    if len(hist) <= 1:
        return 0.0
    total = len(bins)
    best_k, best = None, Fraction(-1)
    for k in range(255):
        n0 = sum(c for b, c in hist.items() if b <= k)
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            continue
        mu0 = Fraction(sum(b * c for b, c in hist.items() if b <= k), n0)
        mu1 = Fraction(sum(b * c for b, c in hist.items() if b > k), n1)
        variance = Fraction(n0, total) * Fraction(n1, total) * (mu0 - mu1) ** 2
        if variance > best:
            best_k, best = k, variance
    return (best_k + 1) / 256


# ========================
# Sobel and edge map
# ========================

def test_sobel_constant_image_is_flat():
    g = sobel_gradients(GrayImage.filled(5, 4, 7))
    assert not g.gx.any()
    assert not g.gy.any()


def test_sobel_vertical_step():
    img = GrayImage.from_array([[0, 0, 255, 255]] * 4)
    g = sobel_gradients(img)
    assert not g.gy.any()
    assert g.gx.tolist() == [[0.0, 1020.0, 1020.0, 0.0]] * 4


def test_sobel_single_pixel():
    g = sobel_gradients(GrayImage.filled(1, 1, 200))
    assert g.gx.tolist() == [[0.0]]
    assert g.gy.tolist() == [[0.0]]


@pytest.mark.parametrize("seed", range(5))
def test_sobel_matches_per_pixel_oracle(seed):
    img = random_image(9, 7, seed=seed)
    g = sobel_gradients(img)
    gx, gy = sobel_oracle(img.pixels)
    assert np.array_equal(g.gx, gx)
    assert np.array_equal(g.gy, gy)


@pytest.mark.parametrize("width, height", [(1, 6), (6, 1), (2, 2), (2, 3)])
def test_sobel_narrow_images_replicate_borders(width, height):
    img = random_image(width, height, seed=width * 10 + height)
    g = sobel_gradients(img)
    gx, gy = sobel_oracle(img.pixels)
    assert g.gx.dtype == np.float64
    assert np.array_equal(g.gx, gx)
    assert np.array_equal(g.gy, gy)


def test_sobel_kernel_is_not_flipped():
    # bright top row: the y kernel weights the row above positively
    img = GrayImage.from_array([[255] * 4, [0] * 4, [0] * 4])
    g = sobel_gradients(img)
    assert g.gy[1].tolist() == [1020.0] * 4
    assert not g.gx.any()


def test_edge_map_zero_gradients():
    zeros = np.zeros((3, 3))
    assert not edge_map(GradientPair(zeros, zeros)).values.any()


def test_edge_map_normalizes_to_peak():
    gx = np.zeros((2, 2))
    gy = np.zeros((2, 2))
    gx[1, 0], gy[1, 0] = 3.0, 4.0
    e = edge_map(GradientPair(gx, gy))
    assert e.values.tolist() == [[0.0, 0.0], [1.0, 0.0]]


def test_edge_map_uniform_magnitude():
    e = edge_map(GradientPair(np.full((2, 3), 6.0), np.full((2, 3), -8.0)))
    assert np.all(e.values == 1.0)


def test_edge_map_rejects_out_of_range_values():
    with pytest.raises(ValueError):
        EdgeMap(np.array([[0.5, 1.5]]))


# ========================
# Otsu threshold and classification
# ========================

def test_otsu_all_zero_map():
    assert otsu_threshold(EdgeMap(np.zeros((4, 4)))) == 0.0


def test_otsu_two_populations_picks_smallest_edge():
    values = np.array([[0.0, 1.0], [0.0, 1.0]])
    t = otsu_threshold(EdgeMap(values))
    assert t == 1 / 256
    assert 0.0 < t < 1.0


def test_otsu_matches_exhaustive_oracle_on_random_maps():
    rng = np.random.default_rng(2024)
    for i in range(100):
        shape = (int(rng.integers(1, 12)), int(rng.integers(1, 12)))
        if i % 3 == 0:
            values = rng.random(shape)
        elif i % 3 == 1:
            values = rng.beta(0.5, 3.0, size=shape)
        else:
            values = rng.integers(0, 6, size=shape) / 5.0
        assert otsu_threshold(EdgeMap(values)) == otsu_oracle(values)


def test_otsu_on_real_edge_map_matches_oracle():
    edges = edge_map(sobel_gradients(natural_image(48, 40, seed=3)))
    assert otsu_threshold(edges) == otsu_oracle(edges.values)


def test_edge_histogram_puts_one_in_last_bin():
    hist = edge_histogram(EdgeMap(np.array([[0.0, 1.0, 0.999]])))
    assert hist[0] == 1
    assert hist[255] == 2
    assert hist.sum() == 3


def test_classify_strict_inequality():
    assert not classify_pixels(EdgeMap(np.zeros((2, 2))), 0.0).any()
    assert classify_pixels(EdgeMap(np.ones((2, 2))), 0.0).all()
    mixed = classify_pixels(EdgeMap(np.array([[0.2, 0.8]])), 0.5)
    assert mixed.tolist() == [[False, True]]


def test_classify_rejects_threshold_outside_unit_interval():
    with pytest.raises(ValueError):
        classify_pixels(EdgeMap(np.zeros((1, 1))), 1.5)


# ========================
# Sorting and grouping
# ========================

def test_arrange_by_mask_hand_example():
    img = GrayImage.from_array([[10, 200], [200, 10]])
    mask = np.array([[False, True], [True, False]])
    seg, rec = arrange_by_mask(img, mask)
    assert seg.flat().tolist() == [200, 200, 10, 10]
    assert rec.index_map.tolist() == [1, 2, 0, 3]
    assert unsegment(seg, rec) == img


def test_arrange_by_mask_orders_groups_and_ties():
    img = GrayImage.from_array([[5, 9, 5, 1], [9, 3, 3, 7]])
    mask = np.array([[True, True, False, False], [True, False, False, True]])
    seg, rec = arrange_by_mask(img, mask)
    # HE: 9 (idx 1), 9 (idx 4), 7 (idx 7), 5 (idx 0); LE ascending: 1, 3, 3, 5
    assert seg.flat().tolist() == [9, 9, 7, 5, 1, 3, 3, 5]
    assert rec.index_map.tolist() == [1, 4, 7, 0, 3, 5, 6, 2]


def test_arrange_by_mask_shape_mismatch():
    with pytest.raises(ValueError):
        arrange_by_mask(GrayImage.filled(2, 2), np.zeros((3, 3), dtype=bool))


def test_segment_constant_image_is_identity():
    img = GrayImage.filled(6, 5, 42)
    seg, rec = segment(img)
    assert seg == img
    assert rec.index_map.tolist() == list(range(30))
    assert rec.threshold == 0.0


def test_segment_puts_high_edge_first():
    img = natural_image(64, 48, seed=5)
    maps = feature_maps(img)
    he = maps.high_edge_count
    seg = maps.segmented.flat()
    assert 0 < he < img.size
    assert np.all(np.diff(seg[:he].astype(int)) <= 0)
    assert np.all(np.diff(seg[he:].astype(int)) >= 0)
    assert maps.record.threshold == maps.threshold
    assert maps.threshold == otsu_threshold(maps.edges)


@settings(max_examples=60, deadline=None)
@given(small_images)
def test_segment_round_trip_and_multiset(img):
    seg, rec = segment(img)
    assert sorted(seg.flat().tolist()) == sorted(img.flat().tolist())
    assert unsegment(seg, rec) == img


def test_unsegment_identity_map():
    img = natural_image(8, 8, seed=1)
    assert unsegment(img, FapsRecord(np.arange(64))) == img


@pytest.mark.parametrize(
    "index_map",
    [
        [0, 1, 2],          # too short
        [0, 1, 2, 2],       # repeated index
        [0, 1, 2, 4],       # out of range
    ],
)
def test_validate_record_rejects_non_bijections(index_map):
    with pytest.raises(InvalidFapsRecordError, match="invalid FAPS record"):
        validate_record(FapsRecord(np.array(index_map)), 4)


# ========================
# Visualization
# ========================

def test_edge_and_mask_images():
    e = EdgeMap(np.array([[0.0, 0.5, 1.0]]))
    assert edge_map_image(e).flat().tolist() == [0, 128, 255]
    assert mask_image(np.array([[True, False]])).flat().tolist() == [255, 0]
