"""Feature-aware segmentation models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from facecrypt.models.image import GrayImage


def _frozen(arr: np.ndarray, dtype) -> np.ndarray:
    out = np.array(arr, dtype=dtype, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class GradientPair:
    """Horizontal and vertical Sobel responses, same shape as the source image."""

    gx: np.ndarray
    gy: np.ndarray

    def __post_init__(self):
        if self.gx.shape != self.gy.shape or self.gx.ndim != 2:
            raise ValueError("gx and gy must be 2-D grids of identical shape")
        object.__setattr__(self, "gx", _frozen(self.gx, np.float64))
        object.__setattr__(self, "gy", _frozen(self.gy, np.float64))


@dataclass(frozen=True, eq=False)
class EdgeMap:
    """Normalized edge intensity, every value in [0, 1]."""

    values: np.ndarray

    def __post_init__(self):
        values = self.values
        if values.ndim != 2:
            raise ValueError("edge map must be a 2-D grid")
        if values.size and (values.min() < 0.0 or values.max() > 1.0):
            raise ValueError("edge values must lie in [0, 1]")
        object.__setattr__(self, "values", _frozen(values, np.float64))


@dataclass(frozen=True, eq=False)
class FapsRecord:
    """
    Segmentation permutation: index_map[p] is the original linear index of the
    sample placed at output position p.

    threshold is None for records rebuilt from a container, which does not carry it.
    """

    index_map: np.ndarray
    threshold: Optional[float] = None

    def __post_init__(self):
        if self.index_map.ndim != 1:
            raise ValueError("index_map must be one-dimensional")
        if self.threshold is not None and not (0.0 <= self.threshold <= 1.0):
            raise ValueError(f"threshold must lie in [0, 1], got {self.threshold!r}")
        object.__setattr__(self, "index_map", _frozen(self.index_map, np.uint32))

    def __len__(self) -> int:
        return int(self.index_map.size)


@dataclass(frozen=True, eq=False)
class FeatureMaps:
    """Every intermediate product of the segmentation stage."""

    gradients: GradientPair
    edges: EdgeMap
    threshold: float
    high_edge: np.ndarray  # True marks HE pixels
    segmented: GrayImage
    record: FapsRecord

    @property
    def high_edge_count(self) -> int:
        return int(np.count_nonzero(self.high_edge))
