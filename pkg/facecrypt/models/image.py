"""Grayscale image model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from facecrypt.core.exceptions import ImageValueError


@dataclass(frozen=True, eq=False)
class GrayImage:
    """
    Rectangular grid of 8-bit intensity samples.

    `pixels` is a read-only uint8 array of shape (height, width); its row-major
    flattening is the canonical sample order used by every stage.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = self.pixels
        if not isinstance(arr, np.ndarray) or arr.ndim != 2:
            raise ImageValueError("pixels must be a 2-D array")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ImageValueError("width and height must be at least 1")
        if arr.dtype != np.uint8:
            raise ImageValueError(f"pixels must be uint8, got {arr.dtype}")
        if arr.flags.writeable or not arr.flags.c_contiguous:
            arr = np.ascontiguousarray(arr).copy()
            arr.flags.writeable = False
            object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_array(cls, values) -> GrayImage:
        """Build from any 2-D integer array-like with values in [0, 255]."""
        arr = np.asarray(values)
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ImageValueError("pixel values must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        return cls(arr)

    @classmethod
    def from_bytes(cls, width: int, height: int, data: bytes) -> GrayImage:
        """Build from row-major sample bytes."""
        if len(data) != width * height:
            raise ImageValueError(
                f"expected {width * height} samples for {width}x{height}, got {len(data)}"
            )
        return cls(np.frombuffer(data, dtype=np.uint8).reshape(height, width))

    @classmethod
    def filled(cls, width: int, height: int, value: int = 0) -> GrayImage:
        return cls.from_array(np.full((height, width), value, dtype=np.uint8))

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def size(self) -> int:
        return int(self.pixels.size)

    def flat(self) -> np.ndarray:
        """Row-major view of the samples."""
        return self.pixels.reshape(-1)

    def to_bytes(self) -> bytes:
        return self.pixels.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"<GrayImage {self.width}x{self.height}>"
