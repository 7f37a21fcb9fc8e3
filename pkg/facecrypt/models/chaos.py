"""Chaotic-map parameter and key material models."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

DIGEST_SIZE = 32

R_MIN = 3.9
R_MAX = 4.0


class Digest(bytes):
    """A SHA-256 output: exactly 32 bytes."""

    def __new__(cls, value: bytes):
        if len(value) != DIGEST_SIZE:
            raise ValueError(f"digest must be {DIGEST_SIZE} bytes, got {len(value)}")
        return super().__new__(cls, value)

    @classmethod
    def of(cls, data: bytes) -> Digest:
        return cls(hashlib.sha256(data).digest())


@dataclass(frozen=True)
class ChaoticParams:
    """Logistic-map state x in (0, 1) and control parameter r in [3.9, 4.0)."""

    x: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and 0.0 < self.x < 1.0):
            raise ValueError(f"x must lie in (0, 1), got {self.x!r}")
        if not (R_MIN <= self.r < R_MAX):
            raise ValueError(f"r must lie in [{R_MIN}, {R_MAX}), got {self.r!r}")


@dataclass(frozen=True)
class KeyMaterial:
    """Master digest plus the domain-separated initial parameters of each keyed stage."""

    master: Digest = field(repr=False)
    perm_init: ChaoticParams
    conf_init: ChaoticParams
    mask_init: ChaoticParams
