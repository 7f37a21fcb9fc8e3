"""
Logistic-map primitives.

The recurrence x' = (r * x) * (1 - x) is evaluated one binary64 operation at a
time in plain Python floats, which CPython never contracts into fused
multiply-adds; trajectories are bit-identical across platforms.
"""

import numpy as np

from facecrypt.models.chaos import ChaoticParams, Digest

BURN_IN = 100
X_MIN = 2.0**-32
X_MAX = 1.0 - 2.0**-32
SEED_MATRIX_SIZE = 16


def _clamp(x: float) -> float:
    if x <= 0.0:
        return X_MIN
    if x >= 1.0:
        return X_MAX
    return x


def _orbit(x: float, r: float, n: int, skip: int = BURN_IN) -> list[float]:
    """Iterate `skip` times without recording, then record the next n states."""
    for _ in range(skip):
        x = (r * x) * (1.0 - x)
        if x <= 0.0 or x >= 1.0:
            x = _clamp(x)
    out = [0.0] * n
    for i in range(n):
        x = (r * x) * (1.0 - x)
        if x <= 0.0 or x >= 1.0:
            x = _clamp(x)
        out[i] = x
    return out


def logistic_step(p: ChaoticParams) -> ChaoticParams:
    """One application of the logistic recurrence; r is carried unchanged."""
    x = _clamp((p.r * p.x) * (1.0 - p.x))
    return ChaoticParams(x=x, r=p.r)


def hash_to_params(h: Digest) -> ChaoticParams:
    """
    Re-key the logistic map from a digest.

    x is the digest read as a big-endian fraction of 2**256, realized through its
    64 most significant bits (binary64 cannot hold more), clamped away from the
    fixed points 0 and 1. r = 3.9 + 0.1 * ((H mod 100) / 100) with H the full
    256-bit value.
    """
    if len(h) != 32:
        raise ValueError(f"digest must be 32 bytes, got {len(h)}")

    top = int.from_bytes(bytes(h[:8]), "big")
    x = top / 2**64  # correctly rounded int/int division
    x = min(max(x, X_MIN), X_MAX)

    m = 0
    for byte in h:
        m = (m * 256 + byte) % 100
    r = 3.9 + 0.1 * (m / 100)
    return ChaoticParams(x=x, r=r)


def chaotic_sequence(p: ChaoticParams, n: int) -> np.ndarray:
    """n logistic states following a 100-step burn-in from p."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return np.array(_orbit(p.x, p.r, n), dtype=np.float64)


def permutation_sequence(p: ChaoticParams, n: int) -> np.ndarray:
    """
    Ascending argsort of chaotic_sequence(p, n).

    pi[j] is the index of the j-th smallest value; equal values keep index order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return np.argsort(chaotic_sequence(p, n), kind="stable")


def keystream(p: ChaoticParams, length: int) -> np.ndarray:
    """Bytes floor(256 * x) of the chaotic sequence, clamped to 255."""
    seq = chaotic_sequence(p, length)
    return np.minimum(np.floor(seq * 256.0), 255.0).astype(np.uint8)


def seed_matrix(p: ChaoticParams) -> np.ndarray:
    """16x16 byte matrix filled row-major from the keystream."""
    return keystream(p, SEED_MATRIX_SIZE * SEED_MATRIX_SIZE).reshape(
        SEED_MATRIX_SIZE, SEED_MATRIX_SIZE
    )

