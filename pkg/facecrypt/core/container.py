"""
Bit-exact ciphertext container codec.

Layout (little-endian):
    0   magic "FACE"
    4   version u8 (= 1)
    5   orig_width, orig_height, padded_width, padded_height  (u32 each)
    21  masked_faps   4 * padded_width * padded_height bytes
        cipher_pixels padded_width * padded_height bytes, row-major
"""

import logging
import struct

from facecrypt.core.exceptions import (
    BadMagicError,
    ContainerLayoutError,
    TruncatedContainerError,
    UnsupportedVersionError,
)
from facecrypt.models.container import (
    CONTAINER_MAGIC,
    CONTAINER_VERSION,
    INDEX_ENTRY_SIZE,
    CipherContainer,
)

logger = logging.getLogger(__name__)

HEADER = struct.Struct("<4sB4I")
HEADER_SIZE = HEADER.size  # 21


def serialize_container(c: CipherContainer) -> bytes:
    """Encode a container; invariants were checked when it was constructed."""
    header = HEADER.pack(
        c.magic, c.version, c.orig_width, c.orig_height, c.padded_width, c.padded_height
    )
    return header + c.masked_faps + c.cipher_pixels


def deserialize_container(data: bytes) -> CipherContainer:
    """
    Decode a container.

    Raises:
        TruncatedContainerError: If the header or body is shorter than declared
        BadMagicError: If the first four bytes are not "FACE"
        UnsupportedVersionError: If the version byte is not 1
        ContainerLayoutError: If declared dimensions break the format invariants
            or trailing bytes follow the body
    """
    if len(data) < HEADER_SIZE:
        raise TruncatedContainerError(
            f"truncated container: {len(data)} bytes, header needs {HEADER_SIZE}"
        )

    magic, version, orig_w, orig_h, pad_w, pad_h = HEADER.unpack_from(data, 0)
    if magic != CONTAINER_MAGIC:
        raise BadMagicError()
    if version != CONTAINER_VERSION:
        raise UnsupportedVersionError(f"unsupported version: {version}")

    pixel_count = pad_w * pad_h
    faps_end = HEADER_SIZE + INDEX_ENTRY_SIZE * pixel_count
    body_end = faps_end + pixel_count
    if len(data) < body_end:
        raise TruncatedContainerError(
            f"truncated container: {len(data)} bytes, {pad_w}x{pad_h} body needs {body_end}"
        )
    if len(data) > body_end:
        raise ContainerLayoutError(f"{len(data) - body_end} trailing bytes after body")

    logger.debug(f"Decoded container header {orig_w}x{orig_h} padded {pad_w}x{pad_h}")
    return CipherContainer(
        orig_width=orig_w,
        orig_height=orig_h,
        padded_width=pad_w,
        padded_height=pad_h,
        masked_faps=bytes(data[HEADER_SIZE:faps_end]),
        cipher_pixels=bytes(data[faps_end:body_end]),
        magic=magic,
        version=version,
    )


def looks_like_container(data: bytes) -> bool:
    """True when data starts with the container magic."""
    return data[:4] == CONTAINER_MAGIC
