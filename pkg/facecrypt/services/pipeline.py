"""
End-to-end cipher: pad -> segment -> permute -> confuse -> container, and back.

The segmentation record has to travel with the ciphertext. It is stored as
u32 little-endian entries XORed with a keystream from the key's mask seed.
"""

import logging

import numpy as np

from facecrypt.core.exceptions import InvalidFapsRecordError, WrongKeyError
from facecrypt.core.padding import crop_image, pad_image
from facecrypt.core.security import derive_key_material
from facecrypt.models.chaos import ChaoticParams, KeyMaterial
from facecrypt.models.container import CipherContainer
from facecrypt.models.faps import FapsRecord
from facecrypt.models.image import GrayImage
from facecrypt.models.trace import StageTrace
from facecrypt.services.chaos import keystream
from facecrypt.services.confuse import confuse_image, deconfuse_image
from facecrypt.services.faps import segment, unsegment
from facecrypt.services.permute import inverse_permute, permute_image

logger = logging.getLogger(__name__)

_INDEX_DTYPE = np.dtype("<u4")


def mask_index_map(index_map: np.ndarray, mask_init: ChaoticParams) -> bytes:
    """Serialize index_map as u32 LE and XOR it with keystream(mask_init, 4 * len)."""
    raw = np.ascontiguousarray(index_map, dtype=_INDEX_DTYPE).view(np.uint8)
    return np.bitwise_xor(raw, keystream(mask_init, raw.size)).tobytes()


def unmask_index_map(masked: bytes, mask_init: ChaoticParams) -> np.ndarray:
    """Inverse of mask_index_map; the result is not validated."""
    raw = np.frombuffer(masked, dtype=np.uint8)
    plain = np.bitwise_xor(raw, keystream(mask_init, raw.size))
    return plain.view(_INDEX_DTYPE).astype(np.uint32)


def _run_stages(img: GrayImage, km: KeyMaterial) -> StageTrace:
    padded = pad_image(img)
    segmented, record = segment(padded)
    permuted = permute_image(segmented, km.perm_init)
    confused = confuse_image(permuted, km.conf_init)
    return StageTrace(
        original=img,
        padded=padded,
        segmented=segmented,
        permuted=permuted,
        confused=confused,
        record=record,
    )


def _to_container(trace: StageTrace, km: KeyMaterial) -> CipherContainer:
    return CipherContainer(
        orig_width=trace.original.width,
        orig_height=trace.original.height,
        padded_width=trace.padded.width,
        padded_height=trace.padded.height,
        masked_faps=mask_index_map(trace.record.index_map, km.mask_init),
        cipher_pixels=trace.confused.to_bytes(),
    )


def encrypt_stages(img: GrayImage, key_bytes: bytes) -> StageTrace:
    """Run every encryption stage and keep each intermediate image."""
    return _run_stages(img, derive_key_material(key_bytes))


def encrypt_with_trace(img: GrayImage, key_bytes: bytes) -> tuple[CipherContainer, StageTrace]:
    km = derive_key_material(key_bytes)
    trace = _run_stages(img, km)
    container = _to_container(trace, km)
    logger.debug(f"Encrypted {img.width}x{img.height} into {container!r}")
    return container, trace


def encrypt(img: GrayImage, key_bytes: bytes) -> CipherContainer:
    """Encrypt a grayscale image into a container."""
    return encrypt_with_trace(img, key_bytes)[0]


def decrypt(c: CipherContainer, key_bytes: bytes) -> GrayImage:
    """
    Invert encrypt: confusion, then permutation, then segmentation, then crop.

    Raises:
        WrongKeyError: If the unmasked index map is not a bijection, which is
            what a wrong key or a corrupted index map produces
    """
    km = derive_key_material(key_bytes)
    record = FapsRecord(index_map=unmask_index_map(c.masked_faps, km.mask_init))
    cipher = GrayImage.from_bytes(c.padded_width, c.padded_height, c.cipher_pixels)
    permuted = deconfuse_image(cipher, km.conf_init)
    segmented = inverse_permute(permuted, km.perm_init)
    try:
        padded = unsegment(segmented, record)
    except InvalidFapsRecordError as e:
        logger.warning(f"Index map rejected during decryption: {e}")
        raise WrongKeyError() from e

    return crop_image(padded, c.orig_width, c.orig_height)
