"""Key handling: CLI key specs and deterministic per-stage key derivation."""

import hashlib
import re
from typing import Optional

from facecrypt.core.exceptions import EmptyKeyError, KeySpecError
from facecrypt.models.chaos import Digest, KeyMaterial
from facecrypt.services.chaos import hash_to_params

# Domain separation tags, ASCII
PERM_TAG = b"perm"
CONF_TAG = b"conf"
MASK_TAG = b"faps"

HEX_KEY_LENGTH = 64
_HEX_KEY = re.compile(r"^[0-9a-fA-F]{64}$")


def _tagged(master: bytes, tag: bytes) -> Digest:
    return Digest(hashlib.sha256(master + tag).digest())


def derive_key_material(key_bytes: bytes) -> KeyMaterial:
    """
    Derive the master digest and the three stage seeds from raw key bytes.

    Args:
        key_bytes: decoded hex key or UTF-8 passphrase bytes

    Returns:
        KeyMaterial whose perm/conf/mask seeds come from SHA-256(master || tag)

    Raises:
        EmptyKeyError: If key_bytes is empty
    """
    if not key_bytes:
        raise EmptyKeyError()

    master = Digest(hashlib.sha256(key_bytes).digest())
    return KeyMaterial(
        master=master,
        perm_init=hash_to_params(_tagged(master, PERM_TAG)),
        conf_init=hash_to_params(_tagged(master, CONF_TAG)),
        mask_init=hash_to_params(_tagged(master, MASK_TAG)),
    )


def resolve_key(key_hex: Optional[str] = None, passphrase: Optional[str] = None) -> bytes:
    """Turn exactly one of --key-hex / --passphrase into key bytes."""
    if key_hex is not None and passphrase is not None:
        raise KeySpecError("give either --key-hex or --passphrase, not both")
    if key_hex is None and passphrase is None:
        raise KeySpecError("a key is required: --key-hex or --passphrase")

    if key_hex is not None:
        if not _HEX_KEY.match(key_hex):
            raise KeySpecError(f"--key-hex must be {HEX_KEY_LENGTH} hexadecimal characters")
        return bytes.fromhex(key_hex)

    if passphrase == "":
        raise EmptyKeyError()
    return passphrase.encode("utf-8")


def flip_key_bit(key_bytes: bytes, bit: int) -> bytes:
    """Return key_bytes with bit `bit` (0 = LSB of the first byte) toggled."""
    if not key_bytes:
        raise EmptyKeyError()
    if not 0 <= bit < 8 * len(key_bytes):
        raise KeySpecError(f"key bit {bit} out of range for a {len(key_bytes)}-byte key")
    out = bytearray(key_bytes)
    out[bit // 8] ^= 1 << (bit % 8)
    return bytes(out)
