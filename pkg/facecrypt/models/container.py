"""Ciphertext container model."""

from dataclasses import dataclass

from facecrypt.core.exceptions import ContainerLayoutError

CONTAINER_MAGIC = b"FACE"
CONTAINER_VERSION = 1
ALIGNMENT = 32
INDEX_ENTRY_SIZE = 4


@dataclass(frozen=True)
class CipherContainer:
    """Encrypted artifact: header dimensions, masked FAPS index map and cipher pixels."""

    orig_width: int
    orig_height: int
    padded_width: int
    padded_height: int
    masked_faps: bytes
    cipher_pixels: bytes
    magic: bytes = CONTAINER_MAGIC
    version: int = CONTAINER_VERSION

    def __post_init__(self):
        dims = (self.orig_width, self.orig_height, self.padded_width, self.padded_height)
        if any(d < 1 or d > 0xFFFFFFFF for d in dims):
            raise ContainerLayoutError("dimensions must be u32 values of at least 1")
        if self.padded_width % ALIGNMENT or self.padded_height % ALIGNMENT:
            raise ContainerLayoutError(f"padded dimensions must be multiples of {ALIGNMENT}")
        if self.padded_width < self.orig_width or self.padded_height < self.orig_height:
            raise ContainerLayoutError("padded dimensions smaller than original")
        if len(self.magic) != 4 or not (0 <= self.version <= 0xFF):
            raise ContainerLayoutError("magic must be 4 bytes and version a u8")
        if len(self.masked_faps) != INDEX_ENTRY_SIZE * self.pixel_count:
            raise ContainerLayoutError("masked_faps length != 4 x padded pixel count")
        if len(self.cipher_pixels) != self.pixel_count:
            raise ContainerLayoutError("cipher_pixels length != padded pixel count")

    @property
    def pixel_count(self) -> int:
        return self.padded_width * self.padded_height

    def __repr__(self) -> str:
        return (
            f"<CipherContainer v{self.version} {self.orig_width}x{self.orig_height}"
            f" padded {self.padded_width}x{self.padded_height}>"
        )
