"""Exception hierarchy shared by the cipher stages, the container codec and the CLI."""

# Error message constants
ERROR_EMPTY_KEY = "empty key"
ERROR_BAD_MAGIC = "bad magic"
ERROR_UNSUPPORTED_VERSION = "unsupported version"
ERROR_TRUNCATED = "truncated container"
ERROR_UNALIGNED_IMAGE = "unaligned image"
ERROR_INVALID_FAPS_RECORD = "invalid FAPS record"
ERROR_WRONG_KEY = "wrong key or corrupted container"
ERROR_UNSUPPORTED_IMAGE = "unsupported image format"


class FaceCryptError(Exception):
    """Base class for every error raised by facecrypt."""

    default_message = "facecrypt error"

    def __init__(self, message: str | None = None):
        super().__init__(message or self.default_message)


class EmptyKeyError(FaceCryptError):
    """Raised when the key material is empty."""

    default_message = ERROR_EMPTY_KEY


class KeySpecError(FaceCryptError):
    """Raised when the key flags are missing, duplicated or malformed."""

    default_message = "invalid key specification"


class ContainerError(FaceCryptError):
    """Raised when a ciphertext container cannot be encoded or decoded."""

    default_message = "invalid container"


class BadMagicError(ContainerError):
    default_message = ERROR_BAD_MAGIC


class UnsupportedVersionError(ContainerError):
    default_message = ERROR_UNSUPPORTED_VERSION


class TruncatedContainerError(ContainerError):
    default_message = ERROR_TRUNCATED


class ContainerLayoutError(ContainerError):
    """Raised when container fields break the layout invariants."""

    default_message = "container layout violates format invariants"


class UnalignedImageError(FaceCryptError):
    default_message = ERROR_UNALIGNED_IMAGE


class InvalidFapsRecordError(FaceCryptError):
    default_message = ERROR_INVALID_FAPS_RECORD


class WrongKeyError(FaceCryptError):
    """Raised when the unmasked index map is not a bijection."""

    default_message = ERROR_WRONG_KEY


class ImageFormatError(FaceCryptError):
    default_message = ERROR_UNSUPPORTED_IMAGE


class ImageValueError(FaceCryptError):
    """Raised when pixel data does not describe a valid grayscale image."""

    default_message = "invalid grayscale image"


class FlipPositionError(FaceCryptError):
    default_message = "flip position out of bounds"


class DegenerateImageError(FaceCryptError):
    """Raised when an image has no adjacent pairs in the requested direction."""

    default_message = "image too small for this measurement"
