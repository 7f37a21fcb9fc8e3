import numpy as np

from facecrypt.models.image import GrayImage

PAD_MULTIPLE = 32
PAD_VALUE = 0


def _round_up(n: int, multiple: int = PAD_MULTIPLE) -> int:
    return -(-n // multiple) * multiple


def padded_shape(width: int, height: int) -> tuple[int, int]:
    """(width, height) rounded up to the next multiple of 32."""
    return _round_up(width), _round_up(height)


def pad_image(img: GrayImage) -> GrayImage:
    """Zero-pad right and bottom to 32-aligned dimensions; aligned images come back unchanged."""
    width, height = padded_shape(img.width, img.height)
    if (width, height) == (img.width, img.height):
        return img
    out = np.full((height, width), PAD_VALUE, dtype=np.uint8)
    out[: img.height, : img.width] = img.pixels
    return GrayImage(out)


def crop_image(img: GrayImage, width: int, height: int) -> GrayImage:
    """Top-left width x height region."""
    if width > img.width or height > img.height:
        raise ValueError(f"cannot crop {img.width}x{img.height} to {width}x{height}")
    if (width, height) == (img.width, img.height):
        return img
    return GrayImage(img.pixels[:height, :width])
