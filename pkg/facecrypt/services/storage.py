"""File I/O for grayscale images (Pillow) and ciphertext containers."""

import logging
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np
from PIL import Image, UnidentifiedImageError

from facecrypt.core.container import deserialize_container, serialize_container
from facecrypt.core.exceptions import ImageFormatError
from facecrypt.models.container import CipherContainer
from facecrypt.models.image import GrayImage
from facecrypt.schemas.options import ImageFormat

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

# Pillow format name per supported raster format
_PIL_FORMATS = {ImageFormat.PGM: "PPM", ImageFormat.PNG: "PNG"}
_SUFFIXES = {".pgm": ImageFormat.PGM, ".png": ImageFormat.PNG}


def infer_format(path: PathLike, default: Optional[ImageFormat] = None) -> ImageFormat:
    """Raster format from the file suffix, else the default."""
    fmt = _SUFFIXES.get(Path(path).suffix.lower())
    if fmt is not None:
        return fmt
    if default is not None:
        return ImageFormat(default)
    raise ImageFormatError(f"unsupported image format: cannot infer from {Path(path).name!r}")


def read_image(path: PathLike, format: Optional[ImageFormat] = None) -> GrayImage:
    """
    Read a binary PGM (maxval 255) or an 8-bit grayscale PNG.

    The format is detected from the file content; when given, it must match.

    Raises:
        FileNotFoundError: If path does not exist
        ImageFormatError: If the file is not a single-channel 8-bit PGM or PNG
    """
    path = Path(path)
    try:
        with Image.open(path) as im:
            im.load()
            detected = im.format
            mode = im.mode
            pixels = np.array(im) if mode == "L" else None
    except UnidentifiedImageError as e:
        raise ImageFormatError(f"unsupported image format: {path.name}") from e

    allowed = {_PIL_FORMATS[ImageFormat(f)] for f in ([format] if format else ImageFormat)}
    if detected not in allowed:
        raise ImageFormatError(f"unsupported image format: {path.name} is {detected}")
    if mode != "L":
        raise ImageFormatError(
            f"unsupported image format: {path.name} has mode {mode}, need 8-bit grayscale"
        )

    logger.debug(f"Read {detected} {pixels.shape[1]}x{pixels.shape[0]} from {path}")
    return GrayImage(pixels.astype(np.uint8, copy=False))


def write_image(
    img: GrayImage,
    path: PathLike,
    format: Optional[ImageFormat] = None,
    force: bool = False,
) -> Path:
    """Write img as binary PGM (P5) or 8-bit grayscale PNG; existing files need force."""
    path = Path(path)
    fmt = ImageFormat(format) if format else infer_format(path)
    ensure_writable([path], force)
    Image.fromarray(np.array(img.pixels), mode="L").save(path, format=_PIL_FORMATS[fmt])
    logger.debug(f"Wrote {fmt.value} {img.width}x{img.height} to {path}")
    return path


def read_container(path: PathLike) -> CipherContainer:
    return deserialize_container(Path(path).read_bytes())


def write_container(c: CipherContainer, path: PathLike, force: bool = False) -> Path:
    """
    Write a container file.

    Raises:
        FileExistsError: If path exists and force is not set
    """
    path = Path(path)
    ensure_writable([path], force)
    path.write_bytes(serialize_container(c))
    logger.debug(f"Wrote {c!r} to {path}")
    return path


def ensure_writable(paths: Iterable[Optional[PathLike]], force: bool = False) -> None:
    """
    Refuse existing destinations unless force is set.

    Commands call this on every output before writing the first one.

    Raises:
        FileExistsError: For the first path that already exists
    """
    if force:
        return
    for path in paths:
        if path is not None and Path(path).exists():
            raise FileExistsError(f"{path} exists; use --force to overwrite")
