"""Pydantic schemas for command options."""

from enum import Enum

from pydantic import BaseModel, Field

from facecrypt.core.exceptions import FlipPositionError


class ImageFormat(str, Enum):
    """Raster formats accepted on the command line."""
    PGM = "pgm"  # binary P5, maxval 255
    PNG = "png"  # 8-bit grayscale


class ReportFormat(str, Enum):
    """Analysis report renderings."""
    TEXT = "text"  # aligned, human-readable lines
    KV = "kv"      # JSON object: metric name -> number


class Direction(str, Enum):
    """Adjacent-pixel pairing directions."""
    HORIZONTAL = "horizontal"  # (x, y) with (x + 1, y)
    VERTICAL = "vertical"      # (x, y) with (x, y + 1)
    DIAGONAL = "diagonal"      # (x, y) with (x + 1, y + 1)


# ========================
# Flip Schemas
# ========================

class FlipSpec(BaseModel):
    """Pixel and bit to toggle for a differential test."""
    row: int = Field(0, ge=0)
    col: int = Field(0, ge=0)
    bit: int = Field(0, ge=0, le=7, description="0 is the least significant bit")

    @classmethod
    def parse(cls, text: str) -> "FlipSpec":
        """Parse 'R,C' or 'R,C,bit'."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (2, 3) or not all(p.isdigit() for p in parts):
            raise FlipPositionError(f"--flip expects R,C[,bit], got {text!r}")
        values = [int(p) for p in parts]
        if len(values) == 3 and values[2] > 7:
            raise FlipPositionError(f"flip bit must be 0..7, got {values[2]}")
        return cls(row=values[0], col=values[1], bit=values[2] if len(values) == 3 else 0)

    def check_bounds(self, width: int, height: int) -> None:
        if self.row >= height or self.col >= width:
            raise FlipPositionError(
                f"flip position ({self.row},{self.col}) outside {width}x{height} image"
            )
