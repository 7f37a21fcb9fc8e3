"""Per-stage encryption trace."""

from dataclasses import dataclass

from facecrypt.models.faps import FapsRecord
from facecrypt.models.image import GrayImage


@dataclass(frozen=True, eq=False)
class StageTrace:
    """Images produced by each encryption stage, in pipeline order."""

    original: GrayImage
    padded: GrayImage
    segmented: GrayImage
    permuted: GrayImage
    confused: GrayImage
    record: FapsRecord

    def stages(self) -> dict[str, GrayImage]:
        return {
            "padded": self.padded,
            "segmented": self.segmented,
            "permuted": self.permuted,
            "confused": self.confused,
        }
