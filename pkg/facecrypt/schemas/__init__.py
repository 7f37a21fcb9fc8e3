# Pydantic Schemas
from facecrypt.schemas.analysis import (
    CorrelationReport,
    DifferentialReport,
    ImageReport,
    KeySensitivityReport,
    UniformityReport,
)
from facecrypt.schemas.options import (
    Direction,
    FlipSpec,
    ImageFormat,
    ReportFormat,
)

__all__ = [
    # Analysis
    "CorrelationReport",
    "DifferentialReport",
    "ImageReport",
    "KeySensitivityReport",
    "UniformityReport",
    # Options
    "Direction",
    "FlipSpec",
    "ImageFormat",
    "ReportFormat",
]
