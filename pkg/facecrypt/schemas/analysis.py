from typing import Optional

from pydantic import BaseModel, Field

from facecrypt.models.image import GrayImage


# ========================
# Statistical Report Schemas
# ========================

class CorrelationReport(BaseModel):
    """Adjacent-pixel correlation in three directions."""
    horizontal: float = Field(..., ge=-1.0, le=1.0)
    vertical: float = Field(..., ge=-1.0, le=1.0)
    diagonal: float = Field(..., ge=-1.0, le=1.0)
    mean_abs: float = Field(..., ge=0.0, le=1.0)  # mean of the three magnitudes


class UniformityReport(BaseModel):
    """Chi-square test of the histogram against the uniform distribution."""
    statistic: float = Field(..., ge=0.0)
    degrees_of_freedom: int = 255
    alpha: float = Field(..., gt=0.0, lt=1.0)
    critical_value: float
    p_value: float = Field(..., ge=0.0, le=1.0)
    uniform: bool  # statistic below the critical value


class ImageReport(BaseModel):
    """Every single-image metric for one input."""
    source: str
    kind: str = Field(..., pattern="^(plain|cipher)$")
    width: int
    height: int
    entropy: float = Field(..., ge=0.0, le=8.0)
    correlation: Optional[CorrelationReport] = None  # None for images without pairs
    uniformity: UniformityReport
    histogram: list[int] = Field(..., min_length=256, max_length=256)

    def metrics(self) -> dict[str, float]:
        """Flat metric name -> number mapping for the key/value report."""
        out = {
            "width": float(self.width),
            "height": float(self.height),
            "entropy": self.entropy,
            "chi_square": self.uniformity.statistic,
            "chi_square_critical": self.uniformity.critical_value,
            "chi_square_p_value": self.uniformity.p_value,
        }
        if self.correlation is not None:
            out.update(
                {
                    "correlation_horizontal": self.correlation.horizontal,
                    "correlation_vertical": self.correlation.vertical,
                    "correlation_diagonal": self.correlation.diagonal,
                    "correlation_mean_abs": self.correlation.mean_abs,
                }
            )
        return out


# ========================
# Sensitivity Report Schemas
# ========================

class DifferentialReport(BaseModel):
    """Ciphertext difference between two encryptions."""
    npcr_percent: float = Field(..., ge=0.0, le=100.0)
    uaci_percent: float = Field(..., ge=0.0, le=100.0)
    diff_image: GrayImage

    def metrics(self) -> dict[str, float]:
        return {"npcr_percent": self.npcr_percent, "uaci_percent": self.uaci_percent}

    class Config:
        arbitrary_types_allowed = True


class KeySensitivityReport(BaseModel):
    """Effect of flipping one key bit, on encryption and on decryption."""
    key_bit: int = Field(..., ge=0)
    cipher_npcr_percent: float = Field(..., ge=0.0, le=100.0)
    cipher_uaci_percent: float = Field(..., ge=0.0, le=100.0)
    wrong_key_detected: bool
    decrypted_entropy: Optional[float] = None  # only when decryption went through
    decrypted_diff_percent: Optional[float] = None

    def metrics(self) -> dict[str, float]:
        out = {
            "key_bit": float(self.key_bit),
            "cipher_npcr_percent": self.cipher_npcr_percent,
            "cipher_uaci_percent": self.cipher_uaci_percent,
            "wrong_key_detected": 1.0 if self.wrong_key_detected else 0.0,
        }
        if self.decrypted_entropy is not None:
            out["decrypted_entropy"] = self.decrypted_entropy
        if self.decrypted_diff_percent is not None:
            out["decrypted_diff_percent"] = self.decrypted_diff_percent
        return out
