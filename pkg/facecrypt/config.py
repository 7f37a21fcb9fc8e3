from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables (FACE_ prefix)."""

    # App
    APP_NAME: str = "facecrypt"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(levelname)-5.5s [%(name)s] %(message)s"

    # Files
    CONTAINER_EXTENSION: str = ".face"
    DEFAULT_IMAGE_FORMAT: str = Field("pgm", pattern="^(pgm|png)$")

    # Analysis
    DEFAULT_REPORT_FORMAT: str = Field("text", pattern="^(text|kv)$")
    ANALYZE_MAX_CONCURRENCY: int = Field(4, ge=1)
    UNIFORMITY_ALPHA: float = Field(0.01, gt=0.0, lt=1.0)

    @property
    def effective_log_level(self) -> str:
        """DEBUG overrides the configured level."""
        return "DEBUG" if self.DEBUG else self.LOG_LEVEL.upper()

    class Config:
        env_prefix = "FACE_"
        env_file = ".env"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
