from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="COOPKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    LOG_LEVEL: str = Field("INFO")
    LOG_FILE: str = Field("")
    DEBUG: bool = Field(False)

    # Reproducibility
    SEED: int = Field(20240601)

    # Sampled law checking over dense models
    SAMPLE_COUNT: int = Field(10_000, ge=1)
    SAMPLE_MAX_EXPONENT: int = Field(8, ge=0, le=30)

    # Dyadic grid countermodel search, step 1/2^k for k in [min, max]
    GRID_MIN_EXPONENT: int = Field(2, ge=0)
    GRID_MAX_EXPONENT: int = Field(8, ge=0)

    # Finite table enumeration
    ENUMERATION_MAX_SIZE: int = Field(4, ge=1)
    ENUMERATION_HARD_LIMIT: int = Field(5, ge=1)
    POSET_MAX_SIZE: int = Field(6, ge=0)

    # Worker processes for enumeration (1 = in-process)
    WORKERS: int = Field(1, ge=1)

    # Output
    METRICS_FILE: str = Field("")
    DEFAULT_FORMAT: str = Field("text", pattern="^(text|json)$")

    @property
    def grid_exponents(self) -> range:
        """Grid refinement levels for dyadic countermodel search"""
        return range(self.GRID_MIN_EXPONENT, self.GRID_MAX_EXPONENT + 1)

    @property
    def enumeration_bound(self) -> int:
        """Largest table size enumeration may be asked for"""
        return min(self.ENUMERATION_MAX_SIZE, self.ENUMERATION_HARD_LIMIT)


# Global settings instance
settings = Settings()
