"""Library and CLI configuration using pydantic-settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings, overridable through ``BVH_*`` environment variables."""

    # Project
    PROJECT_NAME: str = "bv-hochschild"
    VERSION: str = "0.1.0"
    REPORT_SCHEMA: str = "bvh/1"

    # Groups
    MAX_GROUP_ORDER: int = 64

    # Linear algebra
    WORK_BUDGET: int = 1_000_000  # coordinates (|G|-1)^(n+1)
    HEAVY_THRESHOLD: int = 250_000  # coboundary rows needing --heavy

    # Runs
    DEFAULT_PRIME: int = 2
    MAX_DEGREE: int = 5
    DEFAULT_SEED: int = 0
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="BVH_",
        case_sensitive=True,
    )


settings = Settings()
