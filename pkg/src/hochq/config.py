"""Application configuration using Pydantic Settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from HOCHQ_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="HOCHQ_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Artifacts
    cache_dir: str = "data/cache"
    cache_enabled: bool = True

    # Computation defaults
    default_degree_cap: int = 6
    default_seed: int = 7
    specialization_margin: int = 2  # extra slack on the computed exponent box

    # Oracle throughput
    oracle_max_workers: int = 4
    homotopy_sample_size: int = 200
    max_field_degree: int = 5000  # largest Q(zeta_L) the oracle will build

    # Application
    debug: bool = False
    log_level: str = "INFO"


settings = Settings()
