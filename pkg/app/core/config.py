"""
Application Configuration with Pydantic Settings
Environment-based configuration for the palindrome complexity lab
"""
from pydantic_core.core_schema import FieldValidationInfo
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator
from typing import List, Literal


class Settings(BaseSettings):
    """
    Application settings with validation and type safety
    Every engine default (budgets, prefix lengths, caps) is read from here
    """

    # === PROJECT INFO ===
    PROJECT_NAME: str = "palctl - Palindrome Complexity Lab"
    VERSION: str = "1.0.0"
    ENVIRONMENT: Literal["development", "production", "testing"] = "development"

    # === API CONFIG ===
    API_V1_STR: str = "/api/v1"
    HOST: str = "127.0.0.1"
    PORT: int = 8000
    ENABLE_DOCS: bool = True

    # === CORS ===
    ALLOWED_ORIGINS: List[str] = ["http://localhost:3000", "http://127.0.0.1:8000"]

    # === BUDGETS ===
    DEFAULT_K_MAX: int = Field(default=64, ge=1)
    PALCTL_BUDGET: int = Field(default=1 << 20, ge=2, description="Max prefix length examined")
    INITIAL_PREFIX_LENGTH: int = Field(default=4096, ge=16)
    GENERATOR_MAX_LENGTH: int = Field(default=1 << 25, ge=1024)

    # === ENGINES ===
    WINDOW_COUNT_MAX_K: int = Field(default=16, ge=1, le=256)

    # === CLASS P ===
    CLASSP_TEST_LENGTH: int = Field(default=12, ge=1, le=64)
    CLASSP_PREFIX_LENGTH: int = Field(default=1 << 14, ge=64)

    # === REPORT ===
    MAX_WORKERS: int = Field(default=1, ge=1, le=64)

    # === LOGGING ===
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = False

    # === CONFIG (pydantic v2) ===
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        env_prefix="",
        extra="ignore"
    )

    # ------------------------------------------------------------
    # VALIDATORS
    # ------------------------------------------------------------

    @field_validator("LOG_LEVEL")
    def normalize_log_level(cls, v: str):
        """Accept lowercase level names."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown LOG_LEVEL: {v}")
        return level

    @field_validator("PALCTL_BUDGET")
    def validate_budget(cls, v: int, info: FieldValidationInfo):
        """Budget must leave room for a doubling at the default k_max."""
        k_max = info.data.get("DEFAULT_K_MAX", 64)
        if v < 2 * k_max:
            raise ValueError("PALCTL_BUDGET must be at least 2 * DEFAULT_K_MAX")
        return v

    @field_validator("GENERATOR_MAX_LENGTH")
    def validate_generator_cap(cls, v: int, info: FieldValidationInfo):
        """No source may be capped below the examined budget."""
        budget = info.data.get("PALCTL_BUDGET", 1 << 20)
        if v < budget:
            raise ValueError("GENERATOR_MAX_LENGTH must be >= PALCTL_BUDGET")
        return v


# Global settings instance
settings = Settings()
