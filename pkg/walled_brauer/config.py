from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings

# Hard caps; settings may lower them but never raise them.
MAX_DIAGRAM_SIZE = 8
MAX_ORACLE_SIZE = 4
MAX_SPECHT_SIZE = 5


class Settings(BaseSettings):
    """Library and CLI settings loaded from environment variables."""

    # Enumeration bounds (on r+s)
    max_size: int = MAX_DIAGRAM_SIZE
    oracle_max_size: int = MAX_ORACLE_SIZE
    specht_max_size: int = MAX_SPECHT_SIZE

    # Numeric stand-in for generic delta in the matrix oracle
    delta0: str = "104729"
    delta0_retries: int = 3

    # Output
    output_format: Literal["json", "csv", "pretty"] = "pretty"

    # Randomized property checks
    seed: int = 0
    sample_size: int = 500

    # Verification runner
    verify_workers: int = 4

    log_level: str = "INFO"

    class Config:
        env_file = ".env"
        env_prefix = "WBRAUER_"
        case_sensitive = False

    @field_validator("max_size")
    @classmethod
    def _cap_max_size(cls, value: int) -> int:
        if not 0 <= value <= MAX_DIAGRAM_SIZE:
            raise ValueError(f"max_size must be within 0..{MAX_DIAGRAM_SIZE}, got {value}")
        return value

    @field_validator("oracle_max_size")
    @classmethod
    def _cap_oracle_size(cls, value: int) -> int:
        if not 0 <= value <= MAX_ORACLE_SIZE:
            raise ValueError(f"oracle_max_size must be within 0..{MAX_ORACLE_SIZE}, got {value}")
        return value

    @field_validator("specht_max_size")
    @classmethod
    def _cap_specht_size(cls, value: int) -> int:
        if not 0 <= value <= MAX_SPECHT_SIZE:
            raise ValueError(f"specht_max_size must be within 0..{MAX_SPECHT_SIZE}, got {value}")
        return value

    @field_validator("delta0")
    @classmethod
    def _parse_delta0(cls, value: str) -> str:
        try:
            parsed = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"delta0 must be a rational like '7' or '22/7', got {value!r}")
        if parsed == 0:
            raise ValueError("delta0 must be nonzero")
        return str(value).strip()

    @property
    def delta0_value(self) -> Fraction:
        return Fraction(self.delta0)


# Values set by command-line flags; they win over the environment.
_overrides: Dict[str, Any] = {}


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings(**_overrides)


def override_settings(**values: Any) -> Settings:
    """Replace the cached settings, applying every value that is not None."""
    cleaned = {key: value for key, value in values.items() if value is not None}
    Settings(**cleaned)
    _overrides.clear()
    _overrides.update(cleaned)
    get_settings.cache_clear()
    return get_settings()
