from enum import Enum

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_RANK_GUARD = 11


class LogLevel(str, Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class WhiteheadConfig(BaseSettings):
    """Runtime limits for enumeration, search and sampling."""

    model_config = SettingsConfigDict(
        env_prefix="EPSILON_WHITEHEAD_",
        env_file=".env",
        extra="ignore",
    )

    rank_guard: int = Field(default=DEFAULT_RANK_GUARD, ge=1)
    epsilon_search_cap: int = Field(default=100_000, ge=1)
    probe_count: int = Field(default=1000, ge=1)
    log_level: LogLevel = LogLevel.WARNING

    def with_rank_guard(self, rank_guard: int | None) -> "WhiteheadConfig":
        if rank_guard is None:
            return self
        return self.model_copy(update={"rank_guard": rank_guard})
