from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .settings import Settings


@dataclass(kw_only=True, frozen=True)
class GeneralConfig:
    project_name: str = Settings.PROJECT_NAME
    version: str = Settings.VERSION
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = (
        Settings.LOG_LEVEL
    )
