from __future__ import annotations

import os
from enum import StrEnum, auto
from typing import Literal

from dotenv import load_dotenv

from ..core.errors import ConfigError

load_dotenv()

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OutputFormat(StrEnum):
    HUMAN = auto()
    MACHINE = auto()


def _env_int(name: str, default: int) -> int:
    """環境変数を整数として読む。未設定なら既定値。"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default

    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"invalid integer in {name}: {raw}") from e


def _env_bool(name: str, default: bool) -> bool:
    """環境変数を真偽値として読む。未設定なら既定値。"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default

    return raw.strip().lower() in {"1", "true", "yes", "on"}


def _env_output_format(name: str, default: OutputFormat) -> OutputFormat:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default

    try:
        return OutputFormat(raw.strip().lower())
    except ValueError as e:
        choices = ", ".join(f.value for f in OutputFormat)
        raise ConfigError(f"invalid {name}: {raw} (expected one of {choices})") from e


def _env_log_level(name: str, default: str) -> str:
    raw = (os.getenv(name) or default).strip().upper()
    if raw not in _LOG_LEVELS:
        raise ConfigError(f"invalid {name}: {raw}")

    return raw


class Settings:
    """各種設定値のデフォルト値管理クラス

    環境ごとに変えたい値は .env ファイル（ADECOVER_ 接頭辞）で上書きする。
    """

    ##### General
    PROJECT_NAME: str = "adecover"
    VERSION: str = "0.1.0"
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = (
        _env_log_level("ADECOVER_LOG_LEVEL", "WARNING")  # type: ignore[assignment]
    )

    ##### Resolution
    # 分岐因子を滑らかかつ互いに素にするための追加ブローアップ
    EXTRA_BLOWUPS: bool = _env_bool("ADECOVER_EXTRA_BLOWUPS", True)
    MAX_BLOWUPS: int = _env_int("ADECOVER_MAX_BLOWUPS", 64)
    # 分裂ペア同士の交点割り当ての探索上限
    MAX_SHEET_ASSIGNMENTS: int = _env_int("ADECOVER_MAX_SHEET_ASSIGNMENTS", 4096)

    ##### Monodromy
    MONODROMY_CAP: int = _env_int("ADECOVER_MONODROMY_CAP", 8)

    ##### Report
    OUTPUT_FORMAT: OutputFormat = _env_output_format(
        "ADECOVER_OUTPUT_FORMAT", OutputFormat.HUMAN
    )

    ##### Selftest
    SELFTEST_MAX_A: int = 10
    SELFTEST_MAX_D: int = 10
    # m ≥ 3 で判定式を確かめる k の範囲
    SELFTEST_MAX_K: int = 1000
