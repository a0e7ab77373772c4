from __future__ import annotations

import logging
import sys

from .config.general_config import GeneralConfig

__all__ = ["Color", "logger", "set_level"]


class Color:
    ResetAll = "\033[0m"

    Bold = "\033[1m"
    Dim = "\033[2m"

    Default = "\033[39m"
    Red = "\033[31m"
    Green = "\033[32m"
    Yellow = "\033[33m"
    Blue = "\033[34m"
    LightGray = "\033[37m"
    DarkGray = "\033[90m"
    White = "\033[97m"


def _format(colour: bool) -> str:
    """ログの書式を返す。端末以外（パイプ・CI ログ）ではエスケープ列を付けない。"""
    if not colour:
        return (
            "%(levelname)s: %(asctime)s %(name)s %(message)s "
            "@ %(pathname)s:%(lineno)d %(funcName)s"
        )

    return (
        f"{Color.Blue}%(levelname)s{Color.ResetAll}: "
        f"{Color.DarkGray}%(asctime)s "
        f"{Color.DarkGray}%(name)s "
        f"{Color.White}%(message)s "
        f"{Color.DarkGray}@ %(pathname)s:%(lineno)d %(funcName)s "
        f"{Color.ResetAll}"
    )


logging.basicConfig(format=_format(sys.stderr.isatty()))

logger = logging.getLogger(GeneralConfig.project_name)
logger.setLevel(GeneralConfig.log_level)


def set_level(level: str) -> None:
    """プロジェクトロガーのレベルを変更する。

    Args:
        level (str): DEBUG, INFO, WARNING, ERROR, CRITICAL のいずれか（大小無視）

    Raises:
        ValueError: 未知のレベル名
    """
    name = level.upper()
    if name not in logging.getLevelNamesMapping():
        raise ValueError(f"unknown log level: {level}")

    logger.setLevel(name)
