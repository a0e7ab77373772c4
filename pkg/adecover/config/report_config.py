from __future__ import annotations

from dataclasses import dataclass

from .settings import OutputFormat, Settings


@dataclass(kw_only=True, frozen=True)
class ReportConfig:
    """レポート出力・セルフテスト関連の設定用データクラス"""

    output_format: OutputFormat = Settings.OUTPUT_FORMAT
    selftest_max_a: int = Settings.SELFTEST_MAX_A
    selftest_max_d: int = Settings.SELFTEST_MAX_D
    selftest_max_k: int = Settings.SELFTEST_MAX_K
