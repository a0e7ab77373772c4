from __future__ import annotations

from dataclasses import dataclass

from .settings import Settings


@dataclass(kw_only=True, frozen=True)
class ResolveConfig:
    """特異点解消と二重被覆構成の設定用データクラス"""

    extra_blowups: bool = Settings.EXTRA_BLOWUPS
    max_blowups: int = Settings.MAX_BLOWUPS
    max_sheet_assignments: int = Settings.MAX_SHEET_ASSIGNMENTS
