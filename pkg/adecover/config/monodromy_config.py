from __future__ import annotations

from dataclasses import dataclass

from .settings import Settings


@dataclass(kw_only=True, frozen=True)
class MonodromyConfig:
    """モノドロミー列挙の設定用データクラス"""

    cap: int = Settings.MONODROMY_CAP
