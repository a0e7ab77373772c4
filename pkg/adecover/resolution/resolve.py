from __future__ import annotations

from typing import Any, Optional

from ..config.resolve_config import ResolveConfig
from ..core.errors import NotSingular, ResolutionDiverged
from ..logger import logger
from .blowup import blow_up, needs_blowup, point_status
from .germ import CurveGerm
from .record import ChartPoint, ResolutionRecord

__all__ = ["initial_record", "resolve", "normal_crossings_certificate"]


def initial_record(germ: CurveGerm, extra_blowups: bool) -> ResolutionRecord:
    points: tuple[ChartPoint, ...] = ()
    if germ.vanishes_at_origin:
        points = (ChartPoint(key=(), poly=germ.poly),)

    return ResolutionRecord(
        germ=germ,
        curves=(),
        points=points,
        blowup_count=0,
        extra_blowups=extra_blowups,
    )


def _pending(record: ResolutionRecord) -> Optional[ChartPoint]:
    alpha = {c.id: c.alpha for c in record.curves}
    for p in record.points:
        if needs_blowup(point_status(p, alpha), record.extra_blowups):
            return p

    return None


def resolve(
    germ: CurveGerm,
    extra_blowups: Optional[bool] = None,
    max_blowups: Optional[int] = None,
) -> ResolutionRecord:
    """芽の埋め込み特異点解消を行う。

    extra_blowups が真（既定）なら、全変換が正規交差になり、かつ
    分岐因子 B̄ + Σ_{α 奇数} l_i が互いに素な滑らかな曲線になるまで
    σ 変換を続ける。偽なら B̄ が滑らかになった時点で止める。
    中心はチャートのパス（キー）の辞書式順で選ぶため結果は決定的。

    Args:
        germ (CurveGerm): 芽
        extra_blowups (Optional[bool]): 分岐因子分離モード
        max_blowups (Optional[int]): σ 変換回数の上限

    Raises:
        ResolutionDiverged: 上限を超えた
        NotSingular: 原点で滑らか（例外曲線が 1 本も生じない）
        IrrationalCenter: 有理的でない中心が必要（A-D-E 以外の入力）

    Returns:
        ResolutionRecord: 完了した記録
    """
    extra = ResolveConfig.extra_blowups if extra_blowups is None else extra_blowups
    limit = ResolveConfig.max_blowups if max_blowups is None else max_blowups

    record = initial_record(germ, extra)
    while (center := _pending(record)) is not None:
        if record.blowup_count >= limit:
            raise ResolutionDiverged(
                f"resolution of {germ} exceeded {limit} blow-ups"
            )
        record = blow_up(record, center)

    if not record.curves:
        raise NotSingular(f"germ {germ} is smooth at the origin")

    alpha = {c.id: c.alpha for c in record.curves}
    statuses = [point_status(p, alpha) for p in record.points]
    record = ResolutionRecord(
        germ=record.germ,
        curves=record.curves,
        points=record.points,
        blowup_count=record.blowup_count,
        extra_blowups=record.extra_blowups,
        normal_crossings=all(s.normal_crossing for s in statuses),
        branch_separated=all(s.clean for s in statuses),
    )

    logger.info(
        f"resolved {germ.label or germ}: {record.blowup_count} blow-ups, "
        f"alpha={list(record.alphas)}"
    )
    return record


def normal_crossings_certificate(record: ResolutionRecord) -> list[dict[str, Any]]:
    """残っている特別点ごとの局所判定を列挙する。"""
    alpha = {c.id: c.alpha for c in record.curves}
    out = []
    for p in record.points:
        s = point_status(p, alpha)
        out.append(
            {
                "point": p.describe(),
                "curves": list(p.curves),
                "smooth_branch": s.smooth_branch,
                "normal_crossing": s.normal_crossing,
                "separated": s.separated,
                "reason": s.reason,
            }
        )

    return out
