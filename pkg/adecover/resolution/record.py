from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from sympy import Poly

from ..exact.poly import render
from .germ import CurveGerm

__all__ = [
    "BRANCH",
    "ExceptionalCurve",
    "Cluster",
    "ChartPoint",
    "ResolutionRecord",
]

# 曲線 B の固有変換 B̄ を表す識別子
BRANCH = "B"


@dataclass(frozen=True)
class ExceptionalCurve:
    """例外曲線

    Attributes:
        id (str): 識別子（E1, E2, ... の生成順）
        alpha (int): 全変換における重複度 α
        self_int (int): 自己交点数
        incidences (tuple[tuple[str, int], ...]): (相手の id または "B", 交点数)
    """

    id: str
    alpha: int
    self_int: int
    incidences: tuple[tuple[str, int], ...]

    @property
    def is_odd(self) -> bool:
        return self.alpha % 2 == 1

    def meets(self, other: str) -> int:
        for key, value in self.incidences:
            if key == other:
                return value

        return 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "alpha": self.alpha,
            "self_int": self.self_int,
            "incidences": {k: v for k, v in self.incidences},
        }


@dataclass(frozen=True)
class Cluster:
    """有理的でない（共役な）点の組。curve 上に degree 個並ぶ。"""

    curve: str
    degree: int
    transversal: bool
    factor: str


@dataclass(frozen=True)
class ChartPoint:
    """局所チャートの原点に平行移動済みの特別点

    x = 0 が eu、y = 0 が ev（存在する場合）。poly は B̄ の局所方程式。
    cluster が設定されている場合は共役点の組を表し poly は持たない。
    """

    key: tuple[int, ...]
    poly: Optional[Poly] = None
    eu: Optional[str] = None
    ev: Optional[str] = None
    cluster: Optional[Cluster] = None

    @property
    def curves(self) -> tuple[str, ...]:
        if self.cluster is not None:
            return (self.cluster.curve,)

        return tuple(c for c in (self.eu, self.ev) if c is not None)

    def describe(self) -> str:
        path = ".".join(str(k) for k in self.key) or "0"
        if self.cluster is not None:
            return (
                f"{path}: {self.cluster.degree} conjugate points on "
                f"{self.cluster.curve} ({self.cluster.factor})"
            )

        g = render(self.poly) if self.poly is not None else "1"
        return f"{path}: g={g} curves={','.join(self.curves) or '-'}"


@dataclass(frozen=True)
class ResolutionRecord:
    """埋め込み特異点解消の記録

    Attributes:
        germ (CurveGerm): 元の芽
        curves (tuple[ExceptionalCurve, ...]): 例外曲線（生成順）
        points (tuple[ChartPoint, ...]): 現在の特別点
        blowup_count (int): σ 変換の回数
        extra_blowups (bool): 分岐因子を分離するモードか
        normal_crossings (bool): 全変換が正規交差であるか（証明書あり）
        branch_separated (bool): 分岐因子が滑らかで互いに素か
    """

    germ: CurveGerm
    curves: tuple[ExceptionalCurve, ...]
    points: tuple[ChartPoint, ...]
    blowup_count: int
    extra_blowups: bool
    normal_crossings: bool = False
    branch_separated: bool = False

    def curve(self, cid: str) -> ExceptionalCurve:
        for c in self.curves:
            if c.id == cid:
                return c

        raise KeyError(f"no exceptional curve {cid}")

    @property
    def b_bar_incidence(self) -> tuple[tuple[str, int], ...]:
        return tuple(
            (c.id, c.meets(BRANCH)) for c in self.curves if c.meets(BRANCH) > 0
        )

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(c.alpha for c in self.curves)

    @property
    def self_ints(self) -> tuple[int, ...]:
        return tuple(c.self_int for c in self.curves)

    def to_dict(self) -> dict[str, Any]:
        return {
            "germ": str(self.germ),
            "blowups": self.blowup_count,
            "extra_blowups": self.extra_blowups,
            "normal_crossings": self.normal_crossings,
            "branch_separated": self.branch_separated,
            "curves": [c.to_dict() for c in self.curves],
            "b_bar_incidence": {k: v for k, v in self.b_bar_incidence},
        }
