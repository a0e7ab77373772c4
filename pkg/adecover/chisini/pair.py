from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum, auto
from typing import Any, Optional

from ..core.errors import (
    ComputationError,
    InvalidClassification,
    NegativeDelta,
)
from ..invariants.formulas import genus_of_B
from ..invariants.profile import SingularityProfile

__all__ = [
    "PointKind",
    "PairClass",
    "PairClassification",
    "local_rc_contribution",
    "iota",
    "delta_R_delta_C",
]


class PointKind(StrEnum):
    NODE = auto()
    CUSP = auto()


class PairClass(StrEnum):
    """2 つの被覆それぞれから見た s/p の組（1 文字目が第 1 の被覆）"""

    SS = auto()
    SP = auto()
    PS = auto()
    PP = auto()


# 特異点 1 個あたりの局所交点数 (R̃·C̃)_b
_RC_TABLE: dict[tuple[PointKind, PairClass], int] = {
    (PointKind.NODE, PairClass.SS): 0,
    (PointKind.NODE, PairClass.SP): 2,
    (PointKind.NODE, PairClass.PS): 0,
    (PointKind.NODE, PairClass.PP): 0,
    (PointKind.CUSP, PairClass.SS): 0,
    (PointKind.CUSP, PairClass.SP): 2,
    (PointKind.CUSP, PairClass.PS): 0,
    (PointKind.CUSP, PairClass.PP): 1,
}


def local_rc_contribution(kind: PointKind, cls: PairClass) -> int:
    return _RC_TABLE[(PointKind(kind), PairClass(cls))]


@dataclass(frozen=True)
class PairClassification:
    """同じ分岐曲線 B を持つ 2 つの一般被覆 f₁, f₂ の特異点の分類

    Attributes:
        n_ss, n_sp, n_ps, n_pp (int): 結節点の 4 分類
        c_ss, c_sp, c_ps, c_pp (int): 尖点の 4 分類
        N2 (int): 第 2 の被覆の次数
        d_bar (int): B の次数の半分
        N1 (Optional[int]): 第 1 の被覆の次数（逆順の評価に使う）
        higher (SingularityProfile): 結節点・尖点以外の特異点（両被覆で s 型）
        symmetric (bool): 両被覆が (K², χ) を共有する場合、n_ps = n_sp, c_ps = c_sp を要求
    """

    N2: int
    d_bar: int
    n_ss: int = 0
    n_sp: int = 0
    n_ps: int = 0
    n_pp: int = 0
    c_ss: int = 0
    c_sp: int = 0
    c_ps: int = 0
    c_pp: int = 0
    N1: Optional[int] = None
    higher: SingularityProfile = field(default_factory=SingularityProfile)
    symmetric: bool = False

    def __post_init__(self) -> None:
        for kind in PointKind:
            for cls in PairClass:
                if self.count(kind, cls) < 0:
                    raise InvalidClassification(
                        f"negative count for {kind} {cls}"
                    )
        if self.N2 < 2:
            raise InvalidClassification(f"N2 must be >= 2: {self.N2}")
        if self.N1 is not None and self.N1 < 2:
            raise InvalidClassification(f"N1 must be >= 2: {self.N1}")
        if self.d_bar < 1:
            raise InvalidClassification(f"d_bar must be positive: {self.d_bar}")
        if self.higher.n or self.higher.c:
            raise InvalidClassification(
                "nodes and cusps go into the four-way counts, not higher"
            )
        if self.symmetric and (self.n_ps != self.n_sp or self.c_ps != self.c_sp):
            raise InvalidClassification(
                f"symmetric pair needs n_ps = n_sp and c_ps = c_sp: "
                f"({self.n_ps}, {self.n_sp}), ({self.c_ps}, {self.c_sp})"
            )

    def count(self, kind: PointKind, cls: PairClass) -> int:
        prefix = "n" if kind == PointKind.NODE else "c"
        return getattr(self, f"{prefix}_{cls}")

    def swapped(self) -> PairClassification:
        """第 1 と第 2 の被覆を入れ替える。"""
        if self.N1 is None:
            raise InvalidClassification("N1 is required to swap the coverings")

        return PairClassification(
            N2=self.N1,
            N1=self.N2,
            d_bar=self.d_bar,
            n_ss=self.n_ss,
            n_sp=self.n_ps,
            n_ps=self.n_sp,
            n_pp=self.n_pp,
            c_ss=self.c_ss,
            c_sp=self.c_ps,
            c_ps=self.c_sp,
            c_pp=self.c_pp,
            higher=self.higher,
            symmetric=self.symmetric,
        )

    @property
    def d(self) -> int:
        return 2 * self.d_bar

    @property
    def n(self) -> int:
        return self.n_ss + self.n_sp + self.n_ps + self.n_pp

    @property
    def c(self) -> int:
        return self.c_ss + self.c_sp + self.c_ps + self.c_pp

    @property
    def delta0(self) -> int:
        return self.higher.delta

    @property
    def delta(self) -> int:
        return self.n + self.c + self.delta0

    @property
    def delta1(self) -> int:
        """第 1 の被覆の曲面の欠損 δ_{X₁}"""
        return self.delta0 + self.n_ss + self.n_sp + self.c_ss + self.c_sp

    @property
    def g(self) -> int:
        """B の幾何種数"""
        return genus_of_B(self.d, self.delta)

    @property
    def g1(self) -> int:
        """g₁ = p_a(R₁) = g + δ_{X₁}"""
        value = (self.d - 1) * (self.d - 2) // 2
        value -= self.n_ps + self.n_pp + self.c_ps + self.c_pp
        if value != self.g + self.delta1:
            raise ComputationError(
                f"p_a(R1) = {value} differs from g + delta_X1 = "
                f"{self.g + self.delta1}"
            )

        return value

    @property
    def branch_singularities(self) -> SingularityProfile:
        return self.higher.plus(nodes=self.n, cusps=self.c)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"N2": self.N2, "d_bar": self.d_bar}
        for kind in PointKind:
            for cls in PairClass:
                prefix = "n" if kind == PointKind.NODE else "c"
                out[f"{prefix}_{cls}"] = self.count(kind, cls)
        if self.N1 is not None:
            out["N1"] = self.N1
        out["higher"] = self.higher.to_dict()
        return out


def iota(cls: PairClassification) -> int:
    """ι₁ = 2n_sp + 2c_sp + c_pp

    特異点ごとの局所寄与の和と一致することを確認する。
    """
    value = 2 * cls.n_sp + 2 * cls.c_sp + cls.c_pp
    local = sum(
        cls.count(kind, pc) * local_rc_contribution(kind, pc)
        for kind in PointKind
        for pc in PairClass
    )
    if value != local:
        raise ComputationError(f"iota {value} != sum of local contributions {local}")

    return value


def delta_R_delta_C(
    cls: PairClassification, delta0: int, delta1: int, N2: int
) -> tuple[int, int]:
    """(δ_R, δ_C) = (2(δ₁ − n_sp − c_sp), (N₂ − 2)δ₁ − 2n_sp − c_sp)

    Raises:
        NegativeDelta: δ₁ ≠ δ₀ + n_ss + c_ss + n_sp + c_sp、またはどちらかが負
    """
    expected = delta0 + cls.n_ss + cls.c_ss + cls.n_sp + cls.c_sp
    if delta1 != expected:
        raise NegativeDelta(
            f"delta1 = {delta1} is inconsistent with the counts ({expected})"
        )

    delta_r = 2 * (delta1 - cls.n_sp - cls.c_sp)
    delta_c = (N2 - 2) * delta1 - 2 * cls.n_sp - cls.c_sp
    if delta_r < 0 or delta_c < 0:
        raise NegativeDelta(f"negative defect: delta_R={delta_r}, delta_C={delta_c}")

    return delta_r, delta_c
