from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any, Optional

from ..core.errors import ComputationError, InvalidContext
from ..invariants.plucker import nu_of_profile, plucker_dual_degree
from ..logger import logger
from .pair import PairClassification, delta_R_delta_C, iota

__all__ = [
    "Uniqueness",
    "MainBound",
    "PositivityVerdict",
    "FiberSelfIntersections",
    "FiberProductReport",
    "PairReport",
    "fiber_intersections",
    "fiber_self_intersections",
    "positivity_check",
    "main_bound",
    "uniqueness_verdict",
    "hodge_determinant",
    "fiber_product_report",
    "evaluate_pair",
]


class Uniqueness(StrEnum):
    UNIQUE = "Unique"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class MainBound:
    """N₂ の上界。value が None の場合は上界なし（判定は空虚）。"""

    value: Optional[Fraction]

    @property
    def unbounded(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "Unbounded" if self.value is None else str(self.value)


@dataclass(frozen=True)
class PositivityVerdict:
    value: int
    holds: bool


@dataclass(frozen=True)
class FiberSelfIntersections:
    """ファイバー積上の中間的な自己交点数"""

    r1_bar_sq: int
    r_bar_sq: int
    c_bar_sq: int
    r_tilde_sq: int
    c_tilde_sq: int

    def to_dict(self) -> dict[str, int]:
        return {
            "R1_bar_sq": self.r1_bar_sq,
            "R_bar_sq": self.r_bar_sq,
            "C_bar_sq": self.c_bar_sq,
            "R_tilde_sq": self.r_tilde_sq,
            "C_tilde_sq": self.c_tilde_sq,
        }


def _t(d_bar: int, g1: int) -> int:
    return 3 * d_bar + g1 - 1


def fiber_intersections(
    d_bar: int, g1: int, iota1: int, N2: int
) -> tuple[int, int, int]:
    """((R̃+Z_R)², (C̃+Z_C)², (R̃+Z_R)·(C̃+Z_C))

    T = 3d̄ + g₁ − 1 として (2T − ι₁, (N₂−2)T − ι₁, ι₁) を返す。
    """
    if N2 < 2:
        raise InvalidContext(f"N2 must be >= 2: {N2}")

    t = _t(d_bar, g1)
    return 2 * t - iota1, (N2 - 2) * t - iota1, iota1


def fiber_self_intersections(
    cls: PairClassification, r1_tilde_sq: int
) -> FiberSelfIntersections:
    """R̃₁² から R̄₁², R̄², C̄², R̃², C̃² を求める。"""
    r1_bar_sq = r1_tilde_sq - cls.c_sp - 2 * cls.c_ps - 2 * cls.c_pp
    return FiberSelfIntersections(
        r1_bar_sq=r1_bar_sq,
        r_bar_sq=2 * r1_bar_sq,
        c_bar_sq=(cls.N2 - 2) * r1_bar_sq,
        r_tilde_sq=2 * r1_tilde_sq + 2 * cls.n_sp + 2 * cls.c_sp - cls.c_pp,
        c_tilde_sq=(cls.N2 - 2) * r1_tilde_sq + 2 * cls.n_sp - cls.c_pp,
    )


def positivity_check(
    d: int,
    d_hat: int,
    delta0: int,
    nu_prime: int,
    c: int,
    c_pp: int,
    n_ss: int = 0,
    c_ss: int = 0,
) -> PositivityVerdict:
    """d + d̂ + 2δ₀ + ν′ + (c − c_pp) + 2(n_ss + c_ss) > 0 を評価する。

    これは (R̃+Z_R)² = 2T − ι₁ に等しく、正しい入力では常に正になる。
    偽の判定は入力データの不整合を意味する。
    """
    value = d + d_hat + 2 * delta0 + nu_prime + (c - c_pp) + 2 * (n_ss + c_ss)
    if value <= 0:
        logger.warning(f"positivity fails with value {value}: inconsistent input")

    return PositivityVerdict(value=value, holds=value > 0)


def main_bound(d_bar: int, g1: int, iota1: int) -> MainBound:
    """N₂ ≤ 4T / (2T − ι₁)

    Raises:
        InvalidContext: T = 3d̄ + g₁ − 1 ≤ 0
    """
    t = _t(d_bar, g1)
    if t <= 0:
        raise InvalidContext(f"3*d_bar + g1 - 1 = {t} must be positive")

    denom = 2 * t - iota1
    if denom <= 0:
        logger.warning(f"main bound is vacuous: 2T - iota = {denom}")
        return MainBound(value=None)

    return MainBound(value=Fraction(4 * t, denom))


def uniqueness_verdict(N2: int, bound: MainBound) -> Uniqueness:
    """N₂ が上界を真に超えれば 2 つの被覆は同値（上界と等しい場合は判定不能）"""
    if bound.value is not None and N2 > bound.value:
        return Uniqueness.UNIQUE

    return Uniqueness.INCONCLUSIVE


def hodge_determinant(d_bar: int, g1: int, iota1: int, N2: int) -> int:
    """(R̃+Z_R, C̃+Z_C) の交点行列の行列式

    T(2(N₂−2)T − N₂ι₁) と一致することを確認する。
    """
    rr, cc, rc = fiber_intersections(d_bar, g1, iota1, N2)
    det = rr * cc - rc * rc
    t = _t(d_bar, g1)
    if det != t * (2 * (N2 - 2) * t - N2 * iota1):
        raise ComputationError(f"hodge determinant mismatch: {det}")

    return det


@dataclass(frozen=True)
class FiberProductReport:
    """ファイバー積の計算結果（一方の順序について）"""

    ordering: str
    N2: int
    g1: int
    t: int
    iota: int
    r_sq: int
    c_sq: int
    rc: int
    delta_r: int
    delta_c: int
    positivity: PositivityVerdict
    hodge_det: int
    bound: MainBound
    verdict: Uniqueness

    def to_dict(self) -> dict[str, Any]:
        return {
            "ordering": self.ordering,
            "N2": self.N2,
            "g1": self.g1,
            "T": self.t,
            "iota1": self.iota,
            "RZ_sq": self.r_sq,
            "CZ_sq": self.c_sq,
            "RZ_CZ": self.rc,
            "delta_R": self.delta_r,
            "delta_C": self.delta_c,
            "positivity": self.positivity.value,
            "positivity_holds": self.positivity.holds,
            "hodge_det": self.hodge_det,
            "bound": self.bound.value if self.bound.value is not None else "Unbounded",
            "verdict": str(self.verdict),
        }


@dataclass(frozen=True)
class PairReport:
    classification: PairClassification
    reports: tuple[FiberProductReport, ...]

    @property
    def verdict(self) -> Uniqueness:
        if any(r.verdict == Uniqueness.UNIQUE for r in self.reports):
            return Uniqueness.UNIQUE

        return Uniqueness.INCONCLUSIVE

    def to_dict(self) -> dict[str, Any]:
        return {
            "classification": self.classification.to_dict(),
            "orderings": [r.to_dict() for r in self.reports],
            "verdict": str(self.verdict),
        }


def fiber_product_report(
    cls: PairClassification, ordering: str = "12"
) -> FiberProductReport:
    """第 1 の被覆を基準にファイバー積の数値を求める。"""
    g1 = cls.g1
    iota1 = iota(cls)
    rr, cc, rc = fiber_intersections(cls.d_bar, g1, iota1, cls.N2)
    delta_r, delta_c = delta_R_delta_C(cls, cls.delta0, cls.delta1, cls.N2)

    nu, nu_prime = nu_of_profile(cls.branch_singularities)
    d_hat = plucker_dual_degree(cls.d, cls.g, nu)
    positivity = positivity_check(
        cls.d,
        d_hat,
        cls.delta0,
        nu_prime,
        cls.c,
        cls.c_pp,
        n_ss=cls.n_ss,
        c_ss=cls.c_ss,
    )
    if positivity.value != rr:
        raise ComputationError(
            f"positivity value {positivity.value} != (R+Z_R)^2 = {rr}"
        )

    bound = main_bound(cls.d_bar, g1, iota1)
    verdict = uniqueness_verdict(cls.N2, bound)
    logger.debug(f"ordering {ordering}: T={_t(cls.d_bar, g1)}, bound={bound}")
    return FiberProductReport(
        ordering=ordering,
        N2=cls.N2,
        g1=g1,
        t=_t(cls.d_bar, g1),
        iota=iota1,
        r_sq=rr,
        c_sq=cc,
        rc=rc,
        delta_r=delta_r,
        delta_c=delta_c,
        positivity=positivity,
        hodge_det=hodge_determinant(cls.d_bar, g1, iota1, cls.N2),
        bound=bound,
        verdict=verdict,
    )


def evaluate_pair(cls: PairClassification) -> PairReport:
    """両方の順序（N1 が与えられた場合）で評価し、強い方の判定を採る。"""
    reports = [fiber_product_report(cls, "12")]
    if cls.N1 is not None:
        reports.append(fiber_product_report(cls.swapped(), "21"))

    result = PairReport(classification=cls, reports=tuple(reports))
    logger.info(f"pair verdict: {result.verdict}")
    return result
