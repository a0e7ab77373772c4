from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any, Iterable, Optional

from ..core.errors import ComputationError, InvalidInvariants
from ..invariants.formulas import s_point_bound
from ..logger import logger

__all__ = [
    "Criterion",
    "MCanonicalInput",
    "MCanonicalInvariants",
    "CriterionResult",
    "mcanonical_invariants",
    "iota_estimate",
    "general_criterion",
    "chisini_criterion",
    "scan_mcanonical",
]


class Criterion(StrEnum):
    HOLDS = "Holds"
    FAILS = "Fails"


@dataclass(frozen=True)
class MCanonicalInput:
    """m 重標準射影の入力

    Attributes:
        m (int): 多重標準の次数 (≥ 1)
        k (int): K_S² (≥ 1)
        e (Optional[int]): 位相的 Euler 数
    """

    m: int
    k: int
    e: Optional[int] = None

    def __post_init__(self) -> None:
        if self.m < 1 or self.k < 1:
            raise InvalidInvariants(f"m and k must be positive: m={self.m}, k={self.k}")
        if self.e is not None:
            # Miyaoka–Yau と Noether の不等式
            if self.k > 3 * self.e:
                raise InvalidInvariants(f"k={self.k} exceeds 3e={3 * self.e}")
            if self.e > 5 * self.k + 36:
                raise InvalidInvariants(
                    f"e={self.e} exceeds 5k+36={5 * self.k + 36}"
                )


@dataclass(frozen=True)
class MCanonicalInvariants:
    m: int
    k: int
    N: int
    d: int
    d_bar: int
    p_a_minus_1: int
    t: int

    @property
    def p_a(self) -> int:
        return self.p_a_minus_1 + 1

    def to_dict(self) -> dict[str, int]:
        return {
            "m": self.m,
            "k": self.k,
            "N": self.N,
            "d": self.d,
            "d_bar": self.d_bar,
            "p_a_R_minus_1": self.p_a_minus_1,
            "T": self.t,
        }


def mcanonical_invariants(m: int, k: int) -> MCanonicalInvariants:
    """N = m²k, d = m(3m+1)k, p_a(R) − 1 = (3m+1)(3m+2)k/2, T = (3m+1)²k"""
    MCanonicalInput(m=m, k=k)

    N = m * m * k
    d = m * (3 * m + 1) * k
    p_a_minus_1 = (3 * m + 1) * (3 * m + 2) * k // 2
    t = 3 * (d // 2) + p_a_minus_1
    if t != (3 * m + 1) ** 2 * k:
        raise ComputationError(f"T = {t} differs from (3m+1)^2 k")
    if N == 1:
        logger.warning(f"m={m}, k={k} gives a birational projection (N = 1)")

    return MCanonicalInvariants(
        m=m, k=k, N=N, d=d, d_bar=d // 2, p_a_minus_1=p_a_minus_1, t=t
    )


def iota_estimate(m: int, k: int, e: Optional[int] = None) -> Fraction:
    """ι₁ の上界

    e あり: (4/9)(3e − k) + 3N + 2p_a(R) − 2 − e
    e なし: Noether の不等式 e ≤ 5k + 36 を代入した (11/9)k + 12 + 3N + 2p_a(R) − 2

    Raises:
        InvalidInvariants: k > 3e または e > 5k + 36
    """
    MCanonicalInput(m=m, k=k, e=e)
    inv = mcanonical_invariants(m, k)
    if e is None:
        return Fraction(11, 9) * k + 12 + 3 * inv.N + 2 * inv.p_a - 2

    # c_p = 3N + 2p_a(R) − 2 − e, ι₁ ≤ 2(n_s + c_s) + c_p
    return 2 * s_point_bound(e, k) + 3 * inv.N + 2 * inv.p_a - 2 - e


def general_criterion(N: int, d: int, p_a: int, iota1: Fraction | int) -> Fraction:
    """(N − 2)(3d + 2p_a(R) − 2) − Nι

    正なら同じ分岐曲線を持つ次数 N の被覆は一意。
    """
    return Fraction((N - 2) * (3 * d + 2 * p_a - 2)) - N * Fraction(iota1)


@dataclass(frozen=True)
class CriterionResult:
    """m 重標準射影に対する一意性の判定

    Attributes:
        lhs, rhs (Fraction): 3m(2m+1) と 11/9 + (12 + 4(3 + 1/m)²)/k
        margin (Fraction): lhs − rhs
        margin_e (Optional[Fraction]): e を用いた ι の評価での余裕（e がある場合）
        noether_substituted (bool): e の代わりに Noether の不等式を使った
    """

    m: int
    k: int
    e: Optional[int]
    lhs: Fraction
    rhs: Fraction
    margin: Fraction
    verdict: Criterion
    margin_e: Optional[Fraction] = None
    verdict_e: Optional[Criterion] = None

    @property
    def noether_substituted(self) -> bool:
        return self.e is None

    @property
    def holds(self) -> bool:
        return self.verdict == Criterion.HOLDS

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "m": self.m,
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "verdict": str(self.verdict),
            "noether_substituted": self.noether_substituted,
        }
        if self.e is not None:
            out["e"] = self.e
            out["margin_e"] = self.margin_e
            out["verdict_e"] = str(self.verdict_e)
        return out


def _verdict(margin: Fraction) -> Criterion:
    return Criterion.HOLDS if margin > 0 else Criterion.FAILS


def chisini_criterion(m: int, k: int, e: Optional[int] = None) -> CriterionResult:
    """3m(2m+1) > 11/9 + (12 + 4(3 + 1/m)²)/k を厳密に評価する。

    これは Noether の上界による ι の評価を一般の判定式に代入し、m²k² で割ったもの。
    e が与えられた場合は、e による ι の評価でも判定する。
    """
    MCanonicalInput(m=m, k=k, e=e)
    inv = mcanonical_invariants(m, k)

    lhs = Fraction(3 * m * (2 * m + 1))
    rhs = Fraction(11, 9) + (12 + 4 * (3 + Fraction(1, m)) ** 2) / k
    margin = lhs - rhs

    general = general_criterion(inv.N, inv.d, inv.p_a, iota_estimate(m, k))
    if general != margin * m * m * k * k:
        raise ComputationError(
            f"criterion forms disagree at m={m}, k={k}: {general} vs {margin}"
        )

    margin_e: Optional[Fraction] = None
    verdict_e: Optional[Criterion] = None
    if e is not None:
        margin_e = general_criterion(inv.N, inv.d, inv.p_a, iota_estimate(m, k, e))
        verdict_e = _verdict(margin_e)

    return CriterionResult(
        m=m,
        k=k,
        e=e,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        verdict=_verdict(margin),
        margin_e=margin_e,
        verdict_e=verdict_e,
    )


def scan_mcanonical(
    ms: Iterable[int], ks: Iterable[int], e: Optional[int] = None
) -> list[CriterionResult]:
    """(m, k) の格子上で判定し、(m, k) の順に並べて返す。"""
    ks = sorted(set(ks))
    results = [chisini_criterion(m, k, e) for m in sorted(set(ms)) for k in ks]
    fails = sum(1 for r in results if not r.holds)
    logger.info(f"scanned {len(results)} cells, {fails} fail")
    return results
