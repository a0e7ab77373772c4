from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..core.errors import (
    BoundViolated,
    ComputationError,
    InvalidContext,
    InvalidProfile,
    NegativeGenus,
    NonIntegralChi,
)
from .profile import CoveringProfile

__all__ = [
    "ChernNumbers",
    "DegreeBounds",
    "defect_of_surface",
    "genus_of_B",
    "arithmetic_genus_R",
    "self_intersections",
    "chern_and_euler",
    "evaluate_degree_bounds",
    "degree_bounds",
    "cusp_count_from_euler",
    "s_point_bound",
]


@dataclass(frozen=True)
class ChernNumbers:
    """(K_S², e(S), χ(O_S))"""

    k2: int
    e: int
    chi: int


@dataclass(frozen=True)
class DegreeBounds:
    """被覆次数の上界

    Attributes:
        simple (int): d̄ + 1
        hodge (Fraction): 4d̄² / (3d̄ + g − 1 + δ_X)
        within (bool): N が両方の上界以下
        equality (bool): N = hodge（L̄ ≡ mK_S の場合に限る、幾何的には未検証）
    """

    simple: int
    hodge: Fraction
    within: bool
    equality: bool


def defect_of_surface(p: CoveringProfile) -> int:
    """曲面 X の欠損 δ_X（s 型の特異点のみが寄与する）

    δ_X = δ − n_p − c_p とも一致することを確認する。
    """
    value = p.surface_singularities.delta
    if value != p.delta - p.n_p - p.c_p:
        raise ComputationError(
            f"delta_X = {value} differs from delta - n_p - c_p = "
            f"{p.delta - p.n_p - p.c_p}"
        )

    return value


def genus_of_B(d: int, delta: int) -> int:
    """g = (d−1)(d−2)/2 − δ

    Raises:
        NegativeGenus: 結果が負
    """
    if d < 1:
        raise InvalidProfile(f"curve degree must be positive: {d}")

    g = (d - 1) * (d - 2) // 2 - delta
    if g < 0:
        raise NegativeGenus(f"geometric genus {g} < 0 for d={d}, delta={delta}")

    return g


def arithmetic_genus_R(
    d: int,
    n_p: int,
    c_p: int,
    g: Optional[int] = None,
    delta_x: Optional[int] = None,
) -> int:
    """p_a(R) = (d−1)(d−2)/2 − n_p − c_p

    g と δ_X が与えられた場合は p_a(R) = g + δ_X と一致することを確認する。
    """
    if d % 2 != 0:
        raise InvalidProfile(f"branch curve degree must be even: {d}")

    value = (d - 1) * (d - 2) // 2 - n_p - c_p
    if g is not None and delta_x is not None and value != g + delta_x:
        raise ComputationError(
            f"p_a(R) = {value} differs from g + delta_X = {g + delta_x}"
        )

    return value


def self_intersections(d_bar: int, g: int, delta_x: int) -> tuple[int, int]:
    """(R̄², (R̄ + Z)²) = (3d̄ + g − 1 − δ_X, 3d̄ + p_a(R) − 1)"""
    p_a = g + delta_x
    return 3 * d_bar + g - 1 - delta_x, 3 * d_bar + p_a - 1


def chern_and_euler(
    N: int,
    d_bar: int,
    p_a: int,
    g: int,
    delta_x: int,
    c_p: int,
    n_p: int = 0,
) -> ChernNumbers:
    """K_S²、位相的 Euler 数、構造層の Euler 標数を求める。

    K² = 9N − 9d̄ + p_a(R) − 1（9N + d(d−12)/2 − n_p − c_p とも一致）
    e = 3N + 2g − 2 + 2δ_X − c_p
    χ = N + d̄(d̄−3)/2 − n_p/4 − c_p/3
    最後に Noether の公式 K² + e = 12χ を確認する。

    Raises:
        NonIntegralChi: n_p が 4 で、または c_p が 3 で割り切れない
        ComputationError: 二通りの K² や Noether の公式が一致しない
    """
    if n_p % 4 != 0 or c_p % 3 != 0:
        raise NonIntegralChi(
            f"chi is not an integer: n_p={n_p} (mod 4), c_p={c_p} (mod 3)"
        )

    d = 2 * d_bar
    k2 = 9 * N - 9 * d_bar + p_a - 1
    k2_alt = 9 * N + d * (d - 12) // 2 - n_p - c_p
    if k2 != k2_alt:
        raise ComputationError(f"K^2 forms disagree: {k2} != {k2_alt}")

    e = 3 * N + 2 * g - 2 + 2 * delta_x - c_p
    chi = N + d_bar * (d_bar - 3) // 2 - n_p // 4 - c_p // 3
    if k2 + e != 12 * chi:
        raise ComputationError(f"Noether identity fails: {k2} + {e} != 12 * {chi}")

    return ChernNumbers(k2=k2, e=e, chi=chi)


def evaluate_degree_bounds(N: int, d_bar: int, g: int, delta_x: int) -> DegreeBounds:
    """被覆次数の 2 つの上界を厳密な有理数比較で評価する（超過しても例外にしない）。

    Raises:
        InvalidContext: 3d̄ + g − 1 + δ_X ≤ 0
    """
    denom = 3 * d_bar + g - 1 + delta_x
    if denom <= 0:
        raise InvalidContext(f"3*d_bar + g - 1 + delta_X = {denom} must be positive")

    hodge = Fraction(4 * d_bar * d_bar, denom)
    simple = d_bar + 1
    return DegreeBounds(
        simple=simple,
        hodge=hodge,
        within=N <= simple and N <= hodge,
        equality=N == hodge,
    )


def degree_bounds(N: int, d_bar: int, g: int, delta_x: int) -> DegreeBounds:
    """N ≤ d̄ + 1 と N ≤ 4d̄²/(3d̄ + g − 1 + δ_X) を確認する。

    Raises:
        BoundViolated: どちらかの上界を超える
    """
    bounds = evaluate_degree_bounds(N, d_bar, g, delta_x)
    if not bounds.within:
        raise BoundViolated(
            f"N={N} exceeds the degree bounds d_bar+1={bounds.simple}, "
            f"4d_bar^2/(3d_bar+g-1+delta_X)={bounds.hodge}"
        )

    return bounds


def cusp_count_from_euler(N: int, p_a: int, e: int) -> int:
    """c_p = 3N + 2p_a(R) − 2 − e"""
    return 3 * N + 2 * p_a - 2 - e


def s_point_bound(e: int, k: int) -> Fraction:
    """曲面上の特異点の個数の上界 n_s + c_s ≤ (2/9)(3e − k)"""
    return Fraction(2, 9) * (3 * e - k)
