from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from ..core.errors import InvalidDual
from ..logger import logger
from .formulas import (
    ChernNumbers,
    DegreeBounds,
    arithmetic_genus_R,
    chern_and_euler,
    defect_of_surface,
    evaluate_degree_bounds,
    genus_of_B,
    self_intersections,
)
from .plucker import nu_of_profile, plucker_dual_degree
from .profile import CoveringProfile

__all__ = ["InvariantReport", "invariant_report"]


@dataclass(frozen=True)
class InvariantReport:
    """一般被覆の不変量一式"""

    profile: CoveringProfile
    d_bar: int
    delta_x: int
    delta: int
    delta0: int
    g: int
    p_a: int
    r_bar_sq: int
    r_bar_z_sq: int
    chern: ChernNumbers
    nu: int
    nu_prime: int
    d_hat: Optional[int]
    bounds: DegreeBounds

    @property
    def noether(self) -> bool:
        return self.chern.k2 + self.chern.e == 12 * self.chern.chi

    def to_dict(self) -> dict[str, Any]:
        return {
            "profile": self.profile.to_dict(),
            "d_bar": self.d_bar,
            "delta_X": self.delta_x,
            "delta": self.delta,
            "delta0": self.delta0,
            "g": self.g,
            "p_a_R": self.p_a,
            "R_bar_sq": self.r_bar_sq,
            "R_bar_plus_Z_sq": self.r_bar_z_sq,
            "K2": self.chern.k2,
            "e": self.chern.e,
            "chi": self.chern.chi,
            "nu": self.nu,
            "nu_prime": self.nu_prime,
            "dual_degree": self.d_hat,
            "bound_simple": self.bounds.simple,
            "bound_hodge": self.bounds.hodge,
            "within_bounds": self.bounds.within,
            "bound_equality": self.bounds.equality,
            "noether": self.noether,
        }


def invariant_report(p: CoveringProfile) -> InvariantReport:
    """プロファイルから全ての不変量を計算する。

    次数の上界は判定のみ行い、超過しても例外にはしない（呼び出し側で判断する）。

    Args:
        p (CoveringProfile): 検証済みのプロファイル

    Returns:
        InvariantReport: 不変量
    """
    delta_x = defect_of_surface(p)
    g = genus_of_B(p.d, p.delta)
    p_a = arithmetic_genus_R(p.d, p.n_p, p.c_p, g=g, delta_x=delta_x)
    r_bar_sq, r_bar_z_sq = self_intersections(p.d_bar, g, delta_x)
    chern = chern_and_euler(p.N, p.d_bar, p_a, g, delta_x, p.c_p, n_p=p.n_p)
    nu, nu_prime = nu_of_profile(p.branch_singularities)

    # 可約な B では Plücker の公式が意味を持たないことがある
    d_hat: Optional[int]
    try:
        d_hat = plucker_dual_degree(p.d, g, nu)
    except InvalidDual as e:
        logger.warning(f"dual degree unavailable: {e}")
        d_hat = None

    bounds = evaluate_degree_bounds(p.N, p.d_bar, g, delta_x)
    if bounds.equality:
        logger.info(f"degree bound attained: N = {bounds.hodge}")

    return InvariantReport(
        profile=p,
        d_bar=p.d_bar,
        delta_x=delta_x,
        delta=p.delta,
        delta0=p.delta0,
        g=g,
        p_a=p_a,
        r_bar_sq=r_bar_sq,
        r_bar_z_sq=r_bar_z_sq,
        chern=chern,
        nu=nu,
        nu_prime=nu_prime,
        d_hat=d_hat,
        bounds=bounds,
    )
