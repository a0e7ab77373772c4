from __future__ import annotations

from ..core.ade import AdeType, Family
from ..core.errors import InvalidDual
from .profile import SingularityProfile

__all__ = ["nu_invariant", "nu_of_profile", "plucker_dual_degree"]


def nu_invariant(t: AdeType) -> int:
    """双対曲線の次数を下げる寄与 ν

    ν(A_{2k−1}) = ν(D_{2k+2}) = 0, ν(A_{2k}) = ν(D_{2k+3}) = ν(E₇) = 1,
    ν(E₆) = ν(E₈) = 2
    """
    n = t.index
    match t.family:
        case Family.A:
            return 1 if n % 2 == 0 else 0
        case Family.D:
            return 1 if n % 2 == 1 else 0
        case _:
            return 1 if n == 7 else 2


def nu_of_profile(p: SingularityProfile) -> tuple[int, int]:
    """(ν, ν′)。ν = c + ν′ で、ν′ は通常尖点以外の寄与。"""
    nu = sum(v * nu_invariant(t) for t, v in p.items())
    return nu, nu - p.c


def plucker_dual_degree(d: int, g: int, nu: int) -> int:
    """d̂ = 2d + 2g − 2 − ν

    Raises:
        InvalidDual: d̂ ≤ 0
    """
    value = 2 * d + 2 * g - 2 - nu
    if value <= 0:
        raise InvalidDual(f"dual degree {value} <= 0 for d={d}, g={g}, nu={nu}")

    return value
