from __future__ import annotations

from dataclasses import dataclass, field

import sympy
from sympy import Poly

from ..core.ade import AdeType, Family
from ..core.errors import NonReduced
from ..exact.poly import X, Y, is_zero_at_origin, make_poly, render

__all__ = ["CurveGerm", "standard_germ"]


@dataclass(frozen=True)
class CurveGerm:
    """原点における平面曲線の芽

    Attributes:
        poly (Poly): x, y の有理数係数多項式
        label (str): 表示用ラベル（型名など）
        vanishes_at_origin (bool): poly(0,0) = 0
    """

    poly: Poly
    label: str = ""
    vanishes_at_origin: bool = field(init=False)

    def __post_init__(self) -> None:
        if self.poly.gens != (X, Y):
            object.__setattr__(self, "poly", make_poly(self.poly.as_expr()))

        object.__setattr__(self, "vanishes_at_origin", is_zero_at_origin(self.poly))
        if self.poly.is_zero:
            raise NonReduced("germ polynomial is zero")

        # 偏微分との gcd が定数でなければ重複成分をもつ
        g = self.poly.gcd(self.poly.diff(X)).gcd(self.poly.diff(Y))
        if g.total_degree() > 0:
            raise NonReduced(f"germ is not square-free: {render(self.poly)}")

    @classmethod
    def from_text(cls, text: str, label: str = "") -> CurveGerm:
        return cls(poly=make_poly(text), label=label or text)

    def __str__(self) -> str:
        return render(self.poly)


def standard_germ(t: AdeType) -> CurveGerm:
    """A-D-E 型の標準形の芽を返す。

    A_n: y²−x^{n+1}, D_n: x(y²+x^{n−2}), E₆: x³+y⁴, E₇: x(x²+y³), E₈: x³+y⁵

    Args:
        t (AdeType): 型

    Returns:
        CurveGerm: 標準形
    """
    n = t.index
    match t.family:
        case Family.A:
            expr = Y**2 - X ** (n + 1)
        case Family.D:
            expr = X * (Y**2 + X ** (n - 2))
        case Family.E if n == 6:
            expr = X**3 + Y**4
        case Family.E if n == 7:
            expr = X * (X**2 + Y**3)
        case _:
            expr = X**3 + Y**5

    return CurveGerm(poly=make_poly(sympy.expand(expr)), label=str(t))
