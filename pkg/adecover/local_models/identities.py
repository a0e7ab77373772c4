from __future__ import annotations

from typing import Any

import sympy
from sympy import QQ, Poly, Rational

from ..core.errors import IdentityFailed, InputError
from ..exact.poly import (
    X,
    Y,
    Z,
    cubic_discriminant,
    make_poly,
    order_in,
    render,
    substitute,
)
from ..logger import logger

__all__ = ["verify_f3_identity", "verify_f6_identity", "pleat_normal_form_check"]


def _require_zero(name: str, p: Poly) -> None:
    if not p.is_zero:
        raise IdentityFailed(f"{name}: nonzero remainder {render(p)}")


def verify_f3_identity() -> dict[str, Any]:
    """3 次の局所モデル f₃ の恒等式を確認する。

    y = −½(z³ − 3xz) を x³ − y² に代入すると (x − z²)²(x − ¼z²) に一致し、
    R: x = z² と C: x = ¼z² は原点で 2 位の接触をもつ。

    Raises:
        IdentityFailed: 恒等式が成り立たない
    """
    y = -Rational(1, 2) * (Z**3 - 3 * X * Z)
    lhs = make_poly(X**3 - y**2, X, Z)
    rhs = make_poly((X - Z**2) ** 2 * (X - Rational(1, 4) * Z**2), X, Z)
    _require_zero("f3 identity", lhs - rhs)

    # x = z² を C の式に代入した z の位数が交点数
    c_curve = make_poly(X - Rational(1, 4) * Z**2, X, Z)
    on_r = substitute(c_curve, X, Z**2)
    contact = order_in(on_r, Z)
    if contact != 2:
        raise IdentityFailed(f"f3: expected (C.R) = 2, got {contact}")

    logger.debug("f3 identity verified")
    return {
        "model": "f3",
        "substitution": "y = -(z^3 - 3*x*z)/2",
        "lhs": render(lhs),
        "rhs": "(x - z**2)**2*(x - z**2/4)",
        "remainder": "0",
        "contact_CR": contact,
    }


def verify_f6_identity() -> dict[str, Any]:
    """6 次の局所モデル f₆ の恒等式を確認する。

    x = −⅓(z₁z₂ + z₂z₃ + z₃z₁), y = −½z₁z₂z₃ のとき
    x³ − y² − (1/108)Π(z_i − z_j)² が z₁ + z₂ + z₃ の生成するイデアルに入る。

    Raises:
        IdentityFailed: 剰余が 0 でない
    """
    z1, z2, z3 = sympy.symbols("z1 z2 z3")
    x = -Rational(1, 3) * (z1 * z2 + z2 * z3 + z3 * z1)
    y = -Rational(1, 2) * z1 * z2 * z3
    vandermonde = ((z2 - z1) * (z3 - z2) * (z1 - z3)) ** 2
    diff = Poly(x**3 - y**2 - Rational(1, 108) * vandermonde, z3, z1, z2, domain=QQ)

    # z₃ について一次でモニックなので、剰余は z₃ = −z₁ − z₂ の代入と同じ
    quo, rem = diff.div(Poly(z1 + z2 + z3, z3, z1, z2, domain=QQ))
    _require_zero("f6 identity", rem)

    logger.debug("f6 identity verified")
    return {
        "model": "f6",
        "substitution": "x = -(z1*z2 + z2*z3 + z3*z1)/3, y = -z1*z2*z3/2",
        "ideal": "z1 + z2 + z3",
        "quotient_terms": len(quo.terms()) if not quo.is_zero else 0,
        "remainder": "0",
    }


def pleat_normal_form_check(k: int) -> dict[str, Any]:
    """襞 y = z³ + x^k z の判別曲線が 4x^{3k} + 27y² であることを確認する。

    O_X を基底 {1, z, z²} の階数 3 の加群とみなし、ヤコビアン J = 3z² + x^k 倍の
    線形写像の行列式（0 次 Fitting イデアルの生成元）を計算する。

    Args:
        k (int): 襞の指数 (≥ 1)。k = 1 が通常の尖点

    Raises:
        IdentityFailed: 行列式が期待形と ±1 倍で一致しない
    """
    if k < 1:
        raise InputError(f"pleat exponent must be positive: {k}")

    relation = Poly(Z**3 + X**k * Z - Y, Z, domain=QQ[X, Y])
    jacobian = 3 * Z**2 + X**k

    columns = []
    for i in range(3):
        rem = Poly(jacobian * Z**i, Z, domain=QQ[X, Y]).rem(relation)
        expr = sympy.expand(rem.as_expr())
        columns.append([expr.coeff(Z, j) for j in range(3)])

    matrix = sympy.Matrix(3, 3, lambda r, c: columns[c][r])
    det = sympy.expand(matrix.det())

    expected = cubic_discriminant(X**k, -Y).as_expr()
    if sympy.expand(det - expected) != 0 and sympy.expand(det + expected) != 0:
        raise IdentityFailed(f"pleat k={k}: determinant {det} != {expected}")

    logger.debug(f"pleat k={k}: discriminant {expected}")
    return {
        "model": "pleat",
        "k": k,
        "matrix": [[render(v) for v in row] for row in matrix.tolist()],
        "determinant": render(det),
        "discriminant": render(expected),
        "ordinary_cusp": k == 1,
    }
