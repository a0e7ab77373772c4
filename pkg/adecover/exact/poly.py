from __future__ import annotations

from fractions import Fraction

import sympy
from sympy import QQ, Poly, Symbol

from ..core.errors import IdentityFailed, InexactDivision

__all__ = [
    "X",
    "Y",
    "Z",
    "make_poly",
    "poly_add",
    "poly_mul",
    "substitute",
    "divide_exact",
    "multiplicity",
    "order_in",
    "leading_form",
    "is_zero_at_origin",
    "cubic_discriminant",
    "render",
    "to_fraction",
    "coefficients",
]

X, Y, Z = sympy.symbols("x y z")


def make_poly(expr: sympy.Expr | int | str, *gens: Symbol) -> Poly:
    """有理数係数の多項式を作る。

    Args:
        expr: 式（文字列も可）
        *gens (Symbol): 変数の並び。省略時は (x, y)

    Returns:
        Poly: QQ 上の多項式
    """
    if isinstance(expr, str):
        expr = sympy.sympify(expr, locals={s.name: s for s in (X, Y, Z, *gens)})

    return Poly(expr, *(gens or (X, Y)), domain=QQ)


def _unify(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if p.gens == q.gens:
        return p, q

    gens = tuple(dict.fromkeys((*p.gens, *q.gens)))
    return (
        Poly(p.as_expr(), *gens, domain=QQ),
        Poly(q.as_expr(), *gens, domain=QQ),
    )


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = _unify(p, q)
    return a + b


def poly_mul(p: Poly, q: Poly) -> Poly:
    a, b = _unify(p, q)
    return a * b


def substitute(p: Poly, var: Symbol, value: Poly | sympy.Expr | int) -> Poly:
    """変数 var を多項式 value で置き換える。

    結果の変数は元の変数（var を除く）と value の変数の和集合。
    """
    expr_value = value.as_expr() if isinstance(value, Poly) else sympy.sympify(value)
    out = p.as_expr().subs(var, expr_value)
    keep = [g for g in p.gens if g != var]
    extra = sorted(
        (s for s in expr_value.free_symbols if s not in keep),
        key=lambda s: s.name,
    )
    gens = tuple(keep) + tuple(extra)
    if not gens:
        gens = p.gens

    return Poly(sympy.expand(out), *gens, domain=QQ)


def divide_exact(p: Poly, q: Poly) -> Poly:
    """割り切れる場合のみ商を返す。

    Raises:
        InexactDivision: 余りが 0 でない
    """
    a, b = _unify(p, q)
    quo, rem = a.div(b)
    if not rem.is_zero:
        raise InexactDivision(f"{render(a)} is not divisible by {render(b)}")

    return quo


def multiplicity(p: Poly) -> int:
    """原点での重複度（最低全次数）。零多項式は 0 とみなさない。"""
    if p.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")

    return min(sum(m) for m in p.monoms())


def order_in(p: Poly, var: Symbol) -> int:
    """var 以外を 0 にしたときの var についての消滅位数。恒等的に 0 なら -1。"""
    rest = {g: 0 for g in p.gens if g != var}
    q = Poly(p.as_expr().subs(rest), var, domain=QQ)
    if q.is_zero:
        return -1

    return min(m[0] for m in q.monoms())


def leading_form(p: Poly) -> Poly:
    """最低次斉次部分"""
    m = multiplicity(p)
    terms = [(mon, c) for mon, c in p.terms() if sum(mon) == m]
    return Poly.from_dict(dict(terms), *p.gens, domain=QQ)


def is_zero_at_origin(p: Poly) -> bool:
    return p.is_zero or p.coeff_monomial(1) == 0


def cubic_discriminant(a2: Poly | sympy.Expr, a3: Poly | sympy.Expr) -> Poly:
    """z³ + a₂z + a₃ の判別式を 3 次式とその z 微分の Sylvester 終結式で求める。

    符号は 4a₂³ + 27a₃² の形になるように正規化する。変数は a₂, a₃ に
    現れるもの（名前順）、定数なら x。

    Raises:
        IdentityFailed: 終結式が 4a₂³ + 27a₃² と ±1 倍で一致しない
    """
    e2 = a2.as_expr() if isinstance(a2, Poly) else sympy.sympify(a2)
    e3 = a3.as_expr() if isinstance(a3, Poly) else sympy.sympify(a3)
    cubic = Z**3 + e2 * Z + e3
    res = sympy.expand(sympy.resultant(cubic, sympy.diff(cubic, Z), Z))

    shape = sympy.expand(4 * e2**3 + 27 * e3**2)
    if sympy.expand(res + shape) == 0 and res != 0:
        res = -res
    elif sympy.expand(res - shape) != 0:
        raise IdentityFailed(f"resultant {res} does not match 4a2^3+27a3^2")

    gens = sorted(res.free_symbols, key=str) or [X]
    return Poly(res, *gens, domain=QQ)


def render(p: Poly | sympy.Expr) -> str:
    """次数付き辞書式順で文字列化する。"""
    expr = p.as_expr() if isinstance(p, Poly) else p
    return sympy.sstr(expr, order="grlex")


def to_fraction(c: object) -> Fraction:
    """sympy / gmpy の有理数を Fraction に変換する。"""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, sympy.Rational):
        return Fraction(int(c.p), int(c.q))

    num = getattr(c, "numerator", None)
    den = getattr(c, "denominator", None)
    if num is not None and den is not None:
        num = num() if callable(num) else num
        den = den() if callable(den) else den
        return Fraction(int(num), int(den))

    r = sympy.Rational(c)  # type: ignore[arg-type]
    return Fraction(int(r.p), int(r.q))


def coefficients(p: Poly) -> dict[tuple[int, ...], Fraction]:
    """指数ベクトル → 係数の辞書（0 係数なし）"""
    return {mon: to_fraction(c) for mon, c in p.terms() if c != 0}

