from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

import sympy
from sympy import QQ, Poly

from ..core.errors import ComputationError, IrrationalCenter, NotSingular
from ..exact.poly import (
    X,
    Y,
    divide_exact,
    is_zero_at_origin,
    leading_form,
    make_poly,
    multiplicity,
    order_in,
    render,
    to_fraction,
)
from ..logger import logger
from .record import (
    BRANCH,
    ChartPoint,
    Cluster,
    ExceptionalCurve,
    ResolutionRecord,
)

__all__ = ["PointStatus", "point_status", "needs_blowup", "blow_up"]


@dataclass(frozen=True)
class PointStatus:
    """特別点の局所的な状態

    Attributes:
        smooth_branch (bool): B̄ がこの点で滑らか（または通らない）
        normal_crossing (bool): 全変換がこの点で正規交差
        separated (bool): 分岐因子（B̄ と α 奇数の曲線）がこの点で交わらない
        reason (str): 判定理由
    """

    smooth_branch: bool
    normal_crossing: bool
    separated: bool
    reason: str

    @property
    def clean(self) -> bool:
        return self.smooth_branch and self.normal_crossing and self.separated


def _odd(alpha: Mapping[str, int], cid: Optional[str]) -> bool:
    return cid is not None and alpha[cid] % 2 == 1


def point_status(point: ChartPoint, alpha: Mapping[str, int]) -> PointStatus:
    """特別点の局所状態を判定する。

    Args:
        point (ChartPoint): 特別点
        alpha (Mapping[str, int]): 例外曲線 id → α

    Returns:
        PointStatus: 判定結果
    """
    if point.cluster is not None:
        cl = point.cluster
        odd = _odd(alpha, cl.curve)
        return PointStatus(
            smooth_branch=True,
            normal_crossing=cl.transversal,
            separated=not odd,
            reason="conjugate points" + (" on odd curve" if odd else ""),
        )

    g = point.poly
    curves = point.curves
    if g is None or not is_zero_at_origin(g):
        crossing_odd = len(curves) == 2 and all(_odd(alpha, c) for c in curves)
        return PointStatus(
            smooth_branch=True,
            normal_crossing=True,
            separated=not crossing_odd,
            reason="odd curves cross" if crossing_odd else "curve crossing",
        )

    m = multiplicity(g)
    smooth = m == 1
    if len(curves) == 2:
        return PointStatus(
            smooth_branch=smooth,
            normal_crossing=False,
            separated=False,
            reason="branch through curve crossing",
        )

    if len(curves) == 1:
        # x = 0 が eu、y = 0 が ev
        contact = order_in(g, Y) if point.eu is not None else order_in(g, X)
        nc = smooth and contact == 1
        odd = _odd(alpha, curves[0])
        if not smooth:
            reason = f"singular branch (mult {m}) on curve"
        elif contact > 1:
            reason = f"tangency of order {contact}"
        else:
            reason = "branch meets odd curve" if odd else "transversal branch"
        return PointStatus(
            smooth_branch=smooth,
            normal_crossing=nc,
            separated=smooth and not odd,
            reason=reason,
        )

    if smooth:
        return PointStatus(True, True, True, "smooth branch")

    nc = False
    if m == 2:
        lf = leading_form(g)
        a = lf.coeff_monomial(X**2)
        b = lf.coeff_monomial(X * Y)
        c = lf.coeff_monomial(Y**2)
        nc = b * b - 4 * a * c != 0

    return PointStatus(
        smooth_branch=False,
        normal_crossing=nc,
        separated=False,
        reason=f"singular branch (mult {m})",
    )


def needs_blowup(status: PointStatus, extra_blowups: bool) -> bool:
    """extra_blowups が偽なら B̄ の滑らかさのみ、真なら分岐因子の分離まで要求する。"""
    if extra_blowups:
        return not status.clean

    return not status.smooth_branch


class _Ledger:
    """ブローアップ中の可変な交点台帳"""

    def __init__(self, record: ResolutionRecord) -> None:
        self.order: list[str] = [c.id for c in record.curves]
        self.alpha: dict[str, int] = {c.id: c.alpha for c in record.curves}
        self.self_int: dict[str, int] = {c.id: c.self_int for c in record.curves}
        self.inc: dict[str, dict[str, int]] = {BRANCH: {}}
        for c in record.curves:
            self.inc.setdefault(c.id, {})
            for other, value in c.incidences:
                self.inc[c.id][other] = value
                self.inc.setdefault(other, {})[c.id] = value

    def get(self, a: str, b: str) -> int:
        return self.inc.get(a, {}).get(b, 0)

    def add(self, a: str, b: str, delta: int) -> None:
        value = self.get(a, b) + delta
        if value < 0:
            raise ComputationError(f"negative intersection {a}.{b} = {value}")

        self.inc.setdefault(a, {})[b] = value
        self.inc.setdefault(b, {})[a] = value

    def new_curve(self, alpha: int) -> str:
        cid = f"E{len(self.order) + 1}"
        self.order.append(cid)
        self.alpha[cid] = alpha
        self.self_int[cid] = -1
        self.inc.setdefault(cid, {})
        return cid

    def ledger_sum(self) -> int:
        return sum(s + 1 for s in self.self_int.values())

    def curves(self) -> tuple[ExceptionalCurve, ...]:
        out = []
        for cid in self.order:
            incid = tuple(
                sorted(
                    ((k, v) for k, v in self.inc[cid].items() if v > 0),
                    key=lambda kv: (kv[0] != BRANCH, kv[0]),
                )
            )
            out.append(
                ExceptionalCurve(
                    id=cid,
                    alpha=self.alpha[cid],
                    self_int=self.self_int[cid],
                    incidences=incid,
                )
            )

        return tuple(out)


def _chart1(g: Poly, m: int) -> Poly:
    """(x, y) ← (x, xy) を代入して x^m で割る（例外曲線は x = 0）"""
    expr = sympy.expand(g.as_expr().subs(Y, X * Y))
    return divide_exact(make_poly(expr), make_poly(X**m))


def _chart2(g: Poly, m: int) -> Poly:
    """(x, y) ← (xy, y) を代入して y^m で割る（例外曲線は y = 0）"""
    expr = sympy.expand(g.as_expr().subs(X, X * Y))
    return divide_exact(make_poly(expr), make_poly(Y**m))


def _points_on_new_curve(
    g1: Poly, key: tuple[int, ...], new_id: str
) -> list[ChartPoint]:
    """チャート 1 で例外曲線 x = 0 上にある原点以外の点を列挙する。"""
    h = Poly(g1.as_expr().subs(X, 0), Y, domain=QQ)
    if h.total_degree() <= 0:
        return []

    rational: list[Fraction] = []
    clusters: list[tuple[str, int, int]] = []
    _, factors = h.factor_list()
    for fac, mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            t = to_fraction(-b / a)
            if t != 0:
                rational.append(t)
        else:
            clusters.append((render(fac), fac.degree(), mult))

    points: list[ChartPoint] = []
    for i, t in enumerate(sorted(rational)):
        shift = sympy.Rational(t.numerator, t.denominator)
        shifted = sympy.expand(g1.as_expr().subs(Y, Y + shift))
        points.append(
            ChartPoint(key=key + (1, i), poly=make_poly(shifted), eu=new_id)
        )

    for i, (text, degree, mult) in enumerate(sorted(clusters)):
        points.append(
            ChartPoint(
                key=key + (2, i),
                cluster=Cluster(
                    curve=new_id, degree=degree, transversal=mult == 1, factor=text
                ),
            )
        )

    return points


def _blow_up_point(ledger: _Ledger, center: ChartPoint) -> list[ChartPoint]:
    g = center.poly if center.poly is not None else make_poly(1)
    eu, ev = center.eu, center.ev
    m = multiplicity(g) if is_zero_at_origin(g) else 0
    au = ledger.alpha[eu] if eu else 0
    av = ledger.alpha[ev] if ev else 0

    # 全変換 g·x^αu·y^αv の重複度と一致するはず
    total = g * make_poly(X**au * Y**av)
    if multiplicity(total) != m + au + av:
        raise ComputationError(
            f"multiplicity mismatch at {center.describe()}: "
            f"{multiplicity(total)} != {m} + {au} + {av}"
        )

    before = ledger.ledger_sum()
    new_id = ledger.new_curve(m + au + av)
    through = [c for c in (eu, ev) if c is not None]
    for c in through:
        ledger.self_int[c] -= 1
        ledger.add(BRANCH, c, -m)
        ledger.add(new_id, c, 1)
    if eu and ev:
        ledger.add(eu, ev, -1)
    ledger.add(BRANCH, new_id, m)

    if ledger.ledger_sum() != before - len(through):
        raise ComputationError("self-intersection ledger out of balance")

    g1 = _chart1(g, m)
    g2 = _chart2(g, m)
    points: list[ChartPoint] = []
    if ev is not None or is_zero_at_origin(g1):
        points.append(ChartPoint(key=center.key + (0,), poly=g1, eu=new_id, ev=ev))
    points.extend(_points_on_new_curve(g1, center.key, new_id))
    if eu is not None or is_zero_at_origin(g2):
        points.append(ChartPoint(key=center.key + (3,), poly=g2, eu=eu, ev=new_id))

    logger.debug(
        f"blow-up at {center.describe()}: {new_id} alpha={m + au + av} mult={m}"
    )
    return points


def _blow_up_cluster(ledger: _Ledger, center: ChartPoint) -> list[ChartPoint]:
    cl = center.cluster
    assert cl is not None
    if not cl.transversal:
        raise IrrationalCenter(
            f"non-transversal conjugate points on {cl.curve}: {cl.factor}"
        )

    # 共役な各点で B̄ は滑らかに横断的に交わる（重複度 1）
    before = ledger.ledger_sum()
    for _ in range(cl.degree):
        new_id = ledger.new_curve(1 + ledger.alpha[cl.curve])
        ledger.self_int[cl.curve] -= 1
        ledger.add(BRANCH, cl.curve, -1)
        ledger.add(new_id, cl.curve, 1)
        ledger.add(BRANCH, new_id, 1)

    if ledger.ledger_sum() != before - cl.degree:
        raise ComputationError("self-intersection ledger out of balance")

    logger.debug(f"separated {cl.degree} conjugate points on {cl.curve}")
    return []


def blow_up(record: ResolutionRecord, center: ChartPoint) -> ResolutionRecord:
    """特別点 center で σ 変換を行う。

    Args:
        record (ResolutionRecord): 現在の記録
        center (ChartPoint): 中心（record.points のいずれか）

    Raises:
        NotSingular: center がすでに要求を満たしている
        IrrationalCenter: 有理的でない中心が必要

    Returns:
        ResolutionRecord: 新しい記録
    """
    alpha = {c.id: c.alpha for c in record.curves}
    status = point_status(center, alpha)
    if not needs_blowup(status, record.extra_blowups):
        raise NotSingular(f"point does not need a blow-up: {center.describe()}")

    ledger = _Ledger(record)
    if center.cluster is not None:
        new_points = _blow_up_cluster(ledger, center)
    else:
        new_points = _blow_up_point(ledger, center)

    points = [p for p in record.points if p.key != center.key] + new_points
    added = len(ledger.order) - len(record.curves)
    return ResolutionRecord(
        germ=record.germ,
        curves=ledger.curves(),
        points=tuple(sorted(points, key=lambda p: p.key)),
        blowup_count=record.blowup_count + added,
        extra_blowups=record.extra_blowups,
    )
