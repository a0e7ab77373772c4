from __future__ import annotations

import itertools
from typing import Optional

from ..config.resolve_config import ResolveConfig
from ..core.errors import (
    BranchNotDisjoint,
    ComputationError,
    NotDynkin,
    OddSelfIntersection,
    SingularMatrix,
)
from ..exact.linalg import is_negative_definite
from ..logger import logger
from ..resolution.record import BRANCH, ExceptionalCurve, ResolutionRecord
from .graph import CoverComponent, CoverGraph
from .minimal import contract_to_minimal

__all__ = ["lift_components", "build_double_cover", "pullback_defects"]


def _branch_points(curve: ExceptionalCurve, odd: set[str]) -> int:
    """α 偶数の曲線上の分岐点の数（B̄ と α 奇数の曲線との交点）"""
    return curve.meets(BRANCH) + sum(v for k, v in curve.incidences if k in odd)


def lift_components(res: ResolutionRecord) -> list[CoverComponent]:
    """下の例外曲線ごとに二重被覆上の成分を作る。

    分岐点 2g+2 個をもつ α 偶数の曲線の持ち上げは種数 g の曲線になる。

    Raises:
        OddSelfIntersection: α 奇数なのに自己交点数が奇数
        BranchNotDisjoint: α 偶数の曲線上の分岐点数が奇数
    """
    odd = {c.id for c in res.curves if c.is_odd}
    out: list[CoverComponent] = []
    for c in res.curves:
        num = c.id[1:]
        if c.is_odd:
            if c.self_int % 2 != 0:
                raise OddSelfIntersection(
                    f"{c.id} has odd alpha and odd self-intersection {c.self_int}"
                )
            out.append(
                CoverComponent(
                    id=f"L{num}",
                    over=c.id,
                    split=False,
                    self_int=c.self_int // 2,
                    is_ramification_branch=True,
                    alpha=c.alpha,
                )
            )
            continue

        bp = _branch_points(c, odd)
        if bp % 2 != 0:
            raise BranchNotDisjoint(
                f"{c.id} carries an odd number ({bp}) of branch points"
            )
        if bp > 0:
            out.append(
                CoverComponent(
                    id=f"L{num}",
                    over=c.id,
                    split=False,
                    self_int=2 * c.self_int,
                    is_ramification_branch=False,
                    alpha=c.alpha,
                    genus=bp // 2 - 1,
                )
            )
        else:
            for sheet, mark in enumerate(("'", "''")):
                out.append(
                    CoverComponent(
                        id=f"L{num}{mark}",
                        over=c.id,
                        split=True,
                        self_int=c.self_int,
                        is_ramification_branch=False,
                        alpha=c.alpha,
                        sheet=sheet,
                    )
                )

    return out


def _check_branch_disjoint(res: ResolutionRecord) -> None:
    if not res.branch_separated:
        raise BranchNotDisjoint(
            "branch divisor is not a disjoint union of smooth curves; "
            "resolve with extra blow-ups first"
        )

    odd = {c.id for c in res.curves if c.is_odd}
    for c in res.curves:
        if c.id not in odd:
            continue
        if c.meets(BRANCH) > 0:
            raise BranchNotDisjoint(f"proper transform meets odd curve {c.id}")
        for other, n in c.incidences:
            if other in odd and n > 0:
                raise BranchNotDisjoint(f"odd curves {c.id} and {other} meet")


def _assemble(
    res: ResolutionRecord,
    comps: list[CoverComponent],
    straight: dict[tuple[str, str], int],
) -> CoverGraph:
    """straight[(a, b)] は分裂ペア同士の交点のうち同じシートどうしを結ぶ個数。"""
    by_over: dict[str, list[CoverComponent]] = {}
    for c in comps:
        by_over.setdefault(c.over, []).append(c)

    edges: dict[tuple[str, str], int] = {}

    def put(a: str, b: str, n: int) -> None:
        if n <= 0:
            return
        key = (a, b) if a <= b else (b, a)
        edges[key] = edges.get(key, 0) + n

    order = [c.id for c in res.curves]
    for i, a_id in enumerate(order):
        a = res.curve(a_id)
        for b_id in order[i + 1 :]:
            n = a.meets(b_id)
            if n == 0:
                continue
            la, lb = by_over[a_id], by_over[b_id]
            if len(la) == 1 and len(lb) == 1:
                ca, cb = la[0], lb[0]
                # 分岐成分との交点は分岐点なので持ち上げは n、それ以外は 2n
                if ca.is_ramification_branch or cb.is_ramification_branch:
                    put(ca.id, cb.id, n)
                else:
                    put(ca.id, cb.id, 2 * n)
            elif len(la) == 1 or len(lb) == 1:
                single, pair = (la[0], lb) if len(la) == 1 else (lb[0], la)
                if single.is_ramification_branch:
                    raise ComputationError(
                        f"split curve {pair[0].over} meets branch curve {single.over}"
                    )
                for p in pair:
                    put(single.id, p.id, n)
            else:
                s = straight[(a_id, b_id)]
                put(la[0].id, lb[0].id, s)
                put(la[1].id, lb[1].id, s)
                put(la[0].id, lb[1].id, n - s)
                put(la[1].id, lb[0].id, n - s)

    r = []
    for c in comps:
        b = res.curve(c.over).meets(BRANCH)
        if c.split and b > 0:
            raise ComputationError(f"split curve {c.over} meets the branch curve")
        r.append(0 if c.is_ramification_branch else b)

    return CoverGraph(
        components=tuple(comps),
        edges=tuple(sorted((a, b, n) for (a, b), n in edges.items())),
        r_incidence=tuple(r),
    )


def pullback_defects(res: ResolutionRecord, g: CoverGraph) -> list[str]:
    """引き戻しとの整合性を確認し、不整合な組を列挙する。

    Σ_{A over a, B over b} m_A m_B (A·B) = 2 (a·b)（m は分岐成分で 2、それ以外 1）
    """
    mult = {c.id: (2 if c.is_ramification_branch else 1) for c in g.components}
    over: dict[str, list[str]] = {}
    for c in g.components:
        over.setdefault(c.over, []).append(c.id)

    bad = []
    ids = [c.id for c in res.curves]
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            total = sum(
                mult[x] * mult[y] * g.edge(x, y) for x in over[a] for y in over[b]
            )
            if total != 2 * res.curve(a).meets(b):
                bad.append(f"{a}.{b}")
        total_self = sum(
            mult[x] * mult[y] * (g.component(x).self_int if x == y else g.edge(x, y))
            for x in over[a]
            for y in over[a]
        )
        if total_self != 2 * res.curve(a).self_int:
            bad.append(f"{a}.{a}")

    return bad


def build_double_cover(
    res: ResolutionRecord, max_assignments: Optional[int] = None
) -> CoverGraph:
    """z² = h(x,y) の二重被覆上の例外集合の交点グラフを作る。

    分裂ペア同士が交わる場合、交点のシート割り当ては局所的に決まらないので
    全ての割り当てを試し、縮約後に A-D-E Dynkin 図形になるものを採用する。
    採用候補が複数ある場合は同じ型であることを確認する。

    Args:
        res (ResolutionRecord): 正規交差かつ分岐因子が分離された記録
        max_assignments (Optional[int]): 割り当て探索の上限

    Raises:
        BranchNotDisjoint: 分岐因子が互いに素でない
        OddSelfIntersection: α 奇数で自己交点数が奇数
        NotDynkin: どの割り当ても Dynkin 図形にならない、または正の種数の成分がある

    Returns:
        CoverGraph: 交点グラフ
    """
    _check_branch_disjoint(res)
    comps = lift_components(res)
    for c in comps:
        if c.genus > 0:
            raise NotDynkin(
                f"{c.id} over {c.over} has genus {c.genus}; "
                f"{res.germ} is not a simple singularity"
            )
    split = {c.over for c in comps if c.split}

    ambiguous: list[tuple[tuple[str, str], int]] = []
    ids = [c.id for c in res.curves]
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            n = res.curve(a).meets(b)
            if n > 0 and a in split and b in split:
                ambiguous.append(((a, b), n))

    limit = (
        ResolveConfig.max_sheet_assignments
        if max_assignments is None
        else max_assignments
    )
    total = 1
    for _, n in ambiguous:
        total *= n + 1
    if total > limit:
        raise ComputationError(f"{total} sheet assignments exceed the limit {limit}")

    candidates: list[CoverGraph] = []
    types = set()
    for choice in itertools.product(*(range(n + 1) for _, n in ambiguous)):
        straight = {key: s for (key, _), s in zip(ambiguous, choice)}
        g = _assemble(res, comps, straight)
        if not is_negative_definite(g.matrix()):
            continue
        try:
            minimal = contract_to_minimal(g)
        except (NotDynkin, SingularMatrix):
            continue
        candidates.append(g)
        types.add(minimal.ade_type)

    if not candidates:
        raise NotDynkin(f"no sheet assignment over {res.germ} yields a Dynkin graph")
    if len(types) > 1:
        raise ComputationError(
            f"sheet assignments give different types: {sorted(map(str, types))}"
        )

    g = candidates[0]
    bad = pullback_defects(res, g)
    if bad:
        raise ComputationError(f"pullback compatibility fails for {bad}")

    logger.debug(
        f"double cover of {res.germ}: {len(g.components)} components, "
        f"{len(candidates)}/{total} sheet assignments valid"
    )
    return g
