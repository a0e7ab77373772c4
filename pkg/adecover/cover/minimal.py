from __future__ import annotations

import networkx as nx

from ..core.ade import AdeType, Family
from ..core.errors import ComputationError, NotDynkin
from ..logger import logger
from .canonical import canonical_cycle_formula
from .graph import CoverGraph, MinimalGraph

__all__ = [
    "classify_dynkin",
    "contract_once",
    "contraction_steps",
    "contract_to_minimal",
]


def classify_dynkin(
    ids: tuple[str, ...], edges: tuple[tuple[str, str, int], ...]
) -> AdeType:
    """(−2) 曲線のグラフを A-D-E 型に分類する。

    Args:
        ids (tuple[str, ...]): 頂点
        edges (tuple[tuple[str, str, int], ...]): 辺（交点数つき）

    Raises:
        NotDynkin: 単純レース型の Dynkin 図形でない

    Returns:
        AdeType: 型
    """
    if not ids:
        raise NotDynkin("empty exceptional graph")

    g = nx.Graph()
    g.add_nodes_from(ids)
    for a, b, n in edges:
        if n != 1:
            raise NotDynkin(f"edge {a}-{b} has multiplicity {n}")
        g.add_edge(a, b)

    if not nx.is_tree(g):
        raise NotDynkin("exceptional graph is not a tree")

    degrees = dict(g.degree())
    if max(degrees.values(), default=0) > 3:
        raise NotDynkin("vertex of degree > 3")

    centres = [v for v, d in degrees.items() if d == 3]
    n = g.number_of_nodes()
    if not centres:
        return AdeType(family=Family.A, index=n)
    if len(centres) > 1:
        raise NotDynkin("more than one branch vertex")

    h = g.copy()
    h.remove_node(centres[0])
    arms = sorted(len(c) for c in nx.connected_components(h))
    match arms:
        case [1, 1, r]:
            return AdeType(family=Family.D, index=r + 3)
        case [1, 2, 2]:
            return AdeType(family=Family.E, index=6)
        case [1, 2, 3]:
            return AdeType(family=Family.E, index=7)
        case [1, 2, 4]:
            return AdeType(family=Family.E, index=8)
        case _:
            raise NotDynkin(f"arm lengths {arms} are not of type D or E")


def _rz(g: CoverGraph) -> int:
    z = canonical_cycle_formula(g).as_dict()
    return sum(z[c.id] * r for c, r in zip(g.components, g.r_incidence))


def contract_once(g: CoverGraph, target: str) -> CoverGraph:
    """(−1) 成分 target を縮約する。

    a·b += (a·E)(b·E)、a² += (a·E)²、R̄·a += (R̄·E)(a·E)。
    係数は押し出しでそのまま残る。
    """
    e = g.component(target)
    if e.self_int != -1:
        raise ComputationError(f"{target} is not a (-1)-curve")

    r = dict(zip(g.ids, g.r_incidence))
    r_e = r[target]
    meet = {c.id: g.edge(c.id, target) for c in g.components if c.id != target}

    components = []
    r_out = []
    for c in g.components:
        if c.id == target:
            continue
        components.append(c.with_self_int(c.self_int + meet[c.id] ** 2))
        r_out.append(r[c.id] + r_e * meet[c.id])

    edges = {}
    for a, b, n in g.edges:
        if target not in (a, b):
            edges[(a, b)] = n
    ids = [c.id for c in components]
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            extra = meet[a] * meet[b]
            if extra:
                key = (a, b) if a <= b else (b, a)
                edges[key] = edges.get(key, 0) + extra

    out = CoverGraph(
        components=tuple(components),
        edges=tuple(sorted((a, b, n) for (a, b), n in edges.items() if n > 0)),
        r_incidence=tuple(r_out),
    )

    # R̄'·Z' = R̄·Z − (R̄·E)²
    before, after = _rz(g), _rz(out)
    if after != before - r_e * r_e or after > before:
        raise ComputationError(
            f"R.Z bookkeeping failed when contracting {target}: {before} -> {after}"
        )

    return out


def contraction_steps(g: CoverGraph) -> list[CoverGraph]:
    """(−1) 成分がなくなるまで縮約した各段階のグラフ（先頭は g 自身）"""
    steps = [g]
    while True:
        cur = steps[-1]
        minus_one = [c.id for c in cur.components if c.self_int == -1]
        if not minus_one:
            return steps
        steps.append(contract_once(cur, minus_one[0]))


def contract_to_minimal(g: CoverGraph) -> MinimalGraph:
    """(−1) 成分を順に縮約し、極小解消の Dynkin 図形にする。

    Raises:
        NotDynkin: 残った成分がすべて (−2) でない、または Dynkin 図形でない

    Returns:
        MinimalGraph: 極小グラフ
    """
    last = contraction_steps(g)[-1]
    bad = [c.id for c in last.components if c.self_int != -2]
    if bad:
        raise NotDynkin(f"components {bad} are not (-2)-curves after contraction")

    t = classify_dynkin(last.ids, last.edges)
    logger.debug(f"contracted {len(g.components) - len(last.components)} curves: {t}")
    return MinimalGraph(
        ids=last.ids,
        over=tuple(c.over for c in last.components),
        edges=last.edges,
        r_incidence=last.r_incidence,
        ade_type=t,
    )
