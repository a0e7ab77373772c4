from __future__ import annotations

from typing import Optional, Sequence

from ..core.ade import AdeType, Family
from ..core.errors import (
    ComputationError,
    NonIntegralDefect,
    NonIntegralSolution,
    SingularMatrix,
)
from ..exact.linalg import IntMatrix, is_negative_definite, solve_linear_exact
from .graph import CanonicalCycle, CoverGraph, MinimalGraph

__all__ = [
    "canonical_cycle_formula",
    "canonical_cycle_solve",
    "check_cycle_relation",
    "defect",
    "defect_closed_form",
]


def canonical_cycle_formula(g: CoverGraph) -> CanonicalCycle:
    """α の偶奇から標準サイクルを与える。

    α 奇数の分岐成分には α、α 偶数の成分には α/2（分裂ペアの両方に同じ値）。
    """
    values = {}
    for c in g.components:
        values[c.id] = c.alpha if c.alpha % 2 == 1 else c.alpha // 2

    return CanonicalCycle.from_mapping(values)


def canonical_cycle_solve(graph: CoverGraph | MinimalGraph) -> CanonicalCycle:
    """M·z = −(R̄·L_i) を厳密に解いて標準サイクルを求める。

    Args:
        graph (CoverGraph | MinimalGraph): 負定値な交点グラフ

    Raises:
        SingularMatrix: 交点行列が負定値でない
        NonIntegralSolution: 解が整数でない

    Returns:
        CanonicalCycle: 標準サイクル
    """
    m = graph.matrix()
    if not is_negative_definite(m):
        raise SingularMatrix("intersection matrix is not negative definite")

    rhs = [-r for r in graph.r_vector()]
    sol = solve_linear_exact(m, rhs)
    values = {}
    for cid, v in zip(graph.ids, sol):
        if v.denominator != 1:
            raise NonIntegralSolution(f"non-integral coefficient {v} on {cid}")
        values[cid] = int(v)

    if isinstance(graph, CoverGraph):
        expected = canonical_cycle_formula(graph)
        if expected.as_dict() != values:
            raise ComputationError(
                f"solver cycle {values} disagrees with formula {expected.as_dict()}"
            )

    return CanonicalCycle.from_mapping(values)


def check_cycle_relation(
    z: CanonicalCycle, graph: CoverGraph | MinimalGraph
) -> list[int]:
    """(Z + R̄)·L_i をすべて返す（正しい標準サイクルなら全て 0）。"""
    m = graph.matrix()
    mz = m.mul_vector(z.vector(graph.ids))
    return [int(a + r) for a, r in zip(mz, graph.r_vector())]


def defect(
    z: CanonicalCycle,
    r_incidence: Sequence[int],
    matrix: Optional[IntMatrix] = None,
    ids: Optional[tuple[str, ...]] = None,
) -> int:
    """欠損 δ = ½ R̄·Z を返す。

    matrix が与えられた場合は −Z² = 2δ も確認する。

    Raises:
        NonIntegralDefect: R̄·Z が奇数、または Z² との不一致
    """
    vec = z.vector(ids) if ids is not None else [v for _, v in z.coefficients]
    rz = sum(a * b for a, b in zip(vec, r_incidence))
    if rz % 2 != 0:
        raise NonIntegralDefect(f"R.Z = {rz} is odd")

    value = rz // 2
    if matrix is not None:
        zz = matrix.bilinear(vec, vec)
        if -zz != 2 * value:
            raise NonIntegralDefect(f"-Z^2 = {-zz} differs from 2*delta = {2 * value}")

    return value


def defect_closed_form(t: AdeType) -> int:
    """A_n: ⌊(n+1)/2⌋, D_n: ⌊n/2⌋+1, E_n: ⌊(n+1)/2⌋"""
    n = t.index
    match t.family:
        case Family.D:
            return n // 2 + 1
        case _:
            return (n + 1) // 2
