from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from ..core.ade import AdeType
from ..core.errors import ComputationError
from ..logger import logger
from ..resolution.germ import CurveGerm, standard_germ
from ..resolution.record import ResolutionRecord
from ..resolution.resolve import resolve
from .canonical import (
    canonical_cycle_solve,
    check_cycle_relation,
    defect,
    defect_closed_form,
)
from .double_cover import build_double_cover
from .graph import CanonicalCycle, CoverGraph, MinimalGraph
from .minimal import contract_to_minimal, contraction_steps
from .tables import expected_grouped_cycle

__all__ = ["PipelineResult", "run_pipeline", "run_germ_pipeline"]


@dataclass(frozen=True)
class PipelineResult:
    """解消 → 二重被覆 → 縮約 → 求解 の結果一式"""

    record: ResolutionRecord
    cover: CoverGraph
    steps: tuple[CoverGraph, ...]
    minimal: MinimalGraph
    cycle: CanonicalCycle
    delta: int
    expected_type: Optional[AdeType] = None

    @property
    def grouped(self) -> dict[str, int]:
        return self.cycle.grouped(self.minimal.over_map)

    @property
    def grouped_multiset(self) -> list[int]:
        return self.cycle.grouped_multiset(self.minimal.over_map)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "type": str(self.minimal.ade_type),
            "blowups": self.record.blowup_count,
            "minimal": self.minimal.to_dict(),
            "z": self.cycle.as_dict(),
            "z_grouped": self.grouped,
            "z_grouped_multiset": self.grouped_multiset,
            "delta": self.delta,
            "delta_closed_form": defect_closed_form(self.minimal.ade_type),
            "intermediate_graphs": len(self.steps),
        }
        if self.expected_type is not None:
            out["table_multiset"] = expected_grouped_cycle(self.expected_type)
        return out


def run_germ_pipeline(
    germ: CurveGerm, expected: Optional[AdeType] = None
) -> PipelineResult:
    """芽から極小解消上の標準サイクルと欠損までを計算する。

    途中の全ての縮約段階で、公式による Z と連立方程式の解が一致すること、
    (Z + R̄)·L_i = 0 が成り立つこと、欠損が閉じた式と一致することを確認する。

    Raises:
        ComputationError: いずれかの整合性チェックに失敗
    """
    record = resolve(germ, extra_blowups=True)
    cover = build_double_cover(record)
    steps = contraction_steps(cover)
    for g in steps:
        # canonical_cycle_solve は CoverGraph に対して公式との一致も確認する
        z = canonical_cycle_solve(g)
        if any(check_cycle_relation(z, g)):
            raise ComputationError("(Z + R).L != 0 on an intermediate graph")

    minimal = contract_to_minimal(cover)
    cycle = canonical_cycle_solve(minimal)
    if any(v <= 0 for _, v in cycle.coefficients):
        raise ComputationError(f"non-positive coefficient in {cycle.as_dict()}")
    if any(check_cycle_relation(cycle, minimal)):
        raise ComputationError("(Z + R).L != 0 on the minimal graph")

    delta = defect(
        cycle, minimal.r_vector(), matrix=minimal.matrix(), ids=minimal.ids
    )
    if expected is not None and minimal.ade_type != expected:
        raise ComputationError(
            f"pipeline detected {minimal.ade_type} for a germ of type {expected}"
        )
    closed = defect_closed_form(minimal.ade_type)
    if delta != closed:
        raise ComputationError(
            f"defect {delta} of {minimal.ade_type} disagrees with closed form {closed}"
        )

    logger.info(f"{germ.label or germ}: type {minimal.ade_type}, delta={delta}")
    return PipelineResult(
        record=record,
        cover=cover,
        steps=tuple(steps),
        minimal=minimal,
        cycle=cycle,
        delta=delta,
        expected_type=expected,
    )


def run_pipeline(t: AdeType) -> PipelineResult:
    return run_germ_pipeline(standard_germ(t), expected=t)
