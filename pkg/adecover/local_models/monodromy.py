from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from enum import StrEnum
from typing import Any, Optional

from ..config.monodromy_config import MonodromyConfig
from ..core.errors import DegreeTooLarge, InputError
from ..logger import logger
from .permutation import (
    Permutation,
    involution_class_representatives,
    involutions,
    is_transitive,
)

__all__ = [
    "CoveringTag",
    "BraidPair",
    "LocalCoveringClass",
    "classify_local_covering",
    "enumerate_cusp_monodromies",
]


class CoveringTag(StrEnum):
    F2 = "F2"
    F3 = "F3"
    F6 = "F6"
    UNEXPECTED = "Unexpected"


@dataclass(frozen=True, order=True)
class BraidPair:
    """尖点の補集合の基本群（3 本組紐群）の 2 つの生成元の像

    σ_a σ_b σ_a = σ_b σ_a σ_b を満たす。
    """

    sigma_a: Permutation
    sigma_b: Permutation

    def __post_init__(self) -> None:
        if self.sigma_a.degree != self.sigma_b.degree:
            raise InputError("braid pair permutations differ in degree")

    @property
    def degree(self) -> int:
        return self.sigma_a.degree

    def satisfies_braid_relation(self) -> bool:
        a, b = self.sigma_a, self.sigma_b
        return a * b * a == b * a * b

    def is_transitive(self) -> bool:
        return is_transitive([self.sigma_a, self.sigma_b])

    def relabel(self, mapping: list[int]) -> BraidPair:
        return BraidPair(self.sigma_a.relabel(mapping), self.sigma_b.relabel(mapping))

    def canonical(self) -> BraidPair:
        """同時共役による同値類の代表元

        推移的な場合、始点を決めると (σ_a, σ_b) の順に辿る BFS 順序で
        ラベルが一意に決まるので、全ての始点のうち最小のものを採る。
        """
        best: Optional[BraidPair] = None
        for start in range(1, self.degree + 1):
            order = [start]
            seen = {start}
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for g in (self.sigma_a, self.sigma_b):
                    j = g(i)
                    if j not in seen:
                        seen.add(j)
                        order.append(j)
                        queue.append(j)
            mapping = [0] * self.degree
            for label, point in enumerate(order, start=1):
                mapping[point - 1] = label
            candidate = self.relabel(mapping)
            if best is None or candidate < best:
                best = candidate

        assert best is not None
        return best

    def to_dict(self) -> dict[str, str]:
        return {"sigma_a": str(self.sigma_a), "sigma_b": str(self.sigma_b)}


@dataclass(frozen=True)
class LocalCoveringClass:
    tag: CoveringTag
    degree: int
    meridian_cycle_type: tuple[int, ...]
    representative: BraidPair

    def to_dict(self) -> dict[str, Any]:
        return {
            "tag": str(self.tag),
            "degree": self.degree,
            "meridian_cycle_type": list(self.meridian_cycle_type),
            **self.representative.to_dict(),
        }


def classify_local_covering(pair: BraidPair) -> LocalCoveringClass:
    """単一の組紐対を F2 / F3 / F6 のいずれかに分類する。"""
    ctype = pair.sigma_a.cycle_type()
    match (pair.degree, ctype):
        case (2, (2,)):
            tag = CoveringTag.F2
        case (3, (2, 1)):
            tag = CoveringTag.F3
        case (6, (2, 2, 2)):
            tag = CoveringTag.F6
        case _:
            tag = CoveringTag.UNEXPECTED

    return LocalCoveringClass(
        tag=tag,
        degree=pair.degree,
        meridian_cycle_type=ctype,
        representative=pair.canonical(),
    )


def enumerate_cusp_monodromies(
    N: int, shuffle_seed: Optional[int] = None, cap: Optional[int] = None
) -> list[LocalCoveringClass]:
    """次数 N の尖点の局所被覆のモノドロミーを全列挙する。

    経線の像は恒等でない対合で、組紐関係と推移性を満たすものを、
    同時共役で同一視して返す。σ_a は共役類の代表に固定してよいので、
    σ_a を代表 (1 2)...(2j−1 2j) に限って σ_b を全対合にわたって調べる。

    Args:
        N (int): 被覆次数
        shuffle_seed (Optional[int]): 指定時は各対をランダムに付け替えてから分類する
        cap (Optional[int]): 次数の上限。省略時は MonodromyConfig.cap

    Raises:
        DegreeTooLarge: N が上限を超える
    """
    cap = MonodromyConfig.cap if cap is None else cap
    if N > cap:
        raise DegreeTooLarge(f"degree {N} exceeds the enumeration cap {cap}")
    if N < 2:
        raise InputError(f"covering degree must be >= 2: {N}")

    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    candidates = involutions(N)
    classes: dict[BraidPair, LocalCoveringClass] = {}
    checked = 0
    for a in involution_class_representatives(N):
        for b in candidates:
            checked += 1
            pair = BraidPair(a, b)
            if not pair.satisfies_braid_relation() or not pair.is_transitive():
                continue
            if rng is not None:
                mapping = list(range(1, N + 1))
                rng.shuffle(mapping)
                pair = pair.relabel(mapping)
            key = pair.canonical()
            if key not in classes:
                classes[key] = classify_local_covering(key)

    result = [classes[k] for k in sorted(classes)]
    logger.info(f"N={N}: checked {checked} involution pairs, {len(result)} classes")
    return result
