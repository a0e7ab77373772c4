from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from ..core.ade import AdeType
from ..exact.linalg import IntMatrix

__all__ = [
    "CoverComponent",
    "CoverGraph",
    "MinimalGraph",
    "CanonicalCycle",
]


@dataclass(frozen=True)
class CoverComponent:
    """二重被覆上の例外成分

    Attributes:
        id (str): 成分 id（L1, L1', L1'' など）
        over (str): 下の例外曲線の id
        split (bool): α 偶数かつ分岐点なしで 2 成分に分かれたもの
        self_int (int): 自己交点数
        is_ramification_branch (bool): α 奇数（分岐因子の成分）
        alpha (int): 下の曲線の α
        sheet (Optional[int]): 分裂ペアのどちらか（0 / 1）
        genus (int): 成分の種数（分岐点 2g+2 個の二重被覆）
    """

    id: str
    over: str
    split: bool
    self_int: int
    is_ramification_branch: bool
    alpha: int
    sheet: Optional[int] = None
    genus: int = 0

    def with_self_int(self, value: int) -> CoverComponent:
        return CoverComponent(
            id=self.id,
            over=self.over,
            split=self.split,
            self_int=value,
            is_ramification_branch=self.is_ramification_branch,
            alpha=self.alpha,
            sheet=self.sheet,
            genus=self.genus,
        )


def _edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CoverGraph:
    """二重被覆の例外集合の交点グラフ

    edges は (a, b, 交点数) の並び（a < b、交点数 > 0 のみ）。
    r_incidence は components と同じ並びで R̄·L_i を保持する。
    """

    components: tuple[CoverComponent, ...]
    edges: tuple[tuple[str, str, int], ...]
    r_incidence: tuple[int, ...]

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.components)

    def index(self, cid: str) -> int:
        return self.ids.index(cid)

    def component(self, cid: str) -> CoverComponent:
        return self.components[self.index(cid)]

    def edge(self, a: str, b: str) -> int:
        key = _edge_key(a, b)
        for u, v, n in self.edges:
            if (u, v) == key:
                return n

        return 0

    def matrix(self) -> IntMatrix:
        ids = self.ids
        pos = {cid: i for i, cid in enumerate(ids)}
        rows = [[0] * len(ids) for _ in ids]
        for i, c in enumerate(self.components):
            rows[i][i] = c.self_int
        for a, b, n in self.edges:
            rows[pos[a]][pos[b]] = n
            rows[pos[b]][pos[a]] = n

        return IntMatrix.from_rows(rows)

    def r_vector(self) -> list[int]:
        return list(self.r_incidence)

    @property
    def over_map(self) -> dict[str, str]:
        return {c.id: c.over for c in self.components}

    def to_dict(self) -> dict[str, Any]:
        return {
            "components": [
                {
                    "id": c.id,
                    "over": c.over,
                    "self_int": c.self_int,
                    "split": c.split,
                    "genus": c.genus,
                    "branch": c.is_ramification_branch,
                    "r_incidence": r,
                }
                for c, r in zip(self.components, self.r_incidence)
            ],
            "edges": [[a, b, n] for a, b, n in self.edges],
        }


@dataclass(frozen=True)
class MinimalGraph:
    """極小解消の例外集合（すべて (−2) 曲線の Dynkin 図形）"""

    ids: tuple[str, ...]
    over: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]
    r_incidence: tuple[int, ...]
    ade_type: AdeType

    def matrix(self) -> IntMatrix:
        pos = {cid: i for i, cid in enumerate(self.ids)}
        rows = [[0] * len(self.ids) for _ in self.ids]
        for i in range(len(self.ids)):
            rows[i][i] = -2
        for a, b, n in self.edges:
            rows[pos[a]][pos[b]] = n
            rows[pos[b]][pos[a]] = n

        return IntMatrix.from_rows(rows)

    def r_vector(self) -> list[int]:
        return list(self.r_incidence)

    @property
    def over_map(self) -> dict[str, str]:
        return dict(zip(self.ids, self.over))

    def neighbours(self, cid: str) -> list[str]:
        out = []
        for a, b, _ in self.edges:
            if a == cid:
                out.append(b)
            elif b == cid:
                out.append(a)

        return sorted(out)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": str(self.ade_type),
            "components": [
                {"id": cid, "over": ov, "r_incidence": r}
                for cid, ov, r in zip(self.ids, self.over, self.r_incidence)
            ],
            "edges": [[a, b, n] for a, b, n in self.edges],
        }


@dataclass(frozen=True)
class CanonicalCycle:
    """標準サイクル Z（成分 id → 係数）"""

    coefficients: tuple[tuple[str, int], ...]

    @classmethod
    def from_mapping(cls, values: Mapping[str, int]) -> CanonicalCycle:
        return cls(coefficients=tuple(values.items()))

    def as_dict(self) -> dict[str, int]:
        return dict(self.coefficients)

    def vector(self, ids: tuple[str, ...]) -> list[int]:
        d = self.as_dict()
        return [d[cid] for cid in ids]

    def restrict(self, ids: tuple[str, ...]) -> CanonicalCycle:
        d = self.as_dict()
        return CanonicalCycle(coefficients=tuple((cid, d[cid]) for cid in ids))

    def grouped(self, over: Mapping[str, str]) -> dict[str, int]:
        """分裂ペア L' + L'' を下の曲線ごとに 1 つの係数にまとめる。

        ペアの両成分は同じ係数をもつので、その共通値を返す。
        """
        groups: dict[str, set[int]] = defaultdict(set)
        for cid, value in self.coefficients:
            groups[over[cid]].add(value)

        out = {}
        for key, values in groups.items():
            if len(values) != 1:
                raise ValueError(f"split pair over {key} has unequal coefficients")
            out[key] = values.pop()

        return out

    def grouped_multiset(self, over: Mapping[str, str]) -> list[int]:
        return sorted(self.grouped(over).values())

    def multiset(self) -> list[int]:
        return sorted(v for _, v in self.coefficients)
