from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup, SymmetricGroup

from ..core.errors import InputError

__all__ = [
    "Permutation",
    "involutions",
    "involution_class_representatives",
    "is_transitive",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """{1, ..., N} の置換（images[i-1] が i の像）

    演算は sympy.combinatorics に委ねる。sympy は 0 始まりで左から右へ
    合成するが、ここでの合成は右から左: (p * q)(i) = p(q(i))
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InputError(
                f"not a permutation of 1..{len(self.images)}: {self.images}"
            )

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        sym = SymPermutation([[i - 1 for i in c] for c in cycles if c], size=n)
        return cls.from_sympy(sym)

    @classmethod
    def from_sympy(cls, sym: SymPermutation) -> Permutation:
        return cls(tuple(i + 1 for i in sym.array_form))

    @cached_property
    def sym(self) -> SymPermutation:
        return SymPermutation([i - 1 for i in self.images])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise InputError(f"degree mismatch: {self.degree} != {other.degree}")

        return Permutation.from_sympy(other.sym * self.sym)

    def inverse(self) -> Permutation:
        return Permutation.from_sympy(~self.sym)

    def relabel(self, mapping: Sequence[int]) -> Permutation:
        """ラベル i を mapping[i-1] に付け替えた置換（π σ π⁻¹）"""
        pi = SymPermutation([m - 1 for m in mapping])
        return Permutation.from_sympy(self.sym ^ pi)

    def is_identity(self) -> bool:
        return self.sym.is_Identity

    def is_involution(self) -> bool:
        return (self.sym**2).is_Identity

    def cycles(self) -> list[tuple[int, ...]]:
        """不動点も含めた巡回分解（各巡回は最小元から）"""
        return [tuple(i + 1 for i in c) for c in self.sym.full_cyclic_form]

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"

        return "".join("(" + " ".join(map(str, c)) + ")" for c in moved)


def involution_class_representatives(n: int) -> list[Permutation]:
    """S_n の恒等でない対合の共役類ごとの代表 (1 2)(3 4)...(2j−1 2j)"""
    return [
        Permutation.from_cycles(n, [(2 * i + 1, 2 * i + 2) for i in range(j)])
        for j in range(1, n // 2 + 1)
    ]


@lru_cache(maxsize=None)
def _involutions(n: int) -> tuple[Permutation, ...]:
    group = SymmetricGroup(n)
    out: set[Permutation] = set()
    for rep in involution_class_representatives(n):
        out.update(Permutation.from_sympy(p) for p in group.conjugacy_class(rep.sym))
    return tuple(sorted(out))


def involutions(n: int) -> list[Permutation]:
    """S_n の恒等置換以外の対合（辞書式順）"""
    if n < 1:
        raise InputError(f"degree must be positive: {n}")

    return list(_involutions(n))


def is_transitive(perms: Sequence[Permutation]) -> bool:
    """生成する置換群が {1, ..., N} に推移的に作用するか"""
    return PermutationGroup([p.sym for p in perms]).is_transitive()
