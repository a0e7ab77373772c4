from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Optional

from ..core.ade import AdeType, Family
from ..core.errors import InvalidAdeType, InvalidProfile, NonIntegralChi
from ..cover.canonical import defect_closed_form

__all__ = ["SingularityProfile", "CoveringProfile"]


def _normalise(
    counts: Optional[Mapping[int, int]], family: Family
) -> tuple[tuple[int, int], ...]:
    out = []
    for k, v in sorted((counts or {}).items()):
        try:
            AdeType(family=family, index=int(k))
        except InvalidAdeType as e:
            raise InvalidProfile(f"invalid singularity {family}{k}: {e}") from e
        if int(v) < 0:
            raise InvalidProfile(f"negative count for {family}{k}: {v}")
        if int(v) > 0:
            out.append((int(k), int(v)))

    return tuple(out)


@dataclass(frozen=True)
class SingularityProfile:
    """特異点の個数（Σ a_k A_k + Σ d_k D_k + Σ e_k E_k）

    個数 0 の項は保持しない。
    """

    a: tuple[tuple[int, int], ...] = ()
    d: tuple[tuple[int, int], ...] = ()
    e: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_counts(
        cls,
        a: Optional[Mapping[int, int]] = None,
        d: Optional[Mapping[int, int]] = None,
        e: Optional[Mapping[int, int]] = None,
    ) -> SingularityProfile:
        return cls(
            a=_normalise(a, Family.A),
            d=_normalise(d, Family.D),
            e=_normalise(e, Family.E),
        )

    def items(self) -> Iterator[tuple[AdeType, int]]:
        groups = ((Family.A, self.a), (Family.D, self.d), (Family.E, self.e))
        for family, counts in groups:
            for k, v in counts:
                yield AdeType(family=family, index=k), v

    def count(self, t: AdeType) -> int:
        for u, v in self.items():
            if u == t:
                return v

        return 0

    @property
    def n(self) -> int:
        """結節点 a₁"""
        return dict(self.a).get(1, 0)

    @property
    def c(self) -> int:
        """尖点 a₂"""
        return dict(self.a).get(2, 0)

    @property
    def delta(self) -> int:
        """各特異点の欠損の和"""
        return sum(v * defect_closed_form(t) for t, v in self.items())

    def plus(self, nodes: int = 0, cusps: int = 0) -> SingularityProfile:
        a = dict(self.a)
        a[1] = a.get(1, 0) + nodes
        a[2] = a.get(2, 0) + cusps
        return SingularityProfile.from_counts(a=a, d=dict(self.d), e=dict(self.e))

    def to_dict(self) -> dict[str, Any]:
        return {str(t): v for t, v in self.items()}


@dataclass(frozen=True)
class CoveringProfile:
    """一般被覆 f: X → ℙ² の数値データ

    Attributes:
        N (int): 被覆次数
        d (int): 分岐曲線 B の次数（偶数）
        n_s, n_p (int): s 結節点 / p 結節点
        c_s, c_p (int): s 尖点 / p 尖点
        higher (SingularityProfile): 高次の特異点（すべて s 型）
    """

    N: int
    d: int
    n_s: int = 0
    n_p: int = 0
    c_s: int = 0
    c_p: int = 0
    higher: SingularityProfile = field(default_factory=SingularityProfile)

    def __post_init__(self) -> None:
        for name in ("n_s", "n_p", "c_s", "c_p"):
            if getattr(self, name) < 0:
                raise InvalidProfile(f"{name} must be nonnegative")
        if self.N < 1:
            raise InvalidProfile(f"covering degree must be positive: {self.N}")
        if self.d < 2 or self.d % 2 != 0:
            raise InvalidProfile(
                f"branch curve degree must be even and >= 2: {self.d}"
            )
        if self.higher.n or self.higher.c:
            raise InvalidProfile(
                "nodes and cusps go into n_s/n_p/c_s/c_p, not higher"
            )
        if self.n_p % 4 != 0:
            raise NonIntegralChi(f"n_p = {self.n_p} is not divisible by 4")
        if self.c_p % 3 != 0:
            raise NonIntegralChi(f"c_p = {self.c_p} is not divisible by 3")

    @property
    def d_bar(self) -> int:
        return self.d // 2

    @property
    def n(self) -> int:
        return self.n_s + self.n_p

    @property
    def c(self) -> int:
        return self.c_s + self.c_p

    @property
    def delta0(self) -> int:
        """結節点・尖点以外の特異点の欠損"""
        return self.higher.delta

    @property
    def delta(self) -> int:
        """δ = n + c + δ₀"""
        return self.n + self.c + self.delta0

    @property
    def branch_singularities(self) -> SingularityProfile:
        """Sing B"""
        return self.higher.plus(nodes=self.n, cusps=self.c)

    @property
    def surface_singularities(self) -> SingularityProfile:
        """Sing X（s 型の結節点・尖点と高次の特異点）"""
        return self.higher.plus(nodes=self.n_s, cusps=self.c_s)

    def to_dict(self) -> dict[str, Any]:
        return {
            "N": self.N,
            "d": self.d,
            "n_s": self.n_s,
            "n_p": self.n_p,
            "c_s": self.c_s,
            "c_p": self.c_p,
            "higher": self.higher.to_dict(),
        }
