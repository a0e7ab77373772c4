from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Any, Optional, Sequence, TypeVar

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..chisini.mcanonical import MCanonicalInput
from ..chisini.pair import PairClassification
from ..core.ade import AdeType, Family
from ..core.errors import InputError
from ..invariants.profile import CoveringProfile, SingularityProfile
from ..resolution.germ import CurveGerm, standard_germ

__all__ = [
    "GermDocument",
    "ProfileDocument",
    "PairDocument",
    "MCanonicalDocument",
    "MonodromyDocument",
    "ScanDocument",
    "load_document",
    "parse_overrides",
]

_M = TypeVar("_M", bound=BaseModel)


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


def _higher_profile(higher: dict[str, int]) -> SingularityProfile:
    """{"A3": 1, "E6": 2} 形式を SingularityProfile に変換する。"""
    counts: dict[Family, dict[int, int]] = {f: {} for f in Family}
    for key, value in higher.items():
        t = AdeType.parse(key)
        counts[t.family][t.index] = counts[t.family].get(t.index, 0) + value

    return SingularityProfile.from_counts(
        a=counts[Family.A], d=counts[Family.D], e=counts[Family.E]
    )


class GermDocument(_Document):
    """芽の指定。type（"A2" など）か polynomial のどちらか一方。"""

    type: Optional[str] = None
    polynomial: Optional[str] = None
    extra_blowups: Optional[bool] = None

    @model_validator(mode="after")
    def _one_of(self) -> GermDocument:
        if (self.type is None) == (self.polynomial is None):
            raise ValueError("give exactly one of type or polynomial")
        return self

    def ade_type(self) -> Optional[AdeType]:
        return AdeType.parse(self.type) if self.type is not None else None

    def germ(self) -> CurveGerm:
        t = self.ade_type()
        if t is not None:
            return standard_germ(t)

        assert self.polynomial is not None
        return CurveGerm.from_text(self.polynomial)


class ProfileDocument(_Document):
    N: int
    d: int
    n_s: int = 0
    n_p: int = 0
    c_s: int = 0
    c_p: int = 0
    higher: dict[str, int] = Field(default_factory=dict)

    def to_profile(self) -> CoveringProfile:
        return CoveringProfile(
            N=self.N,
            d=self.d,
            n_s=self.n_s,
            n_p=self.n_p,
            c_s=self.c_s,
            c_p=self.c_p,
            higher=_higher_profile(self.higher),
        )


class PairDocument(_Document):
    N2: int
    d: int
    N1: Optional[int] = None
    n_ss: int = 0
    n_sp: int = 0
    n_ps: int = 0
    n_pp: int = 0
    c_ss: int = 0
    c_sp: int = 0
    c_ps: int = 0
    c_pp: int = 0
    symmetric: bool = False
    higher: dict[str, int] = Field(default_factory=dict)

    def to_classification(self) -> PairClassification:
        if self.d % 2 != 0:
            raise InputError(f"branch curve degree must be even: {self.d}")

        return PairClassification(
            N2=self.N2,
            N1=self.N1,
            d_bar=self.d // 2,
            n_ss=self.n_ss,
            n_sp=self.n_sp,
            n_ps=self.n_ps,
            n_pp=self.n_pp,
            c_ss=self.c_ss,
            c_sp=self.c_sp,
            c_ps=self.c_ps,
            c_pp=self.c_pp,
            higher=_higher_profile(self.higher),
            symmetric=self.symmetric,
        )


class MCanonicalDocument(_Document):
    m: int
    k: int
    e: Optional[int] = None

    def validated(self) -> MCanonicalInput:
        return MCanonicalInput(m=self.m, k=self.k, e=self.e)


class MonodromyDocument(_Document):
    N: int
    cap: Optional[int] = None
    shuffle_seed: Optional[int] = None


class ScanDocument(_Document):
    m_max: int = 4
    k_max: int = 12
    e: Optional[int] = None


def _scalar(raw: str) -> Any:
    """--set の値を TOML のスカラーとして解釈する（失敗したら文字列のまま）。"""
    try:
        return tomllib.loads(f"v = {raw}")["v"]
    except tomllib.TOMLDecodeError:
        return raw


def parse_overrides(items: Sequence[str]) -> dict[str, Any]:
    """["key=value", "higher.A3=1"] を入れ子の辞書に変換する。

    Raises:
        InputError: "=" を含まない
    """
    out: dict[str, Any] = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key.strip():
            raise InputError(f"override must look like key=value: {item!r}")

        *parents, leaf = [k.strip() for k in key.split(".")]
        node = out
        for p in parents:
            node = node.setdefault(p, {})
        node[leaf] = _scalar(raw.strip())

    return out


def _merge(base: dict[str, Any], top: dict[str, Any]) -> dict[str, Any]:
    out = dict(base)
    for k, v in top.items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _merge(out[k], v)
        else:
            out[k] = v
    return out


def load_document(
    model: type[_M],
    path: Optional[str] = None,
    overrides: Sequence[str] = (),
    flags: Optional[dict[str, Any]] = None,
) -> _M:
    """入力文書を読み込み検証する。

    優先順位は コマンドライン引数 > --set > ファイル の順。

    Args:
        model (type[_M]): 検証に使う pydantic モデル
        path (Optional[str]): TOML ファイルのパス
        overrides (Sequence[str]): --set key=value の並び
        flags (Optional[dict[str, Any]]): 引数から直接与えられた値（None は無視）

    Raises:
        OSError: ファイルを読めない
        tomllib.TOMLDecodeError: TOML として不正
        pydantic.ValidationError: スキーマ違反

    Returns:
        _M: 検証済みの文書
    """
    data: dict[str, Any] = {}
    if path is not None:
        with Path(path).open("rb") as f:
            data = tomllib.load(f)

    data = _merge(data, parse_overrides(overrides))
    data = _merge(data, {k: v for k, v in (flags or {}).items() if v is not None})
    return model.model_validate(data)
