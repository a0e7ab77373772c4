from __future__ import annotations

import re
from dataclasses import dataclass
from enum import StrEnum
from typing import Iterator

from .errors import InvalidAdeType

__all__ = ["Family", "AdeType", "supported_types"]


class Family(StrEnum):
    A = "A"
    D = "D"
    E = "E"


_PATTERN = re.compile(r"^\s*([ADEade])\s*[_\-]?\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class AdeType:
    """A-D-E 型（族と添字）"""

    family: Family
    index: int

    def __post_init__(self) -> None:
        match self.family:
            case Family.A:
                ok = self.index >= 1
            case Family.D:
                ok = self.index >= 4
            case Family.E:
                ok = self.index in (6, 7, 8)
            case _:
                ok = False

        if not ok:
            raise InvalidAdeType(f"invalid ade type: {self.family}{self.index}")

    @classmethod
    def parse(cls, text: str) -> AdeType:
        """"A 2" / "A2" / "e_8" 形式の文字列を型に変換する。

        Args:
            text (str): 型を表す文字列

        Raises:
            InvalidAdeType: 書式または添字が不正

        Returns:
            AdeType: 型
        """
        m = _PATTERN.match(text)
        if m is None:
            raise InvalidAdeType(f"cannot parse ade type: {text!r}")

        return cls(family=Family(m.group(1).upper()), index=int(m.group(2)))

    @classmethod
    def of(cls, family: str, index: int) -> AdeType:
        try:
            fam = Family(family.strip().upper())
        except ValueError as e:
            raise InvalidAdeType(f"unknown family: {family!r}") from e

        return cls(family=fam, index=index)

    @property
    def rank(self) -> int:
        return self.index

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


def supported_types(max_a: int = 10, max_d: int = 10) -> Iterator[AdeType]:
    """解消エンジンが保証対象とする型を順に返す。"""
    for n in range(1, max_a + 1):
        yield AdeType(family=Family.A, index=n)
    for n in range(4, max_d + 1):
        yield AdeType(family=Family.D, index=n)
    for n in (6, 7, 8):
        yield AdeType(family=Family.E, index=n)
