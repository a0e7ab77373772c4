from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from ..config.settings import OutputFormat

__all__ = ["Report", "jsonable", "emit"]


class Report(BaseModel):
    """サブコマンドの出力

    数値は整数のまま、有理数は "p/q" 形式の文字列で保持する。
    """

    model_config = ConfigDict(extra="forbid")

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: dict[str, Any] = Field(default_factory=dict)
    verdicts: dict[str, str] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)


def jsonable(obj: Any) -> Any:
    """Fraction・Enum・tuple などを JSON で表せる値に変換する。"""
    match obj:
        case Enum():
            return str(obj.value)
        case bool() | int() | str() | None:
            return obj
        case Fraction():
            return str(obj)
        case dict():
            return {str(k): jsonable(v) for k, v in obj.items()}
        case list() | tuple():
            return [jsonable(v) for v in obj]
        case _:
            raise TypeError(f"value of type {type(obj).__name__} is not reportable")


def _human_lines(prefix: str, value: Any, out: list[tuple[str, str]]) -> None:
    match value:
        case dict() if value:
            for k in sorted(value):
                _human_lines(f"{prefix}.{k}" if prefix else str(k), value[k], out)
        case list() if value and all(isinstance(v, dict) for v in value):
            for i, v in enumerate(value):
                _human_lines(f"{prefix}[{i}]", v, out)
        case list():
            out.append((prefix, ", ".join(str(v) for v in value)))
        case _:
            out.append((prefix, str(value)))


def _human(report: Report) -> str:
    lines: list[str] = [f"# {report.command}"]
    for section in ("inputs", "results", "verdicts"):
        rows: list[tuple[str, str]] = []
        _human_lines("", getattr(report, section), rows)
        if not rows:
            continue
        width = max(len(k) for k, _ in rows)
        lines.append(f"[{section}]")
        lines.extend(f"  {k.ljust(width)}  {v}" for k, v in rows)
    for w in report.warnings:
        lines.append(f"warning: {w}")

    return "\n".join(lines) + "\n"


def emit(report: Report, fmt: OutputFormat) -> str:
    """レポートを文字列化する。machine 形式は同じ入力に対してバイト単位で同一。"""
    match fmt:
        case OutputFormat.MACHINE:
            return (
                json.dumps(
                    report.model_dump(mode="json"),
                    sort_keys=True,
                    ensure_ascii=False,
                    indent=2,
                )
                + "\n"
            )
        case OutputFormat.HUMAN:
            return _human(report)
        case _:
            raise ValueError(f"unsupported output format: {fmt}")
