from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any

import pytest

from adecover.cli.main import main
from adecover.cli.report import Report, emit, jsonable
from adecover.cli.schema import MCanonicalDocument, load_document, parse_overrides
from adecover.config.settings import OutputFormat
from adecover.logger import logger, set_level

GOLDEN_DIR = Path(__file__).parent / "golden"


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(["--format", "machine", *argv])
    return code, capsys.readouterr().out


def assert_fragment(expected: Any, actual: Any, path: str = "$") -> None:
    """expected が actual の部分構造であることを確認する（リストは長さも一致）。"""
    if isinstance(expected, dict):
        assert isinstance(actual, dict), path
        for key, value in expected.items():
            assert key in actual, f"{path}.{key} missing"
            assert_fragment(value, actual[key], f"{path}.{key}")
    elif isinstance(expected, list):
        assert isinstance(actual, list), path
        assert len(expected) == len(actual), path
        for i, (e, a) in enumerate(zip(expected, actual)):
            assert_fragment(e, a, f"{path}[{i}]")
    else:
        assert expected == actual, path


@pytest.mark.parametrize(
    "golden", sorted(GOLDEN_DIR.glob("*.json")), ids=lambda p: p.stem
)
def test_golden(capsys, golden):
    case = json.loads(golden.read_text(encoding="utf-8"))
    code, out = run(capsys, *case["argv"])
    assert code == case["exit"]
    assert_fragment(case["expected"], json.loads(out))


def test_machine_output_is_byte_stable(capsys):
    first = run(capsys, "cycle", "E7")
    second = run(capsys, "cycle", "E7")
    assert first == second
    assert first[1].endswith("\n")


def test_machine_output_reparses(capsys):
    _, out = run(capsys, "mcanonical", "2", "3")
    report = Report.model_validate_json(out)
    assert emit(report, OutputFormat.MACHINE) == out


def test_human_output(capsys):
    code = main(["--format", "human", "mcanonical", "3", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("# mcanonical\n")
    assert "criterion.margin" in out
    assert "16/3" in out


def test_format_after_subcommand(capsys):
    code = main(["mcanonical", "3", "1", "--format", "machine"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["command"] == "mcanonical"


def test_warnings_are_reported(capsys):
    code, out = run(capsys, "mcanonical", "1", "1")
    assert code == 1
    warnings = json.loads(out)["warnings"]
    assert any("birational" in w for w in warnings)


@pytest.mark.parametrize(
    "argv",
    [
        ["mcanonical", "0", "1"],
        ["mcanonical", "1", "4", "1"],
        ["cycle", "F4"],
        ["cycle", "--polynomial", "y**2"],
        ["invariants", "--set", "N=3", "--set", "d=6", "--set", "n_p=2"],
        ["chisini", "--set", "N2=3", "--set", "d=5"],
        ["monodromy", "9"],
        ["monodromy", "--set", "N=3", "--set", "colour=1"],
    ],
)
def test_invalid_input(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(out)["verdicts"]


def test_missing_file(capsys, tmp_path):
    code, _ = run(capsys, "mcanonical", "--file", str(tmp_path / "absent.toml"))
    assert code == 2


def test_malformed_toml(capsys, tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text("m = = 3\n", encoding="utf-8")
    code, _ = run(capsys, "mcanonical", "--file", str(path))
    assert code == 2


def test_document_precedence(capsys, tmp_path):
    path = tmp_path / "query.toml"
    path.write_text("m = 2\nk = 2\n", encoding="utf-8")

    code, _ = run(capsys, "mcanonical", "--file", str(path))
    assert code == 1

    code, out = run(capsys, "mcanonical", "--file", str(path), "--set", "k=3")
    assert code == 0
    assert json.loads(out)["inputs"] == {"m": 2, "k": 3}

    code, out = run(
        capsys, "mcanonical", "1", "10", "--file", str(path), "--set", "k=3"
    )
    assert code == 0
    assert json.loads(out)["inputs"] == {"m": 1, "k": 10}


def test_profile_from_file(capsys, tmp_path):
    path = tmp_path / "profile.toml"
    path.write_text(
        'N = 2\nd = 6\nn_s = 1\n\n[higher]\n"A3" = 1\n', encoding="utf-8"
    )
    code, out = run(capsys, "invariants", "--file", str(path))
    assert code == 0
    results = json.loads(out)["results"]
    assert results["delta"] == 3
    assert results["delta_X"] == 3
    assert results["profile"]["higher"] == {"A3": 1}


def test_parse_overrides():
    assert parse_overrides(["m=3", "higher.A3=2", "name=abc"]) == {
        "m": 3,
        "higher": {"A3": 2},
        "name": "abc",
    }


def test_load_document_without_file():
    doc = load_document(MCanonicalDocument, None, ["k=5"], {"m": 2, "e": None})
    assert (doc.m, doc.k, doc.e) == (2, 5, None)


def test_jsonable():
    assert jsonable({"a": Fraction(4, 2), "b": (1, Fraction(1, 3))}) == {
        "a": "2",
        "b": [1, "1/3"],
    }
    with pytest.raises(TypeError):
        jsonable(object())


def test_log_level_flag_is_scoped(capsys):
    before = logger.level
    code = main(["--log-level", "debug", "--format", "machine", "monodromy", "3"])
    capsys.readouterr()
    assert code == 0
    assert logger.level == before


def test_set_level():
    before = logger.level
    try:
        set_level("info")
        assert logger.level == logging.INFO
        with pytest.raises(ValueError):
            set_level("chatty")
    finally:
        logger.setLevel(before)


@pytest.mark.parametrize(
    "argv",
    [
        ["resolve", "--polynomial", "y - x**2"],
        ["cycle", "--polynomial", "x**4 + y**4"],
        ["cycle", "--polynomial", "x*y*(x + y)*(x - y)"],
    ],
)
def test_computation_error_exit_code(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 3
    assert "error" in json.loads(out)["verdicts"]
