from __future__ import annotations

import pytest

from adecover.core.ade import AdeType, supported_types
from adecover.core.errors import (
    BranchNotDisjoint,
    InvalidAdeType,
    NonReduced,
    NotSingular,
    ResolutionDiverged,
)
from adecover.cover.double_cover import build_double_cover
from adecover.exact.poly import render
from adecover.resolution.blowup import blow_up
from adecover.resolution.germ import CurveGerm, standard_germ
from adecover.resolution.resolve import (
    initial_record,
    normal_crossings_certificate,
    resolve,
)

CUSP = "y**2 - x**3"


@pytest.mark.parametrize(
    ("text", "family", "index"),
    [("A2", "A", 2), ("a10", "A", 10), ("D4", "D", 4), ("E8", "E", 8)],
)
def test_parse_ade_type(text, family, index):
    t = AdeType.parse(text)
    assert (str(t.family), t.index) == (family, index)


@pytest.mark.parametrize("text", ["A0", "D3", "E9", "F4", "", "A"])
def test_parse_invalid_ade_type(text):
    with pytest.raises(InvalidAdeType):
        AdeType.parse(text)


def test_supported_types_cover_all_families():
    names = [str(t) for t in supported_types()]
    assert names[0] == "A1"
    assert "D10" in names and "E8" in names
    assert len(names) == 10 + 7 + 3


def test_standard_germ():
    assert render(standard_germ(AdeType.parse("A2")).poly) == render(
        CurveGerm.from_text(CUSP).poly
    )


@pytest.mark.parametrize("text", ["y**2", "(y - x)**2*(y + x)", "0"])
def test_non_reduced_germ(text):
    with pytest.raises(NonReduced):
        CurveGerm.from_text(text)


def test_cusp_resolution():
    record = resolve(CurveGerm.from_text(CUSP))
    assert record.alphas == (2, 3, 6)
    assert record.self_ints == (-3, -2, -1)
    assert record.blowup_count == 3
    assert record.normal_crossings and record.branch_separated
    # 最後の曲線が他の 2 本と B̄ に 1 回ずつ交わる
    e3 = record.curve("E3")
    assert (e3.meets("E1"), e3.meets("E2"), e3.meets("B")) == (1, 1, 1)


def test_node_resolution():
    record = resolve(CurveGerm.from_text("x*y"))
    assert record.alphas == (2,)
    assert record.self_ints == (-1,)
    assert record.curve("E1").meets("B") == 2


def test_tacnode_resolution():
    record = resolve(CurveGerm.from_text("y**2 - x**4"))
    assert record.alphas == (2, 4)
    assert record.self_ints == (-2, -1)


def test_cusp_without_extra_blowups():
    record = resolve(CurveGerm.from_text(CUSP), extra_blowups=False)
    assert record.alphas == (2,)
    assert record.self_ints == (-1,)
    assert not record.branch_separated
    with pytest.raises(BranchNotDisjoint):
        build_double_cover(record)


def test_resolution_limit():
    with pytest.raises(ResolutionDiverged):
        resolve(CurveGerm.from_text(CUSP), max_blowups=1)


def test_blow_up_smooth_point():
    record = initial_record(CurveGerm.from_text("y - x**2"), extra_blowups=True)
    with pytest.raises(NotSingular):
        blow_up(record, record.points[0])


def test_single_blow_up():
    record = initial_record(CurveGerm.from_text(CUSP), extra_blowups=True)
    after = blow_up(record, record.points[0])
    assert after.blowup_count == 1
    assert after.alphas == (2,)


@pytest.mark.parametrize("t", list(supported_types()), ids=str)
def test_resolution_is_normal_crossing(t):
    record = resolve(standard_germ(t))
    assert record.normal_crossings
    certificate = normal_crossings_certificate(record)
    assert all(entry["normal_crossing"] for entry in certificate)
    for c in record.curves:
        assert c.self_int < 0
        for other, n in c.incidences:
            if other != "B":
                assert n == 1


@pytest.mark.parametrize("t", list(supported_types()), ids=str)
def test_standard_germ_is_reduced(t):
    germ = standard_germ(t)
    assert germ.vanishes_at_origin
    assert germ.label == str(t)


@pytest.mark.parametrize("t", list(supported_types()), ids=str)
def test_resolution_is_deterministic_and_short(t):
    first = resolve(standard_germ(t))
    second = resolve(standard_germ(t))
    assert first.to_dict() == second.to_dict()
    assert [p.describe() for p in first.points] == [
        p.describe() for p in second.points
    ]
    assert first.blowup_count < 30


@pytest.mark.parametrize("text", ["y - x**2", "x + y**3", "1 + x*y"])
def test_smooth_germ_is_not_singular(text):
    with pytest.raises(NotSingular):
        resolve(CurveGerm.from_text(text))
