from __future__ import annotations

import itertools

import pytest

from adecover.core.ade import AdeType, supported_types
from adecover.core.errors import ComputationError, NonIntegralDefect, NotDynkin
from adecover.cover.canonical import (
    canonical_cycle_formula,
    canonical_cycle_solve,
    check_cycle_relation,
    defect,
    defect_closed_form,
)
from adecover.cover import pipeline as pipeline_module
from adecover.cover.double_cover import build_double_cover, lift_components
from adecover.cover.graph import CanonicalCycle, MinimalGraph
from adecover.cover.minimal import (
    classify_dynkin,
    contract_to_minimal,
    contraction_steps,
)
from adecover.cover.pipeline import run_germ_pipeline
from adecover.cover.tables import expected_grouped_cycle
from adecover.resolution.germ import CurveGerm, standard_germ
from adecover.resolution.resolve import resolve


def cover_of(text: str):
    return build_double_cover(resolve(CurveGerm.from_text(text)))


def test_cusp_cover_components():
    g = cover_of("y**2 - x**3")
    assert {c.id: c.self_int for c in g.components} == {
        "L1'": -3,
        "L1''": -3,
        "L2": -1,
        "L3": -2,
    }
    assert canonical_cycle_formula(g).as_dict() == {
        "L1'": 1,
        "L1''": 1,
        "L2": 3,
        "L3": 3,
    }
    assert canonical_cycle_solve(g) == canonical_cycle_formula(g)


def test_cusp_minimal_graph():
    minimal = contract_to_minimal(cover_of("y**2 - x**3"))
    assert str(minimal.ade_type) == "A2"
    assert minimal.ids == ("L1'", "L1''")
    assert minimal.r_incidence == (1, 1)
    assert minimal.edges == (("L1'", "L1''", 1),)


def test_node_cover():
    g = cover_of("x*y")
    assert [(c.id, c.self_int) for c in g.components] == [("L1", -2)]
    assert len(contraction_steps(g)) == 1
    minimal = contract_to_minimal(g)
    assert str(minimal.ade_type) == "A1"
    assert defect(canonical_cycle_solve(minimal), minimal.r_vector()) == 1


def test_tacnode_cover_is_already_minimal():
    g = cover_of("y**2 - x**4")
    assert sorted(c.id for c in g.components) == ["L1'", "L1''", "L2"]
    assert all(c.self_int == -2 for c in g.components)
    assert g.edge("L1'", "L2") == 1 and g.edge("L1''", "L2") == 1
    assert g.edge("L1'", "L1''") == 0
    assert len(contraction_steps(g)) == 1
    assert str(contract_to_minimal(g).ade_type) == "A3"


@pytest.mark.parametrize("t", list(supported_types()), ids=str)
def test_pipeline_matches_tables(pipeline, t):
    result = pipeline(t)
    assert result.minimal.ade_type == t
    assert result.grouped_multiset == expected_grouped_cycle(t)
    assert result.delta == defect_closed_form(t)
    assert not any(check_cycle_relation(result.cycle, result.minimal))


@pytest.mark.parametrize("t", list(supported_types()), ids=str)
def test_every_contraction_stage_keeps_cycle(pipeline, t):
    for g in pipeline(t).steps:
        assert canonical_cycle_solve(g) == canonical_cycle_formula(g)


def test_e6_grouped_cycle(pipeline):
    assert pipeline(AdeType.parse("E6")).grouped_multiset == [2, 3, 4, 6]


@pytest.mark.parametrize(
    ("text", "value"),
    [("A1", 1), ("A2", 1), ("A5", 3), ("D4", 3), ("D7", 4), ("E6", 3), ("E7", 4)],
)
def test_defect_closed_form(text, value):
    assert defect_closed_form(AdeType.parse(text)) == value


def test_zero_incidence_gives_zero_cycle():
    g = MinimalGraph(
        ids=("a", "b"),
        over=("E1", "E2"),
        edges=(("a", "b", 1),),
        r_incidence=(0, 0),
        ade_type=AdeType.parse("A2"),
    )
    z = canonical_cycle_solve(g)
    assert z.as_dict() == {"a": 0, "b": 0}
    assert defect(z, g.r_vector(), matrix=g.matrix(), ids=g.ids) == 0


def test_odd_defect_rejected():
    with pytest.raises(NonIntegralDefect):
        defect(CanonicalCycle.from_mapping({"a": 1}), [1])


def test_defect_checks_self_intersection():
    g = MinimalGraph(
        ids=("a",),
        over=("E1",),
        edges=(),
        r_incidence=(4,),
        ade_type=AdeType.parse("A1"),
    )
    z = CanonicalCycle.from_mapping({"a": 1})
    with pytest.raises(NonIntegralDefect):
        defect(z, [4], matrix=g.matrix(), ids=g.ids)


@pytest.mark.parametrize(
    ("edges", "expected"),
    [
        ([("a", "b"), ("b", "c")], "A3"),
        ([("c", "a"), ("c", "b"), ("c", "d")], "D4"),
        ([("c", "a"), ("c", "b1"), ("b1", "b2"), ("c", "d1"), ("d1", "d2")], "E6"),
        (
            [
                ("c", "a"),
                ("c", "b1"),
                ("b1", "b2"),
                ("c", "d1"),
                ("d1", "d2"),
                ("d2", "d3"),
                ("d3", "d4"),
            ],
            "E8",
        ),
    ],
)
def test_classify_dynkin(edges, expected):
    ids = tuple(sorted({v for e in edges for v in e}))
    assert str(classify_dynkin(ids, tuple((a, b, 1) for a, b in edges))) == expected


@pytest.mark.parametrize(
    "edges",
    [
        [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)],
        [("a", "b", 2)],
        [("c", "a", 1), ("c", "b", 1), ("c", "d", 1), ("c", "e", 1)],
        [
            ("c", "a1", 1),
            ("a1", "a2", 1),
            ("c", "b1", 1),
            ("b1", "b2", 1),
            ("c", "d1", 1),
            ("d1", "d2", 1),
        ],
    ],
)
def test_not_dynkin(edges):
    ids = tuple(sorted({v for a, b, _ in edges for v in (a, b)}))
    with pytest.raises(NotDynkin):
        classify_dynkin(ids, tuple(edges))


# E7: c1 - c2 - c3 - c4 - c5 - c6, b は c3 に付く
E7_IDS = ("c1", "c2", "c3", "c4", "c5", "c6", "b")
E7_EDGES = (
    ("c1", "c2"),
    ("c2", "c3"),
    ("c3", "c4"),
    ("c4", "c5"),
    ("c5", "c6"),
    ("b", "c3"),
)


def e7_incidence(z: dict[str, int]) -> dict[str, int]:
    """r = −M·z（対角 −2 の E7 グラフ）"""
    r = {v: 2 * z[v] for v in E7_IDS}
    for a, b in E7_EDGES:
        r[a] -= z[b]
        r[b] -= z[a]
    return r


def test_e7_table_vector_is_feasible(pipeline):
    z = dict(zip(E7_IDS, (3, 6, 9, 7, 5, 3, 5)))
    r = e7_incidence(z)
    assert r == {"c1": 0, "c2": 0, "c3": 0, "c4": 0, "c5": 0, "c6": 1, "b": 1}
    assert sorted(z.values()) == expected_grouped_cycle(AdeType.parse("E7"))
    assert pipeline(AdeType.parse("E7")).grouped_multiset == [3, 3, 5, 5, 6, 7, 9]


def test_e7_with_eight_is_infeasible():
    for values in set(itertools.permutations((3, 3, 5, 5, 6, 8, 9))):
        r = e7_incidence(dict(zip(E7_IDS, values)))
        assert min(r.values()) < 0


@pytest.mark.parametrize("t", list(supported_types()), ids=str)
def test_lifted_curves_are_rational(t):
    comps = lift_components(resolve(standard_germ(t)))
    assert all(c.genus == 0 for c in comps)


@pytest.mark.parametrize("text", ["x**4 + y**4", "x*y*(x + y)*(x - y)"])
def test_ordinary_quadruple_point_is_rejected(text):
    record = resolve(CurveGerm.from_text(text))
    assert max(c.genus for c in lift_components(record)) == 1
    with pytest.raises(NotDynkin):
        build_double_cover(record)
    with pytest.raises(NotDynkin):
        run_germ_pipeline(CurveGerm.from_text(text))


def test_pipeline_checks_defect_against_closed_form(monkeypatch):
    monkeypatch.setattr(pipeline_module, "defect_closed_form", lambda t: -1)
    with pytest.raises(ComputationError):
        run_germ_pipeline(CurveGerm.from_text("y**2 - x**3"))
