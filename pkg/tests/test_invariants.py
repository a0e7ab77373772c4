from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from adecover.core.ade import AdeType
from adecover.core.errors import (
    BoundViolated,
    InvalidDual,
    InvalidProfile,
    NegativeGenus,
    NonIntegralChi,
)
from adecover.invariants.formulas import (
    arithmetic_genus_R,
    chern_and_euler,
    cusp_count_from_euler,
    defect_of_surface,
    degree_bounds,
    evaluate_degree_bounds,
    genus_of_B,
    s_point_bound,
    self_intersections,
)
from adecover.invariants.plucker import (
    nu_invariant,
    nu_of_profile,
    plucker_dual_degree,
)
from adecover.invariants.profile import CoveringProfile, SingularityProfile
from adecover.invariants.report import invariant_report

CUBIC = CoveringProfile(N=3, d=6, c_p=6)


@st.composite
def covering_profiles(draw):
    d_bar = draw(st.integers(1, 10))
    d = 2 * d_bar
    higher = SingularityProfile.from_counts(
        a={3: draw(st.integers(0, 2)), 4: draw(st.integers(0, 1))},
        e={6: draw(st.integers(0, 1))},
    )
    p = CoveringProfile(
        N=draw(st.integers(1, 30)),
        d=d,
        n_s=draw(st.integers(0, 12)),
        n_p=4 * draw(st.integers(0, 4)),
        c_s=draw(st.integers(0, 12)),
        c_p=3 * draw(st.integers(0, 6)),
        higher=higher,
    )
    assume((d - 1) * (d - 2) // 2 >= p.delta)
    return p


def test_defect_of_surface():
    assert defect_of_surface(CoveringProfile(N=2, d=4, n_s=1)) == 1
    assert defect_of_surface(CoveringProfile(N=2, d=4, n_p=4)) == 0
    higher = SingularityProfile.from_counts(a={3: 1})
    assert defect_of_surface(CoveringProfile(N=2, d=6, c_s=1, higher=higher)) == 3


@pytest.mark.parametrize(("d", "delta", "g"), [(6, 0, 10), (6, 6, 4), (3, 1, 0)])
def test_genus_of_B(d, delta, g):
    assert genus_of_B(d, delta) == g


def test_negative_genus():
    with pytest.raises(NegativeGenus):
        genus_of_B(4, 4)


def test_arithmetic_genus_R():
    assert arithmetic_genus_R(6, 0, 6) == 4
    assert arithmetic_genus_R(2, 0, 0) == 0
    assert arithmetic_genus_R(6, 0, 6, g=4, delta_x=0) == 4
    with pytest.raises(InvalidProfile):
        arithmetic_genus_R(5, 0, 0)


@pytest.mark.parametrize(
    ("args", "expected"),
    [((3, 4, 0), (12, 12)), ((1, 0, 0), (2, 2)), ((3, 4, 2), (10, 14))],
)
def test_self_intersections(args, expected):
    assert self_intersections(*args) == expected


def test_cubic_surface():
    chern = chern_and_euler(N=3, d_bar=3, p_a=4, g=4, delta_x=0, c_p=6)
    assert (chern.k2, chern.e, chern.chi) == (3, 9, 1)

    bounds = degree_bounds(N=3, d_bar=3, g=4, delta_x=0)
    assert bounds.hodge == 3
    assert bounds.simple == 4
    assert bounds.within and bounds.equality


def test_conic_double_plane():
    chern = chern_and_euler(N=2, d_bar=1, p_a=0, g=0, delta_x=0, c_p=0)
    assert (chern.k2, chern.e, chern.chi) == (8, 4, 1)


def test_chi_divisibility():
    with pytest.raises(NonIntegralChi):
        chern_and_euler(N=3, d_bar=3, p_a=2, g=4, delta_x=0, c_p=6, n_p=2)
    with pytest.raises(NonIntegralChi):
        chern_and_euler(N=3, d_bar=3, p_a=5, g=4, delta_x=0, c_p=5)


@pytest.mark.parametrize(("n_p", "c_p"), [(1, 0), (2, 0), (3, 0), (0, 1), (0, 4)])
def test_profile_divisibility(n_p, c_p):
    with pytest.raises(NonIntegralChi):
        CoveringProfile(N=3, d=6, n_p=n_p, c_p=c_p)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"N": 2, "d": 5},
        {"N": 2, "d": 0},
        {"N": 0, "d": 4},
        {"N": 2, "d": 4, "n_s": -1},
        {"N": 2, "d": 4, "higher": SingularityProfile.from_counts(a={1: 1})},
    ],
)
def test_invalid_profile(kwargs):
    with pytest.raises(InvalidProfile):
        CoveringProfile(**kwargs)


def test_degree_bound_violated():
    with pytest.raises(BoundViolated):
        degree_bounds(N=5, d_bar=3, g=4, delta_x=0)
    assert not evaluate_degree_bounds(N=5, d_bar=3, g=4, delta_x=0).within


def test_hodge_bound_is_exact():
    bounds = evaluate_degree_bounds(N=2, d_bar=2, g=3, delta_x=0)
    assert bounds.hodge == Fraction(16, 8)
    assert bounds.equality


@pytest.mark.parametrize(
    ("text", "nu"),
    [
        ("A1", 0),
        ("A2", 1),
        ("A3", 0),
        ("A4", 1),
        ("D4", 0),
        ("D5", 1),
        ("E6", 2),
        ("E7", 1),
        ("E8", 2),
    ],
)
def test_nu_invariant(text, nu):
    assert nu_invariant(AdeType.parse(text)) == nu


def test_nu_of_profile():
    assert nu_of_profile(SingularityProfile.from_counts(a={2: 6})) == (6, 0)
    assert nu_of_profile(SingularityProfile.from_counts(a={2: 1}, e={6: 1})) == (3, 2)


@pytest.mark.parametrize(
    ("args", "expected"), [((3, 0, 0), 4), ((3, 0, 1), 3), ((2, 0, 0), 2)]
)
def test_plucker_dual_degree(args, expected):
    assert plucker_dual_degree(*args) == expected


def test_plucker_invalid():
    with pytest.raises(InvalidDual):
        plucker_dual_degree(1, 0, 0)


def test_cusp_count_and_s_point_bound():
    assert cusp_count_from_euler(N=3, p_a=4, e=9) == 6
    assert s_point_bound(9, 3) == Fraction(16, 3)


def test_cubic_report():
    report = invariant_report(CUBIC)
    assert (report.g, report.p_a, report.delta_x) == (4, 4, 0)
    assert (report.r_bar_sq, report.r_bar_z_sq) == (12, 12)
    assert (report.nu, report.nu_prime, report.d_hat) == (6, 0, 12)
    assert report.noether
    assert report.bounds.equality
    assert report.to_dict()["bound_hodge"] == Fraction(3)


@settings(max_examples=1000)
@given(covering_profiles())
def test_noether_identity(p):
    report = invariant_report(p)
    assert report.chern.k2 + report.chern.e == 12 * report.chern.chi
    assert report.p_a == report.g + report.delta_x
    assert report.r_bar_z_sq - report.r_bar_sq == 2 * report.delta_x


@given(covering_profiles(), st.integers(1, 3))
def test_perturbed_n_p_rejected(p, shift):
    with pytest.raises(NonIntegralChi):
        CoveringProfile(N=p.N, d=p.d, n_p=p.n_p + shift, c_p=p.c_p)
