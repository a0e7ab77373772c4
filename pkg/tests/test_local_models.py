from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPermutation

from adecover.core.errors import DegreeTooLarge, InputError
from adecover.exact.poly import X, Y, render
from adecover.local_models.identities import (
    pleat_normal_form_check,
    verify_f3_identity,
    verify_f6_identity,
)
from adecover.local_models.monodromy import (
    BraidPair,
    CoveringTag,
    classify_local_covering,
    enumerate_cusp_monodromies,
)
from adecover.local_models.permutation import (
    Permutation,
    involution_class_representatives,
    involutions,
    is_transitive,
)


def p(n: int, *cycles: tuple[int, ...]) -> Permutation:
    return Permutation.from_cycles(n, cycles)


def test_f3_identity():
    record = verify_f3_identity()
    assert record["remainder"] == "0"
    assert record["contact_CR"] == 2


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_f3_identity_pointwise(x, z):
    y = -Fraction(1, 2) * (z**3 - 3 * x * z)
    assert x**3 - y**2 == (x - z**2) ** 2 * (x - z**2 / 4)


def test_f6_identity():
    record = verify_f6_identity()
    assert record["remainder"] == "0"
    assert record["quotient_terms"] > 0


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_f6_identity_on_hyperplane(z1, z2):
    z3 = -z1 - z2
    x = -Fraction(z1 * z2 + z2 * z3 + z3 * z1, 3)
    y = -Fraction(z1 * z2 * z3, 2)
    vandermonde = ((z2 - z1) * (z3 - z2) * (z1 - z3)) ** 2
    assert x**3 - y**2 == Fraction(vandermonde, 108)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pleat_discriminant(k):
    record = pleat_normal_form_check(k)
    assert record["determinant"] == record["discriminant"]
    assert record["discriminant"] == render(4 * X ** (3 * k) + 27 * Y**2)
    assert record["ordinary_cusp"] == (k == 1)
    assert len(record["matrix"]) == 3


def test_pleat_invalid_exponent():
    with pytest.raises(InputError):
        pleat_normal_form_check(0)


def test_permutation_composition():
    a, b = p(3, (1, 2)), p(3, (2, 3))
    ab = a * b
    assert ab(1) == 2
    assert str(ab) == "(1 2 3)"
    assert ab.inverse().images == (3, 1, 2)
    assert (ab * ab.inverse()).is_identity()


def test_permutation_cycles():
    q = p(5, (1, 2), (3, 4))
    assert q.cycle_type() == (2, 2, 1)
    assert q.cycles() == [(1, 2), (3, 4), (5,)]
    assert q.is_involution()
    assert str(Permutation.identity(4)) == "()"
    assert p(3, (1, 2)).relabel([2, 3, 1]) == p(3, (2, 3))


def test_invalid_permutation():
    with pytest.raises(InputError):
        Permutation((1, 1, 3))
    with pytest.raises(InputError):
        p(2, (1, 2)) * p(3, (1, 2))


@pytest.mark.parametrize(("n", "count"), [(2, 1), (3, 3), (4, 9), (5, 25), (6, 75)])
def test_involution_count(n, count):
    found = involutions(n)
    assert len(found) == count
    assert all(s.is_involution() and not s.is_identity() for s in found)


def test_involutions_at_cap():
    assert len(involutions(8)) == 763
    with pytest.raises(InputError):
        involutions(0)


@pytest.mark.parametrize("n", [2, 3, 5, 6, 8])
def test_involution_class_representatives(n):
    reps = involution_class_representatives(n)
    assert len(reps) == n // 2
    for j, rep in enumerate(reps, start=1):
        assert rep.cycle_type() == (2,) * j + (1,) * (n - 2 * j)


def test_sympy_conversion():
    q = p(4, (1, 3, 2))
    assert q.sym == SymPermutation([[0, 2, 1]], size=4)
    assert Permutation.from_sympy(q.sym) == q
    assert (q * q.inverse()).sym.is_Identity


def test_is_transitive():
    assert is_transitive([p(3, (1, 2)), p(3, (2, 3))])
    assert not is_transitive([p(4, (1, 2)), p(4, (3, 4))])


def test_braid_relation():
    assert BraidPair(p(3, (1, 2)), p(3, (2, 3))).satisfies_braid_relation()
    assert not BraidPair(p(4, (1, 2)), p(4, (3, 4))).satisfies_braid_relation()
    assert not BraidPair(p(4, (1, 2)), p(4, (3, 4))).is_transitive()


def test_classify_single_pair():
    covering = classify_local_covering(BraidPair(p(3, (1, 2)), p(3, (2, 3))))
    assert covering.tag == CoveringTag.F3
    assert covering.meridian_cycle_type == (2, 1)


@pytest.mark.parametrize(
    ("n", "tag", "cycle_type"),
    [
        (2, CoveringTag.F2, (2,)),
        (3, CoveringTag.F3, (2, 1)),
        (6, CoveringTag.F6, (2, 2, 2)),
    ],
)
def test_cusp_monodromy_classes(n, tag, cycle_type):
    classes = enumerate_cusp_monodromies(n)
    assert len(classes) == 1
    assert classes[0].tag == tag
    assert classes[0].meridian_cycle_type == cycle_type
    assert classes[0].representative.satisfies_braid_relation()


@pytest.mark.parametrize("n", [4, 5, 7, 8])
def test_no_cusp_monodromy(n):
    assert enumerate_cusp_monodromies(n) == []


@pytest.mark.parametrize("seed", [0, 1, 7, 2024])
@pytest.mark.parametrize("n", [3, 6])
def test_shuffle_does_not_change_classes(n, seed):
    shuffled = enumerate_cusp_monodromies(n, shuffle_seed=seed)
    assert shuffled == enumerate_cusp_monodromies(n)


def test_degree_cap():
    with pytest.raises(DegreeTooLarge):
        enumerate_cusp_monodromies(9)
    with pytest.raises(DegreeTooLarge):
        enumerate_cusp_monodromies(5, cap=4)
    with pytest.raises(InputError):
        enumerate_cusp_monodromies(1)


def all_pair_classes(n: int) -> set[BraidPair]:
    found = set()
    for a in involutions(n):
        for b in involutions(n):
            pair = BraidPair(a, b)
            if pair.satisfies_braid_relation() and pair.is_transitive():
                found.add(pair.canonical())
    return found


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_representative_scan_matches_full_scan(n):
    classes = enumerate_cusp_monodromies(n)
    assert {c.representative for c in classes} == all_pair_classes(n)
