from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from adecover.core.errors import DimensionMismatch, SingularMatrix
from adecover.exact.linalg import (
    IntMatrix,
    bareiss_determinant,
    is_negative_definite,
    leading_minors,
    solve_linear_exact,
)


def cartan_a(n: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [[-2 if i == j else int(abs(i - j) == 1) for j in range(n)] for i in range(n)]
    )


@st.composite
def square_matrices(draw, max_size: int = 4):
    n = draw(st.integers(min_value=1, max_value=max_size))
    entries = draw(
        st.lists(st.integers(-6, 6), min_size=n * n, max_size=n * n)
    )
    return IntMatrix(rows=n, cols=n, entries=tuple(entries))


def test_solve_one_by_one():
    m = IntMatrix.from_rows([[-2]])
    assert solve_linear_exact(m, [-2]) == [Fraction(1)]


def test_solve_identity():
    assert solve_linear_exact(IntMatrix.identity(3), [4, -1, 7]) == [4, -1, 7]


def test_solve_a2_cartan():
    assert solve_linear_exact(cartan_a(2), [-1, -1]) == [1, 1]


def test_solve_rational_solution():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert solve_linear_exact(m, [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]


def test_solve_singular():
    m = IntMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        solve_linear_exact(m, [1, 1])


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_linear_exact(IntMatrix.identity(2), [1, 2, 3])


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])


@given(square_matrices())
def test_bareiss_matches_sympy(m):
    assert bareiss_determinant(m) == sympy.Matrix(m.to_rows()).det()


@given(square_matrices(), st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_solution_satisfies_system(m, rhs):
    assume(bareiss_determinant(m) != 0)
    rhs = rhs[: m.rows]
    x = solve_linear_exact(m, rhs)
    assert m.mul_vector(x) == rhs


@pytest.mark.parametrize("n", range(1, 9))
def test_cartan_minors(n):
    neg = IntMatrix(rows=n, cols=n, entries=tuple(-v for v in cartan_a(n).entries))
    assert leading_minors(neg) == list(range(2, n + 2))
    assert is_negative_definite(cartan_a(n))


def test_not_negative_definite():
    assert not is_negative_definite(IntMatrix.from_rows([[-1, 2], [2, -1]]))
    assert not is_negative_definite(IntMatrix.from_rows([[-2, 1], [0, -2]]))


def test_leading_minors_with_zero_pivot():
    m = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert leading_minors(m) == [0, -1]
