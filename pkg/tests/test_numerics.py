from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degexcess.errors import DimensionError, SingularMatrixError
from degexcess.numerics import (
    IntegerMatrix,
    ceil_sqrt,
    determinant,
    hadamard_bound,
    independent_rows,
    kernel_vector,
    lcm_denominators,
    solve_cramer,
)


def cofactor_det(rows):
    if not rows:
        return 1
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def square(max_n=5, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


CYCLIC_3_4 = [[3, 0, 1], [1, 3, 0], [0, 1, 3]]


def test_identity_det():
    assert determinant(IntegerMatrix.identity(3)) == 1


def test_cyclic_matrix_det():
    assert determinant(IntegerMatrix.from_rows(CYCLIC_3_4)) == 28


def test_non_square_det():
    with pytest.raises(DimensionError):
        determinant(IntegerMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_entries_length_checked():
    with pytest.raises(DimensionError):
        IntegerMatrix(2, 2, (1, 2, 3))


def test_zero_pivot_needs_swap():
    assert determinant(IntegerMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntegerMatrix.from_rows([[0, 0], [1, 0]])) == 0


@given(square())
def test_det_matches_cofactor(rows):
    assert determinant(IntegerMatrix.from_rows(rows)) == cofactor_det(rows)


@given(square(max_n=4, lo=-50, hi=50))
def test_det_matches_cofactor_wide_entries(rows):
    assert determinant(IntegerMatrix.from_rows(rows)) == cofactor_det(rows)


def test_cramer_identity():
    sol, det = solve_cramer(IntegerMatrix.identity(2), [2, 3])
    assert sol == (2, 3) and det == 1


def test_cramer_cyclic():
    sol, det = solve_cramer(IntegerMatrix.from_rows(CYCLIC_3_4), [2, 1, 1])
    assert det == 28
    assert sol == (Fraction(16, 28), Fraction(4, 28), Fraction(8, 28))


def test_cramer_singular():
    with pytest.raises(SingularMatrixError):
        solve_cramer(IntegerMatrix.from_rows([[1, 2], [2, 4]]), [1, 1])


@given(square(max_n=4), st.data())
def test_cramer_solves_exactly(rows, data):
    a = IntegerMatrix.from_rows(rows)
    b = data.draw(st.lists(st.integers(-9, 9), min_size=a.rows, max_size=a.rows))
    if determinant(a) == 0:
        with pytest.raises(SingularMatrixError):
            solve_cramer(a, b)
        return
    sol, det = solve_cramer(a, b)
    assert a.apply(sol) == b
    assert all(abs(det) % x.denominator == 0 for x in sol)


def test_lcm_denominators():
    assert lcm_denominators([Fraction(1, 2), Fraction(1, 2)]) == 2
    assert lcm_denominators([Fraction(16, 28), Fraction(4, 28), Fraction(8, 28)]) == 7
    assert lcm_denominators([]) == 1


def test_fraction_canonical():
    x = Fraction(16, 28)
    assert (x.numerator, x.denominator) == (4, 7)
    assert Fraction(3, -6).denominator > 0


@given(st.integers(0, 10**12))
def test_ceil_sqrt(n):
    k = ceil_sqrt(n)
    assert k * k >= n
    assert k == 0 or (k - 1) * (k - 1) < n


def test_hadamard_bound_values():
    assert hadamard_bound(3, 3) == 6 * 27
    assert hadamard_bound(4, 4) == 16 * 256


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=5)))
def test_kernel_vector(rows):
    k = kernel_vector(rows)
    ncols = len(rows[0])
    rank = len(independent_rows(rows))
    if k is None:
        assert rank == ncols
    else:
        assert any(k)
        assert all(sum(a * x for a, x in zip(r, k)) == 0 for r in rows)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5)))
def test_independent_rows_full_rank(rows):
    pick = independent_rows(rows)
    sub = [rows[i] for i in pick]
    # the chosen rows are independent: their Gram determinant is nonzero
    gram = [[sum(a * b for a, b in zip(r, s)) for s in sub] for r in sub]
    assert (determinant(IntegerMatrix.from_rows(gram)) != 0) if sub else True
    # and every row lies in their span
    assert all(len(independent_rows(sub + [r])) == len(sub) for r in rows)
