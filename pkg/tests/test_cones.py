from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zipstrata.cones import (ConeError, feasible_strict, kernel_basis,
                             verify_certificate)


def test_single_halfspace():
    res = feasible_strict([(1,)], 1)
    assert res.feasible and res.point[0] > 0
    assert res.integral_point()[0] >= 1


def test_opposite_halfspaces_infeasible():
    rows = [(1, 0), (-1, 0)]
    res = feasible_strict(rows, 2)
    assert not res.feasible
    assert verify_certificate(rows, res.certificate)


def test_empty_system_feasible():
    res = feasible_strict([], 3)
    assert res.feasible and res.point == (0, 0, 0)


def test_zero_row_infeasible():
    rows = [(0, 0)]
    res = feasible_strict(rows, 2)
    assert not res.feasible
    assert verify_certificate(rows, res.certificate)


def test_wedge():
    rows = [(1, -1), (-1, 2)]
    res = feasible_strict(rows, 2)
    assert res.feasible
    x = res.integral_point()
    assert x[0] - x[1] > 0 and -x[0] + 2 * x[1] > 0


def test_three_way_infeasible():
    # x > 0, y > 0, -x - y > 0 cannot hold
    rows = [(1, 0), (0, 1), (-1, -1)]
    res = feasible_strict(rows, 2)
    assert not res.feasible
    assert verify_certificate(rows, res.certificate)


def test_row_length_checked():
    with pytest.raises(ConeError):
        feasible_strict([(1, 0, 0)], 2)


def test_kernel_basis_orthogonal():
    eqs = [(1, -1, 0, 0), (0, 0, 1, -1)]
    basis = kernel_basis(eqs, 4)
    assert len(basis) == 2
    for b in basis:
        for e in eqs:
            assert sum(x * y for x, y in zip(b, e)) == 0
    assert kernel_basis([], 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert kernel_basis([(1, 0), (0, 1)], 2) == []


def test_fractional_rows_normalized():
    res = feasible_strict([(Fraction(1, 2), Fraction(-1, 3))], 2)
    assert res.feasible
    x = res.integral_point()
    assert 3 * x[0] - 2 * x[1] > 0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                min_size=1, max_size=6))
def test_feasibility_is_self_certifying(rows):
    """Witnesses satisfy every inequality; certificates replay to 0 > 0.

    Either outcome is independently checkable, so this is a complete oracle
    for the elimination (Gordan duality: exactly one of the two exists).
    """
    res = feasible_strict(rows, 3)
    if res.feasible:
        x = res.point
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, x)) > 0
        xi = res.integral_point()
        for r in rows:
            assert sum(a * b for a, b in zip(r, xi)) > 0
    else:
        assert verify_certificate(rows, res.certificate)


def test_certificate_rejects_garbage():
    rows = [(1, 0), (-1, 0)]
    assert not verify_certificate(rows, (0, 0))
    assert not verify_certificate(rows, (1, -1))
    assert not verify_certificate(rows, (1, 2))
    assert verify_certificate(rows, (1, 1))
