from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensamp import exact
from tensamp.exact import EQ, GE, GT, Constraint, lp_feasible, lp_optimize, verify_infeasibility

small = st.integers(-4, 4)


def test_rat_parses_exact_forms_only():
    assert exact.rat("3/6") == F(1, 2)
    assert exact.rat(" -7 ") == -7
    assert exact.rat(F(2, 3)) == F(2, 3)
    for bad in (0.5, "0.5", "1e3", "x", "1/0"):
        with pytest.raises((ValueError, TypeError, ZeroDivisionError)):
            exact.rat(bad)


def test_rref_and_solve():
    rows, piv = exact.rref([[2, 4, 6], [1, 2, 4]])
    assert piv == [0, 2]
    assert exact.solve_linear([[1, 1], [1, -1]], [3, 1]) == (2, 1)
    assert exact.solve_linear([[1, 1], [2, 2]], [1, 3]) is None
    assert exact.nullspace([[1, 1, 1]]) and all(
        exact.dot((1, 1, 1), v) == 0 for v in exact.nullspace([[1, 1, 1]])
    )


def test_primitive():
    assert exact.primitive((F(1, 2), F(3, 4))) == (2, 3)
    assert exact.primitive((0, -6)) == (0, -1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_and_rank_match_numpy(m):
    a = np.array(m, dtype=float)
    assert abs(float(exact.determinant(m)) - np.linalg.det(a)) < 1e-6
    assert exact.rank(m) == np.linalg.matrix_rank(a)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=6, max_size=6))
def test_signature_matches_eigenvalues(xs):
    a, b, c, d, e, f = xs
    m = [[a, b, c], [b, d, e], [c, e, f]]
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    if np.min(np.abs(ev)) < 1e-6 and exact.determinant(m) != 0:
        return
    expected = (int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((np.abs(ev) <= 1e-9).sum()))
    assert exact.signature(m) == expected


def test_negative_definite():
    assert exact.is_negative_definite([[-2, 1], [1, -2]])
    assert not exact.is_negative_definite([[-2, 2], [2, -2]])
    assert not exact.is_negative_definite([[1]])


def test_lp_optimize():
    status, x = lp_optimize([((1, 1), GE, 2), ((1, 0), GE, 0), ((0, 1), GE, 0)], (1, 2), minimize=True)
    assert status == "optimal" and x == (2, 0)
    status, _ = lp_optimize([((1, 0), GE, 0)], (1, 0))
    assert status == "unbounded"


def test_strict_infeasibility_certificate():
    cons = [((1,), GT, 0), ((-1,), GE, 0)]
    res = lp_feasible(cons)
    assert not res.feasible
    assert verify_infeasibility([Constraint(*c) for c in cons], res.certificate)


def test_empty_system_is_feasible():
    res = lp_feasible([], dim=2)
    assert res.feasible and res.point == (0, 0)


rel = st.sampled_from([GE, GT, EQ])


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.lists(small, min_size=2, max_size=2), rel, small), min_size=1, max_size=5))
def test_feasibility_is_certified_either_way(raw):
    cons = [Constraint(tuple(a), r, b) for a, r, b in raw]
    res = lp_feasible(cons)
    if res.feasible:
        assert all(c.holds(res.point) for c in cons)
    else:
        assert verify_infeasibility(cons, res.certificate)
