import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensamp import exact
from tensamp.cone import (
    ConeQ,
    boundary_functional,
    cone_contains,
    cone_from_halfspaces,
    cone_interior_contains,
    dual_cone,
    same_cone,
    slice2d,
    subspace_meets_interior,
    verify_membership,
)


def test_membership_examples():
    c = ConeQ.of([(1, 0), (1, 2)])
    r = cone_contains(c, (2, 2))
    assert r.member and r.coefficients == (1, 1)
    r = cone_contains(c, (0, 1))
    assert not r.member and r.functional == (2, -1)
    assert verify_membership(c, (0, 1), r)
    r = cone_contains(c, (0, 0))
    assert r.member and all(x == 0 for x in r.coefficients)


def test_interior_examples():
    q = ConeQ.of([(1, 0), (0, 1)])
    assert cone_interior_contains(q, (1, 1))
    assert not cone_interior_contains(q, (1, 0))
    assert not cone_interior_contains(ConeQ.of([(1, 0)], 2), (1, 0))
    assert boundary_functional(q, (1, 0)) is not None


def test_dual_examples():
    assert same_cone(dual_cone(ConeQ.of([(1, 0), (0, 1)])), ConeQ.of([(1, 0), (0, 1)]))
    assert same_cone(dual_cone(ConeQ.of([(1, 0), (1, 2)])), ConeQ.of([(0, 1), (2, -1)]))
    whole = dual_cone(ConeQ(2, ()))
    assert same_cone(whole, ConeQ.of([(1, 0), (-1, 0), (0, 1), (0, -1)]))


def test_dual_cap():
    with pytest.raises(exact.CapacityError):
        dual_cone(ConeQ(13, (exact.unit(13, 0),)))


def test_subspace_examples():
    q = ConeQ.of([(1, 0), (0, 1)])
    assert subspace_meets_interior([(1, 1)], q)
    assert not subspace_meets_interior([(1, -1)], q)
    assert subspace_meets_interior([(1, 0), (0, 1)], ConeQ.of([(1, 2), (3, -1)]))


def test_slice_examples():
    e = [(1, 0), (0, 1)]
    assert slice2d(ConeQ.of([(1, 0), (1, 2)]), e) == [(1, 0), (1, 2)]
    assert slice2d(ConeQ.of([(1, 0), (1, 1), (1, 2)]), e) == [(1, 0), (1, 2)]
    assert slice2d(ConeQ(2, ()), e) == []


def test_three_dim_dual():
    c = ConeQ.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
    d = dual_cone(c)
    assert same_cone(d, ConeQ.of([(0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1)]))


def test_halfspace_lineality():
    lin, rays = cone_from_halfspaces([(1, 0, 0)], 3)
    assert len(lin) == 2 and rays == [(1, 0, 0)]


# brute-force oracle ---------------------------------------------------------

DENOMS = range(1, 7)


def _brute_member(gens, x) -> bool:
    """Search nonnegative coefficients with denominators <= 6 on one or two generators."""
    if all(v == 0 for v in x):
        return True
    for g in gens:
        for dnm in DENOMS:
            for k in range(0, 18 * dnm + 1):
                lam = F(k, dnm)
                if (lam * g[0], lam * g[1]) == tuple(x):
                    return True
    for g1, g2 in itertools.combinations(gens, 2):
        for dnm in DENOMS:
            for k in range(0, 18 * dnm + 1):
                lam = F(k, dnm)
                rest = (x[0] - lam * g1[0], x[1] - lam * g1[1])
                # rest must be mu * g2 with mu >= 0 of denominator at most 6
                comp = 0 if g2[0] != 0 else 1
                mu = rest[comp] / g2[comp]
                if mu >= 0 and mu.denominator <= 6 and (mu * g2[0], mu * g2[1]) == rest:
                    return True
    return False


def _small_dets(gens) -> bool:
    return all(abs(a[0] * b[1] - a[1] * b[0]) <= 6 for a, b in itertools.combinations(gens, 2))


coord = st.integers(-3, 3)
gen2 = st.tuples(coord, coord).filter(lambda v: v != (0, 0))


@settings(max_examples=40, deadline=None)
@given(st.lists(gen2, min_size=1, max_size=3).filter(_small_dets), st.tuples(coord, coord))
def test_membership_matches_brute_force(gens, x):
    c = ConeQ.of(gens)
    r = cone_contains(c, x)
    assert r.member == _brute_member(gens, x)
    assert verify_membership(c, x, r)


def _gens(dim):
    v = st.tuples(*[st.integers(-3, 3)] * dim).filter(lambda t: any(t))
    return st.lists(v, min_size=1, max_size=5)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]).flatmap(lambda n: st.tuples(st.just(n), _gens(n))))
def test_dual_involution(data):
    n, gens = data
    c = ConeQ(n, tuple(gens))
    dd = dual_cone(dual_cone(c))
    assert all(cone_contains(dd, g).member for g in c.generators)
    assert all(cone_contains(c, g).member for g in dd.generators)


@settings(max_examples=40, deadline=None)
@given(_gens(3), st.tuples(*[st.integers(-3, 3)] * 3))
def test_interior_implies_member_and_certificates_verify(gens, x):
    c = ConeQ(3, tuple(gens))
    r = cone_contains(c, x)
    assert verify_membership(c, x, r)
    if cone_interior_contains(c, x):
        assert r.member
