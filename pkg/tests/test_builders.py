import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensamp import builders as B
from tensamp.exact import DimensionError
from tensamp.surface import DivisorClass, Status, is_tensor_ample, pair, verify_verdict

from conftest import blowup, hirzebruch, ruled_toric_disagreements


def test_curve_examples():
    c = B.build_curve([("A", 1), ("B", -1)])
    assert B.curve_tensor_ample(c).status is Status.YES
    v = B.curve_tensor_ample(B.build_curve([("P", 0)]))
    assert v.status is Status.NO and v.witness == "P"
    c3 = B.build_curve([("a", 1), ("b", 1), ("c", 1)])
    assert B.curve_tensor_ample(c3, (2, 3, -5)).status is Status.YES
    with pytest.raises(DimensionError):
        B.curve_tensor_ample(c3, (1, 2))
    with pytest.raises(ValueError):
        B.build_curve([])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.integers(1, 7))
def test_curve_scaling(degs, k):
    c = B.build_curve([(f"c{i}", 1) for i in range(len(degs))])
    assert B.curve_tensor_ample(c, degs).status == B.curve_tensor_ample(c, [k * d for d in degs]).status


def test_ruled_examples():
    f2 = hirzebruch(2)
    c0 = f2.curve("C0").cls
    assert f2.pair(c0, c0) == -2 and f2.pair(f2.canonical, c0) == 0
    g1 = B.build_ruled(B.RuledData(1, -1, B.Unstable(-1)))
    assert g1.canonical == DivisorClass.of(-1, -2)
    semi = B.build_ruled(B.RuledData(2, 0, B.Semistable()))
    assert semi.negative_curves() == []
    with pytest.raises(ValueError):
        B.RuledData(0, -2, B.Unstable(-1))


@pytest.mark.parametrize("d", range(-6, 0))
def test_hirzebruch_table(d):
    label = B.ruled_anticanonical_class(B.RuledData(0, d, B.Unstable(d)))
    want = {-1: B.LABEL_AMPLE, -2: B.LABEL_BIG_NOT_TENS}.get(d, B.LABEL_TENS)
    assert label == want


def test_genus_tables():
    for d in (-1, -2, -3):
        assert B.ruled_anticanonical_class(B.RuledData(1, d, B.Unstable(d))) == B.LABEL_TENS
    assert B.ruled_anticanonical_class(B.RuledData(2, 0, B.Unstable(-2))) == B.LABEL_TENS
    assert B.ruled_anticanonical_class(B.RuledData(2, 0, B.Unstable(-1))) == B.LABEL_PSEFF_NOT_BIG
    # d > 1 - g + e/2 gives a class outside PsEff
    assert B.ruled_anticanonical_class(B.RuledData(3, 2, B.Unstable(0))) == B.LABEL_NOT_PSEFF


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 4), st.integers(-8, 8), st.integers(-8, 8))
def test_ruled_classifier_agrees_with_closed_form(g, e, d):
    if not 2 * d < e:
        return
    B.ruled_anticanonical_class(B.RuledData(g, e, B.Unstable(d)))  # raises on disagreement


def test_toric_examples():
    p2 = B.build_toric(B.ToricCycle((1, 1, 1)))
    assert p2.rank == 1 and p2.canonical == DivisorClass.of(-3)
    with pytest.raises(ValueError):
        B.build_toric(B.ToricCycle((0, 0, 0)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_toric_matches_ruled(n):
    assert ruled_toric_disagreements(n) == []


def test_toric_random_perturbations_rejected():
    rng = random.Random(7)
    valid = [(1, 1, 1), (0, 0, 0, 0), (0, -1, 0, 1), (0, -3, 0, 3), (-1, -1, -1, -1, -1, -1), (0, -2, -1, -1, 1)]
    for cyc in valid:
        B.toric_rays(B.ToricCycle(cyc))
        for _ in range(20):
            bad = list(cyc)
            i = rng.randrange(len(bad))
            bad[i] += rng.choice([-2, -1, 1, 2])
            with pytest.raises(ValueError):
                B.toric_rays(B.ToricCycle(tuple(bad)))


def test_toric_sum_rule_alone_is_not_enough():
    # sum is 12 - 3k but the rays do not close up
    with pytest.raises(ValueError, match="close"):
        B.toric_rays(B.ToricCycle((2, -2, 0, 0)))


def test_blowup_examples():
    m = blowup(1, complete=True)
    d = m.cls(1, 1)
    assert is_tensor_ample(m, d).yes
    m3 = blowup(3, "line")
    assert m3.pair(-m3.canonical, m3.curve("l").cls) == 0
    m10 = blowup(10, "line", complete=True)
    cert = B.line_anticanonical_certificate(m10)
    assert verify_verdict(m10, -m10.canonical, "big", cert)
    assert is_tensor_ample(m10, -m10.canonical).yes
    assert not blowup(10, "line").neg_curves_complete


def test_dq_examples():
    assert B.dq_pair(9, 3, 3, [1] * 9) == 0
    assert B.dq_pair(2, F(5, 2), 2, [1, 1]) == 3
    assert B.dq_pair(4, 7, 0, [0] * 4) == 0
    with pytest.raises(DimensionError):
        B.dq_pair(3, 1, 1, [1])


def test_dq_pair_matches_lattice():
    rng = random.Random(11)
    for _ in range(100):
        r = rng.randint(1, 8)
        q = F(rng.randint(-20, 20), rng.randint(1, 6))
        d = rng.randint(-5, 5)
        ms = [rng.randint(-3, 3) for _ in range(r)]
        m = blowup(r)
        curve = DivisorClass((d,) + tuple(-x for x in ms))
        assert B.dq_pair(r, q, d, ms) == m.pair(B.dq_class(r, q), curve)


def test_nagata_examples_and_grid():
    assert B.nagata_excluded(9, 3, [1] * 9)
    assert not B.nagata_excluded(10, 3, [1] * 9 + [0])
    assert B.nagata_excluded(4, 1, [1, 1, 0, 0])


def test_anticanonical_obstruction():
    assert B.anticanonical_obstruction(9, 3, [1] * 9)
    assert B.anticanonical_obstruction(3, 1, [1, 1, 1])
    assert not B.anticanonical_obstruction(5, 2, [1] * 5)
    m = blowup(9, complete=True)
    cubic = B.obstruction_curve_class(9, 3, [1] * 9)
    v = is_tensor_ample(m.with_curve("cubic", cubic), m.canonical)
    assert v.status is Status.NO and v.witness == "cubic"


def test_threefold_edge():
    for r, b in [(7, 0), (7, 1), (6, 0), (6, 1)]:
        deg, e, d = B.hypersurface_line_params(r, b)
        assert B.threefold_edge_check(deg, B.Conormal(e, d))
    assert B.hypersurface_line_params(7, 1) == (2, 4, -1)
    assert B.hypersurface_line_params(6, 0) == (1, 3, 0)
    assert not B.threefold_edge_check(3, B.Conormal())
    assert not B.threefold_edge_check(-1, B.Conormal(4, -1))
    with pytest.raises(ValueError):
        B.Conormal(2, 1)
    with pytest.raises(ValueError):
        B.hypersurface_line_params(5, 0)


def test_point_bundle_check():
    for r, a, l in [(1, 1, (1,)), (2, 3, (1, 2)), (3, 2, (1, 1, 4))]:
        out = B.blowup_point_bundle_check(r, a, l)
        assert out["tensor_ample"].yes and out["ample"].no and out["anti_ample"].no
    with pytest.raises(ValueError):
        B.blowup_point_bundle_check(1, 1, (0,))
