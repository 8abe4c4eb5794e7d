import itertools

import pytest

from tensamp import builders as B
from tensamp.schemecalc import (
    CurveComponent,
    PointComponent,
    SchemeModel,
    StratCertificate,
    Stratum,
    SurfaceComponent,
    de_jong_certificate,
    doubled_origin_certificate,
    scheme_tensor_ample,
    validate_strat_certificate,
)
from tensamp.surface import Status, Verdict, is_tensor_ample

from conftest import blowup, hirzebruch


def curve(*degs):
    return CurveComponent(B.build_curve([(f"P{i}", d) for i, d in enumerate(degs)]), name="C" + "".join(map(str, degs)))


def test_compose_examples():
    assert scheme_tensor_ample(SchemeModel([curve(1, -1)])).status is Status.YES
    v = scheme_tensor_ample(SchemeModel([curve(0), curve(3)]))
    assert v.status is Status.NO and v.evidence["component"] == "C0"
    f3 = hirzebruch(3)
    s = SchemeModel([SurfaceComponent(f3, -f3.canonical, "F3"), curve(2), PointComponent()])
    assert scheme_tensor_ample(s).status is Status.YES
    with pytest.raises(ValueError):
        SchemeModel([])


def test_unknown_component_propagates():
    m = blowup(6)
    s = SchemeModel([SurfaceComponent(m, -m.canonical, "dP"), curve(1)])
    assert scheme_tensor_ample(s).status is Status.UNKNOWN


def test_order_independence():
    f2 = hirzebruch(2)
    m = blowup(6)
    comps = [curve(1), curve(0), SurfaceComponent(f2, -f2.canonical, "F2"), SurfaceComponent(m, -m.canonical, "dP"), PointComponent()]
    for k in range(1, 4):
        for sub in itertools.combinations(comps, k):
            statuses = {scheme_tensor_ample(SchemeModel(p)).status for p in itertools.permutations(sub)}
            assert len(statuses) == 1


def test_single_surface_component_is_surface_verdict():
    for n in (1, 2, 3):
        f = hirzebruch(n)
        assert scheme_tensor_ample(SchemeModel([SurfaceComponent(f, -f.canonical)])).status == is_tensor_ample(f, -f.canonical).status


def test_certificates():
    v = validate_strat_certificate(de_jong_certificate())
    assert v.status is Status.YES and "user_assertions" in v.assumptions
    assert [a["label"] for a in v.evidence["assertions"]] == ["x", "y"]
    assert validate_strat_certificate(doubled_origin_certificate(3)).status is Status.YES
    unknown = StratCertificate((Stratum(1, True, "x"),), Verdict(Status.UNKNOWN, {}, "?"))
    assert validate_strat_certificate(unknown).status is Status.UNKNOWN
    missing = StratCertificate((Stratum(1, None, "x"),), None)
    assert validate_strat_certificate(missing).status is Status.UNKNOWN
    failing = StratCertificate((Stratum(1, True, "x"),), Verdict(Status.NO, {}))
    assert validate_strat_certificate(failing).status is Status.NO
    with pytest.raises(ValueError):
        validate_strat_certificate(StratCertificate((), None))
    with pytest.raises(ValueError):
        validate_strat_certificate(StratCertificate(("x",), None))
