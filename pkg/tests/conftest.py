import os
from pathlib import Path

import pytest

from tensamp import builders as B
from tensamp.modelio import load_model
from tensamp.surface import CurveEntry, DivisorClass, IntersectionLattice, SurfaceModel

CORPUS = Path(__file__).resolve().parents[1] / "src" / "tensamp" / "models"
os.environ.setdefault("TENSAMP_MODELS", str(CORPUS))


def hirzebruch(n: int) -> SurfaceModel:
    return B.build_ruled(B.RuledData(0, -n, B.Unstable(-n)))


def blowup(r: int, config="general", complete=None, curve_cone=None) -> SurfaceModel:
    return B.build_blowup_p2(B.BlowupP2Config(r, B.PointConfig(config), complete, curve_cone))


def plane() -> SurfaceModel:
    lat = IntersectionLattice(1, ((1,),), ("H",), hodge_index=True)
    return SurfaceModel(lat, DivisorClass.of(-3), (CurveEntry("line", DivisorClass.of(1)),),
                        neg_curves_complete=True, curve_cone_generated=True, pseff_gens=(DivisorClass.of(1),))


def corpus_surfaces() -> dict:
    out = {}
    for p in sorted(CORPUS.glob("*.json")):
        if p.name.endswith(".expected.json"):
            continue
        m = load_model(str(p))
        if isinstance(m, SurfaceModel):
            out[p.stem] = m
    return out


@pytest.fixture(scope="session")
def surfaces():
    return corpus_surfaces()


# classes in the ruled (f, xi) basis used by the ruled/toric cross-check
CROSS_CLASSES = [
    (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 2), (1, 2), (-1, 1), (-2, 1),
    (3, 2), (6, 1), (-1, 2), (7, 3), (2, 3), (-1, 0), (0, -1), (-3, -1), (4, -1), (5, 3),
]


def ruled_toric_disagreements(n: int) -> list:
    """Classes on which F_n built as ruled and as toric surfaces get different verdicts."""
    from tensamp.exact import bilinear, solve_linear
    from tensamp.surface import classify

    ruled = hirzebruch(n)
    toric = B.build_toric(B.ToricCycle((0, -n, 0, n)))
    t2r = B.hirzebruch_toric_to_ruled(n)  # columns: images of D2, D3
    for i in range(2):
        for j in range(2):
            ci = [t2r[0][i], t2r[1][i]]
            cj = [t2r[0][j], t2r[1][j]]
            assert bilinear(ci, ruled.lattice.gram, cj) == toric.lattice.gram[i][j]
    bad = []
    for c in CROSS_CLASSES:
        tc = solve_linear(t2r, c)
        for prop in ("nef", "ample", "big", "antibig", "tensample"):
            a = classify(ruled, DivisorClass(c), prop).status
            b = classify(toric, DivisorClass(tc), prop).status
            if a != b:
                bad.append((c, prop, a, b))
    return bad
