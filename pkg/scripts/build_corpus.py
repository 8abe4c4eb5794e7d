"""Regenerate the shipped model corpus and its expected-verdict sidecars.

Model files come from the builders.  The expectations below are written by
hand from the known geometry of each example and are not computed here.

    python3 scripts/build_corpus.py [outdir]
"""
from __future__ import annotations

import sys
from pathlib import Path

from tensamp import builders as B
from tensamp.modelio import certificate_to_dict, curve_to_dict, dumps, surface_to_dict
from tensamp.schemecalc import StratCertificate, Stratum, de_jong_certificate, doubled_origin_certificate

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src" / "tensamp" / "models"


def q(*args, status, witness=None):
    return {"args": list(args), "status": status, "witness": witness}


def cls(name, spec, prop, status, witness=None):
    return q("classify", name, f"--class={spec}", "--property", prop, status=status, witness=witness)


def canon(name, status, witness=None):
    return q("canonical-report", name, status=status, witness=witness)


MODELS = {}
EXPECT = {}


def add(name, obj, *queries):
    MODELS[name] = obj
    EXPECT[name] = list(queries)


# Hirzebruch surfaces F_n: g=0, e=d=-n
for n in range(1, 7):
    name = f"hirzebruch_F{n}"
    m = B.build_ruled(B.RuledData(0, -n, B.Unstable(-n)))
    if n == 1:
        qs = [cls(name, "-K", "ample", "Yes"), cls(name, "-K", "tensample", "Yes"), cls(name, "-K", "nef", "Yes")]
    elif n == 2:
        qs = [
            cls(name, "-K", "tensample", "No", "C0"),
            cls(name, "-K", "big", "Yes"),
            cls(name, "-K", "ample", "No", "C0"),
            canon(name, "No", "C0"),
            q("group", name, "--gen=-K", status="No", witness="C0"),
            q("group", name, "--gen=-K", "--gen=f", status="Yes"),
        ]
    else:
        qs = [
            cls(name, "-K", "tensample", "Yes"),
            cls(name, "-K", "ample", "No", "C0"),
            cls(name, "-K", "nef", "No", "C0"),
            cls(name, "-K", "big", "Yes"),
        ]
    add(name, surface_to_dict(m), *qs)

for d in (-1, -2, -3):
    name = f"ruled_g1_e{d}_d{d}"
    m = B.build_ruled(B.RuledData(1, d, B.Unstable(d)))
    add(name, surface_to_dict(m), cls(name, "-K", "tensample", "Yes"), cls(name, "-K", "ample", "No", "C0"))

for d in (-1, -2, -3):
    name = f"ruled_g2_e0_d{d}"
    m = B.build_ruled(B.RuledData(2, 0, B.Unstable(d)))
    if d == -1:
        qs = [cls(name, "-K", "big", "No"), cls(name, "-K", "tensample", "No")]
    else:
        qs = [cls(name, "-K", "tensample", "Yes"), cls(name, "-K", "ample", "No", "C0")]
    add(name, surface_to_dict(m), *qs)

add("ruled_g2_e0_semistable", surface_to_dict(B.build_ruled(B.RuledData(2, 0, B.Semistable()))),
    cls("ruled_g2_e0_semistable", "-K", "big", "No"), cls("ruled_g2_e0_semistable", "xi+f", "ample", "Yes"))
add("ruled_g0_e0_semistable", surface_to_dict(B.build_ruled(B.RuledData(0, 0, B.Semistable()))),
    cls("ruled_g0_e0_semistable", "-K", "ample", "Yes"))

for cyc, status, wit in [((1, 1, 1), "Yes", None), ((0, 0, 0, 0), "Yes", None), ((0, -1, 0, 1), "Yes", None),
                         ((0, -2, 0, 2), "No", "D1"), ((0, -3, 0, 3), "Yes", None), ((-1, -1, -1, -1, -1, -1), "Yes", None),
                         ((0, -2, -1, -1, 1), "No", "D1")]:
    name = "toric_" + "_".join(str(x) for x in cyc).replace("-", "m")
    m = B.build_toric(B.ToricCycle(cyc))
    add(name, surface_to_dict(m), canon(name, status, wit), cls(name, "K", "antibig", "Yes"))

G, L, C = B.PointConfig.GENERAL, B.PointConfig.ON_LINE, B.PointConfig.ON_CONIC
add("blowup_r1_general", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(1, G, True))),
    cls("blowup_r1_general", "H+E1", "tensample", "Yes"),
    cls("blowup_r1_general", "H+E1", "ample", "No", "E1"),
    cls("blowup_r1_general", "-H-E1", "ample", "No"),
    cls("blowup_r1_general", "H+E1", "big", "Yes"))
add("blowup_r2_line", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(2, L, True))), canon("blowup_r2_line", "Yes"))
add("blowup_r3_line", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(3, L))), canon("blowup_r3_line", "No", "l"))
add("blowup_r6_conic", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(6, C))), canon("blowup_r6_conic", "No", "Q"))
add("blowup_r6_line", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(6, L, True))), canon("blowup_r6_line", "Yes"))
add("blowup_r10_line", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(10, L))),
    cls("blowup_r10_line", "-K", "tensample", "Unknown"), cls("blowup_r10_line", "-K", "ample", "No", "l"))
add("blowup_r10_line_complete", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(10, L, True))),
    cls("blowup_r10_line_complete", "-K", "tensample", "Yes"),
    cls("blowup_r10_line_complete", "-K", "big", "Yes"),
    cls("blowup_r10_line_complete", "-K", "ample", "No", "l"))
add("blowup_r10_conic_complete", surface_to_dict(B.build_blowup_p2(B.BlowupP2Config(10, C, True))),
    canon("blowup_r10_conic_complete", "Yes"))

add("reducible_conic_curve", curve_to_dict(B.build_curve([("A", 1), ("B", -1)]), "two lines meeting in a point"))
add("reducible_conic", {"kind": "scheme", "name": "reducible conic, O(1) glued to O(-1)",
                        "components": [{"model": "reducible_conic_curve.json", "name": "conic"}]},
    q("compose", "reducible_conic", status="Yes"))
add("conic_degree_zero", {"kind": "scheme", "name": "reducible conic with a degree 0 component",
                          "components": [{"model": "reducible_conic_curve.json", "name": "conic", "degrees": [1, 0]}]},
    q("compose", "conic_degree_zero", status="No", witness="conic"))
add("scheme_F3_and_curve", {"kind": "scheme", "name": "F3 with -K plus a degree 2 curve",
                            "components": [{"model": "hirzebruch_F3.json", "name": "F3", "class": "-K"},
                                           {"model": {"kind": "curve", "components": [{"name": "P1", "degree": 2}]},
                                            "name": "line"},
                                           {"model": {"kind": "point"}, "name": "pt"}]},
    q("compose", "scheme_F3_and_curve", status="Yes"))
add("de_jong", certificate_to_dict(de_jong_certificate()), q("certify", "de_jong", status="Yes"))
add("doubled_origin_a2", certificate_to_dict(doubled_origin_certificate(2)), q("certify", "doubled_origin_a2", status="Yes"))
add("certificate_unknown_terminal",
    certificate_to_dict(StratCertificate((Stratum(1, True, "x"),), None, "unfinished chain")) | {"terminal": {"status": "Unknown", "note": "residual not analysed"}},
    q("certify", "certificate_unknown_terminal", status="Unknown"))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for name, obj in MODELS.items():
        (OUT / f"{name}.json").write_text(dumps(obj), encoding="utf-8")
        if EXPECT[name]:
            (OUT / f"{name}.expected.json").write_text(dumps({"model": f"{name}.json", "queries": EXPECT[name]}), encoding="utf-8")
    print(f"wrote {len(MODELS)} models to {OUT}")


if __name__ == "__main__":
    main()
