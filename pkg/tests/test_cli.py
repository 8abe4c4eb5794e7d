import json
import subprocess
import sys

import pytest

from tensamp.cli import main
from tensamp.modelio import (
    dumps,
    load_model,
    parse_class,
    report_from_dict,
    surface_from_dict,
    surface_to_dict,
    verdict_report,
)
from tensamp.surface import verify_verdict

from conftest import CORPUS, hirzebruch


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "hirzebruch_F3", "--class=-K", "--property", "tensample")
    assert code == 0 and json.loads(out)["status"] == "Yes"
    code, out, _ = run(capsys, "classify", "hirzebruch_F2", "--class=-K", "--property", "tensample")
    rep = json.loads(out)
    assert code == 1 and rep["status"] == "No" and rep["evidence"]["curve"] == "C0"
    code, out, _ = run(capsys, "classify", "blowup_r10_line", "--class=-K", "--property", "tensample")
    assert code == 2 and json.loads(out)["status"] == "Unknown"


def test_build_examples(capsys):
    code, out, _ = run(capsys, "build", "ruled", "--g", "0", "--e", "-2", "--d", "-2")
    m = surface_from_dict(json.loads(out))
    assert code == 0 and m.lattice.gram == ((0, 1), (1, -2))
    code, out, _ = run(capsys, "build", "toric", "--cycle", "1,1,1")
    assert json.loads(out)["rank"] == 1
    code, out, _ = run(capsys, "build", "blowup-p2", "--r", "3", "--config", "line")
    assert "l" in [c["name"] for c in json.loads(out)["curves"]]
    code, _, err = run(capsys, "build", "toric", "--cycle", "0,0,0")
    assert code == 65 and "12 - 3k" in err
    code, _, _ = run(capsys, "build", "ruled", "--g", "0", "--e", "-2", "--d", "0")
    assert code == 65


def test_round_trip_is_identity():
    for p in sorted(CORPUS.glob("*.json")):
        if p.name.endswith(".expected.json"):
            continue
        d = json.loads(p.read_text())
        if d["kind"] == "surface":
            assert dumps(surface_to_dict(surface_from_dict(d))) == p.read_text()


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "classify", str(bad), "--class=1,0")[0] == 64
    d = surface_to_dict(hirzebruch(2))
    d["colour"] = "blue"
    bad.write_text(json.dumps(d))
    assert run(capsys, "classify", str(bad), "--class=1,0")[0] == 64
    d = surface_to_dict(hirzebruch(2))
    d["gram"][0][0] = "0.5"
    bad.write_text(json.dumps(d))
    assert run(capsys, "classify", str(bad), "--class=1,0")[0] == 64
    assert run(capsys, "classify", "hirzebruch_F2", "--class=1,0,0")[0] == 65
    assert run(capsys, "classify", "hirzebruch_F2", "--class=1.5,0")[0] == 64
    assert run(capsys, "classify", "hirzebruch_F2", "--class=Z")[0] == 64
    assert run(capsys, "classify", "no_such_model", "--class=1,0")[0] == 64
    with pytest.raises(SystemExit) as e:
        main(["classify"])
    assert e.value.code == 64


def test_class_expressions():
    m = hirzebruch(2)
    assert parse_class(m, "-K") == -m.canonical
    assert parse_class(m, "−K") == -m.canonical
    assert parse_class(m, "2*f + 1/2 C0") == parse_class(m, "2,1/2")
    assert parse_class(m, ["1", "-1"]) == parse_class(m, "f - xi")


def test_cones_svg_and_csv(tmp_path, capsys):
    svg, csv = tmp_path / "c.svg", tmp_path / "c.csv"
    code, out, _ = run(capsys, "cones", "hirzebruch_F3", "--svg", str(svg), "--csv", str(csv))
    assert code == 0
    text = svg.read_text()
    assert text.count('class="piece"') == 2
    assert text.count('class="ray"') == 4
    assert ">Amp<" in text and ">Big_{C0,−}<" in text
    rows = csv.read_text().splitlines()
    assert rows[0] == "piece_id,ray_index,coord_1,coord_2" and len(rows) == 5
    assert run(capsys, "cones", "blowup_r3_line")[0] == 65


def test_other_commands(capsys):
    code, out, _ = run(capsys, "group", "hirzebruch_F2", "--gen=-K", "--gen=f")
    assert code == 0 and json.loads(out)["status"] == "Yes"
    code, out, _ = run(capsys, "nagata", "--r", "9", "--d", "3", "--m", "1,1,1,1,1,1,1,1,1")
    assert json.loads(out)["excluded"] is True
    assert run(capsys, "nagata", "--r", "3", "--d", "3", "--m", "1,1")[0] == 65
    code, out, _ = run(capsys, "edge3fold", "--hypersurface", "7", "1")
    assert json.loads(out)["result"] is True
    code, out, _ = run(capsys, "edge3fold", "--deg", "2", "--semistable")
    assert json.loads(out)["result"] is False
    code, out, _ = run(capsys, "edge3fold", "--deg", "-1", "--e", "4", "--d", "-1")
    assert json.loads(out)["result"] is False
    assert run(capsys, "compose", "reducible_conic")[0] == 0
    assert run(capsys, "compose", "conic_degree_zero")[0] == 1
    assert run(capsys, "certify", "de_jong")[0] == 0
    assert run(capsys, "certify", "certificate_unknown_terminal")[0] == 2
    code, out, _ = run(capsys, "canonical-report", "toric_0_m2_0_2")
    assert code == 1 and json.loads(out)["minus_two_curves"] == ["D1"]


def test_report_round_trip_and_reverify(capsys):
    m = load_model("blowup_r10_line_complete")
    for prop in ("big", "tensample", "ample", "antibig"):
        _, out, _ = run(capsys, "classify", "blowup_r10_line_complete", "--class=-K", "--property", prop)
        query, v = report_from_dict(json.loads(out))
        assert verify_verdict(m, parse_class(m, "-K"), prop, v)
        assert dumps(verdict_report(query, v)) == out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "tensamp", "nagata", "--r", "4", "--d", "1", "--m", "1,1,0,0"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["excluded"] is True
