"""JSON model files, class expressions and verdict serialization.

Rationals are written as strings (``"3"``, ``"-1/2"``) so no value ever passes
through a float.  Output is canonical: sorted keys, reduced rationals, fixed
indentation.  Unknown fields are rejected on input.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional

from . import exact
from .builders import CurveModel
from .schemecalc import (
    CurveComponent,
    PointComponent,
    SchemeModel,
    StratCertificate,
    Stratum,
    SurfaceComponent,
)
from .surface import CurveEntry, DivisorClass, IntersectionLattice, Status, SurfaceModel, Verdict

MODELS_ENV = "TENSAMP_MODELS"


class ModelFormatError(ValueError):
    """Malformed model file or class expression."""


def corpus_dir() -> Path:
    env = os.environ.get(MODELS_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "models"


def resolve_model_path(ref: str, base: Optional[Path] = None) -> Path:
    """A path as given, relative to ``base``, or the name of a corpus file."""
    p = Path(ref)
    candidates = [p]
    if base is not None and not p.is_absolute():
        candidates.append(base / p)
    c = corpus_dir()
    candidates += [c / ref, c / f"{ref}.json"]
    for cand in candidates:
        if cand.is_file():
            return cand
    raise ModelFormatError(f"model file not found: {ref}")


# ---------------------------------------------------------------------------
# scalars


def parse_rat(x) -> Fraction:
    if isinstance(x, bool):
        raise ModelFormatError(f"not a rational: {x!r}")
    try:
        return exact.rat(x)
    except (ValueError, TypeError, ZeroDivisionError) as err:
        raise ModelFormatError(f"not an exact rational: {x!r}") from err


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(x, n: Optional[int], what: str) -> tuple:
    if not isinstance(x, list):
        raise ModelFormatError(f"{what} must be an array")
    v = tuple(parse_rat(c) for c in x)
    if n is not None and len(v) != n:
        raise exact.DimensionError(f"{what} has {len(v)} entries, expected {n}")
    return v


def _check_keys(d: Mapping, required: set, optional: set, what: str) -> None:
    if not isinstance(d, dict):
        raise ModelFormatError(f"{what} must be an object")
    missing = required - d.keys()
    extra = d.keys() - required - optional
    if missing:
        raise ModelFormatError(f"{what}: missing field(s) {sorted(missing)}")
    if extra:
        raise ModelFormatError(f"{what}: unknown field(s) {sorted(extra)}")


# ---------------------------------------------------------------------------
# models

SURFACE_FIELDS = {"kind", "rank", "basis", "gram", "canonical", "curves", "flags"}
SURFACE_OPTIONAL = {"name", "ample_witness", "pseff_gens", "nef_gens"}
FLAG_FIELDS = ("neg_curves_complete", "curve_cone_generated", "proper_positive_dim")
FLAG_OPTIONAL = {"hodge_index"}


def surface_from_dict(d: Mapping) -> SurfaceModel:
    _check_keys(d, SURFACE_FIELDS, SURFACE_OPTIONAL, "surface model")
    n = d["rank"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ModelFormatError("rank must be a positive integer")
    basis = d["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ModelFormatError("basis must be an array of names")
    if len(basis) != n:
        raise exact.DimensionError(f"basis has {len(basis)} names, rank is {n}")
    if not isinstance(d["gram"], list):
        raise ModelFormatError("gram must be an array of rows")
    gram = tuple(_vec(row, n, "gram row") for row in d["gram"])
    flags = d["flags"]
    _check_keys(flags, set(FLAG_FIELDS), FLAG_OPTIONAL, "flags")
    for k, v in flags.items():
        if not isinstance(v, bool):
            raise ModelFormatError(f"flag {k} must be true or false")
    lat = IntersectionLattice(n, gram, tuple(basis), hodge_index=flags.get("hodge_index", False))
    curves = []
    if not isinstance(d["curves"], list):
        raise ModelFormatError("curves must be an array")
    for c in d["curves"]:
        _check_keys(c, {"name", "class"}, set(), "curve")
        if not isinstance(c["name"], str):
            raise ModelFormatError("curve name must be a string")
        curves.append(CurveEntry(c["name"], DivisorClass(_vec(c["class"], n, f"class of {c['name']}"))))

    def gens(key):
        if key not in d:
            return None
        if not isinstance(d[key], list):
            raise ModelFormatError(f"{key} must be an array")
        return tuple(DivisorClass(_vec(g, n, key)) for g in d[key])

    aw = d.get("ample_witness")
    return SurfaceModel(
        lattice=lat,
        canonical=DivisorClass(_vec(d["canonical"], n, "canonical")),
        curves=tuple(curves),
        neg_curves_complete=flags["neg_curves_complete"],
        curve_cone_generated=flags["curve_cone_generated"],
        proper_positive_dim=flags["proper_positive_dim"],
        ample_witness=None if aw is None else DivisorClass(_vec(aw, n, "ample_witness")),
        pseff_gens=gens("pseff_gens"),
        nef_gens=gens("nef_gens"),
        name=d.get("name", ""),
    )


def _vec_out(v) -> list:
    return [rat_str(x) for x in v]


def surface_to_dict(m: SurfaceModel) -> dict:
    out = {
        "kind": "surface",
        "rank": m.rank,
        "basis": list(m.lattice.basis_names),
        "gram": [_vec_out(r) for r in m.lattice.gram],
        "canonical": _vec_out(m.canonical),
        "curves": [{"name": c.name, "class": _vec_out(c.cls)} for c in m.curves],
        "flags": {
            "neg_curves_complete": m.neg_curves_complete,
            "curve_cone_generated": m.curve_cone_generated,
            "proper_positive_dim": m.proper_positive_dim,
            "hodge_index": m.lattice.hodge_index,
        },
    }
    if m.name:
        out["name"] = m.name
    if m.ample_witness is not None:
        out["ample_witness"] = _vec_out(m.ample_witness)
    if m.pseff_gens is not None:
        out["pseff_gens"] = [_vec_out(g) for g in m.pseff_gens]
    if m.nef_gens is not None:
        out["nef_gens"] = [_vec_out(g) for g in m.nef_gens]
    return out


def curve_from_dict(d: Mapping) -> CurveModel:
    _check_keys(d, {"kind", "components"}, {"name"}, "curve model")
    comps = []
    if not isinstance(d["components"], list):
        raise ModelFormatError("components must be an array")
    for c in d["components"]:
        _check_keys(c, {"name", "degree"}, set(), "curve component")
        deg = c["degree"]
        if not isinstance(deg, int) or isinstance(deg, bool):
            raise ModelFormatError("component degree must be an integer")
        comps.append((str(c["name"]), deg))
    return CurveModel(tuple(comps))


def curve_to_dict(c: CurveModel, name: str = "") -> dict:
    out = {"kind": "curve", "components": [{"name": n, "degree": d} for n, d in c.components]}
    if name:
        out["name"] = name
    return out


def scheme_from_dict(d: Mapping, base: Optional[Path] = None) -> SchemeModel:
    _check_keys(d, {"kind", "components"}, {"name"}, "scheme model")
    comps = []
    if not isinstance(d["components"], list):
        raise ModelFormatError("components must be an array")
    for i, c in enumerate(d["components"]):
        _check_keys(c, {"model"}, {"name", "class", "degrees"}, "scheme component")
        ref = c["model"]
        inner = load_json(resolve_model_path(ref, base)) if isinstance(ref, str) else ref
        if not isinstance(inner, dict):
            raise ModelFormatError("component model must be an object or a file reference")
        kind = inner.get("kind")
        name = c.get("name", f"c{i}")
        if kind == "point":
            _check_keys(inner, {"kind"}, {"name"}, "point model")
            comps.append(PointComponent(name))
        elif kind == "curve":
            cm = curve_from_dict(inner)
            degs = c.get("degrees")
            if degs is not None:
                if not isinstance(degs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in degs):
                    raise ModelFormatError("degrees must be an array of integers")
                degs = tuple(degs)
            comps.append(CurveComponent(cm, degs, name))
        elif kind == "surface":
            sm = surface_from_dict(inner)
            if "class" not in c:
                raise ModelFormatError("surface component needs a class")
            comps.append(SurfaceComponent(sm, parse_class(sm, c["class"]), name))
        else:
            raise ModelFormatError(f"unknown component kind {kind!r}")
    return SchemeModel(tuple(comps))


def certificate_from_dict(d: Mapping) -> StratCertificate:
    _check_keys(d, {"kind", "strata", "terminal"}, {"name"}, "certificate")
    if not isinstance(d["strata"], list):
        raise ModelFormatError("strata must be an array")
    strata = []
    for s in d["strata"]:
        _check_keys(s, {"section_power"}, {"open_locus_quasi_affine", "label"}, "stratum")
        p = s["section_power"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise ModelFormatError("section_power must be an integer")
        qa = s.get("open_locus_quasi_affine")
        if qa is not None and not isinstance(qa, bool):
            raise ModelFormatError("open_locus_quasi_affine must be true or false")
        strata.append(Stratum(p, qa, str(s.get("label", ""))))
    t = d["terminal"]
    terminal = None
    if t is not None:
        _check_keys(t, {"status"}, {"note"}, "terminal")
        try:
            status = Status(t["status"])
        except ValueError as err:
            raise ModelFormatError(f"terminal status must be Yes, No or Unknown, got {t['status']!r}") from err
        terminal = Verdict(status, {"kind": "asserted", "note": t.get("note", "")})
    return StratCertificate(tuple(strata), terminal, d.get("name", ""))


def certificate_to_dict(c: StratCertificate) -> dict:
    out = {
        "kind": "certificate",
        "strata": [
            {"section_power": s.section_power, "open_locus_quasi_affine": s.open_locus_quasi_affine, "label": s.label}
            for s in c.strata
        ],
        "terminal": None
        if c.terminal is None
        else {"status": c.terminal.status.value, "note": str(c.terminal.evidence.get("scheme", c.terminal.evidence.get("note", "")))},
    }
    if c.name:
        out["name"] = c.name
    return out


def load_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as err:
        raise ModelFormatError(f"model file not found: {path}") from err
    except json.JSONDecodeError as err:
        raise ModelFormatError(f"{path}: invalid JSON: {err}") from err


def load_model(ref: str):
    """Load a model file (or corpus name) into the matching object."""
    path = resolve_model_path(ref)
    d = load_json(path)
    if not isinstance(d, dict):
        raise ModelFormatError("model file must hold an object")
    kind = d.get("kind")
    if kind == "surface":
        return surface_from_dict(d)
    if kind == "curve":
        return curve_from_dict(d)
    if kind == "scheme":
        return scheme_from_dict(d, path.parent)
    if kind == "certificate":
        return certificate_from_dict(d)
    raise ModelFormatError(f"unknown model kind {kind!r}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# class expressions

_RAT = r"[+-]?\d+(?:/\d+)?"
_VECTOR_RE = re.compile(rf"^\s*{_RAT}(?:\s*,\s*{_RAT})*\s*$")
_TERM_RE = re.compile(r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_']*)?\s*")


def parse_class(m: SurfaceModel, spec) -> DivisorClass:
    """A class from a coefficient array, a comma list of rationals, or a sum like ``-K``, ``H+E1``, ``2*f - 1/2 C0``.

    Symbols are basis names, catalog curve names, ``K`` (canonical) and ``A``
    (declared ample class), looked up in that order.
    """
    if isinstance(spec, DivisorClass):
        return spec
    if isinstance(spec, list):
        return DivisorClass(_vec(spec, m.rank, "class"))
    if not isinstance(spec, str):
        raise ModelFormatError(f"cannot read a class from {spec!r}")
    s = spec.replace("−", "-").strip()
    if _VECTOR_RE.match(s):
        v = tuple(parse_rat(x.strip()) for x in s.split(","))
        if len(v) != m.rank:
            raise exact.DimensionError(f"class has {len(v)} coefficients, model rank is {m.rank}")
        return DivisorClass(v)
    symbols = {}
    for i, b in enumerate(m.lattice.basis_names):
        symbols.setdefault(b, DivisorClass(exact.unit(m.rank, i)))
    for c in m.curves:
        symbols.setdefault(c.name, c.cls)
    symbols.setdefault("K", m.canonical)
    if m.ample_witness is not None:
        symbols.setdefault("A", m.ample_witness)
    acc = DivisorClass(exact.zeros(m.rank))
    pos = 0
    first = True
    if not s:
        raise ModelFormatError("empty class expression")
    while pos < len(s):
        mt = _TERM_RE.match(s, pos)
        sign, coef, sym = mt.group(1), mt.group(2), mt.group(3)
        if mt.end() == pos or (coef is None and sym is None) or (not sign and not first):
            raise ModelFormatError(f"cannot parse class expression {spec!r} at position {pos}")
        c = parse_rat(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        if sym is None:
            raise ModelFormatError(f"bare number in class expression {spec!r}; use a comma list for coordinates")
        if sym not in symbols:
            raise ModelFormatError(f"unknown symbol {sym!r} in class expression")
        acc = acc + symbols[sym] * c
        pos = mt.end()
        first = False
    return acc


# ---------------------------------------------------------------------------
# verdicts

_NAME_KEYS = {"kind", "curve", "side", "justification", "component", "label", "scheme", "note", "reason", "undecided"}


def to_jsonable(x) -> Any:
    if isinstance(x, Verdict):
        return verdict_to_dict(x)
    if isinstance(x, DivisorClass):
        return _vec_out(x.coeffs)
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, (int, Fraction)):
        return rat_str(Fraction(x))
    if isinstance(x, str):
        return x
    if isinstance(x, Mapping):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "status": v.status.value,
        "evidence": to_jsonable(v.evidence),
        "assumptions": list(v.assumptions),
        "reason": v.reason,
    }


_RAT_FULL = re.compile(rf"^{_RAT}$")


def _from_jsonable(x, key: Optional[str] = None):
    if isinstance(x, dict):
        if set(x) == {"status", "evidence", "assumptions", "reason"}:
            return verdict_from_dict(x)
        return {k: _from_jsonable(v, k) for k, v in x.items()}
    if isinstance(x, list):
        return tuple(_from_jsonable(v, key) for v in x)
    if isinstance(x, str) and key not in _NAME_KEYS and _RAT_FULL.match(x):
        return Fraction(x)
    return x


def verdict_from_dict(d: Mapping) -> Verdict:
    return Verdict(
        Status(d["status"]),
        _from_jsonable(d["evidence"]),
        d.get("reason", ""),
        tuple(d.get("assumptions", ())),
    )


def verdict_report(query: Mapping, v: Verdict) -> dict:
    out = verdict_to_dict(v)
    out["query"] = to_jsonable(query)
    return out


def report_from_dict(d: Mapping) -> tuple[dict, Verdict]:
    _check_keys(d, {"query", "status", "evidence", "assumptions", "reason"}, set(), "verdict report")
    return dict(d["query"]), verdict_from_dict(d)
