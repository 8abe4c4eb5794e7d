"""Verdicts for reducible schemes and stratification certificates.

A line bundle is tensor-ample on a scheme exactly when it is tensor-ample on
every irreducible component, so a :class:`SchemeModel` is a list of component
models each carrying its restricted class.  Quasi-affineness of section
complements cannot be decided from numerical data; stratification
certificates record it as user-supplied assertions and only their shape is
checked here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .builders import CurveModel, curve_tensor_ample
from .surface import DivisorClass, Status, SurfaceModel, Verdict, is_tensor_ample


@dataclass(frozen=True)
class PointComponent:
    name: str = "pt"

    def verdict(self) -> Verdict:
        return Verdict(Status.YES, {"kind": "point"})


@dataclass(frozen=True)
class CurveComponent:
    model: CurveModel
    degrees: Optional[tuple] = None
    name: str = "curve"

    def verdict(self) -> Verdict:
        return curve_tensor_ample(self.model, self.degrees)


@dataclass(frozen=True)
class SurfaceComponent:
    model: SurfaceModel
    cls: DivisorClass
    name: str = "surface"

    def verdict(self) -> Verdict:
        return is_tensor_ample(self.model, self.cls)


Component = Union[PointComponent, CurveComponent, SurfaceComponent]


@dataclass(frozen=True)
class SchemeModel:
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a scheme model needs at least one component")


def scheme_tensor_ample(s: SchemeModel) -> Verdict:
    """Combine component verdicts: the first No wins, then any Unknown, else Yes."""
    verdicts = [c.verdict() for c in s.components]
    for i, (c, v) in enumerate(zip(s.components, verdicts)):
        if v.no:
            return Verdict(
                Status.NO,
                {"kind": "component_fails", "component": c.name, "index": i, "verdict": v},
                assumptions=v.assumptions,
            )
    if any(v.unknown for v in verdicts):
        bad = [c.name for c, v in zip(s.components, verdicts) if v.unknown]
        return Verdict(Status.UNKNOWN, {"undecided": bad}, "undecided components: " + ", ".join(bad))
    assumptions = tuple(dict.fromkeys(a for v in verdicts for a in v.assumptions))
    return Verdict(
        Status.YES,
        {"kind": "all_components", "components": {c.name: v for c, v in zip(s.components, verdicts)}},
        assumptions=assumptions,
    )


# ---------------------------------------------------------------------------
# Stratification certificates


@dataclass(frozen=True)
class Stratum:
    """One step of a chain: the nonvanishing locus of a section power, asserted quasi-affine."""

    section_power: int
    open_locus_quasi_affine: Optional[bool]
    label: str = ""


@dataclass(frozen=True)
class StratCertificate:
    strata: tuple
    terminal: Optional[Verdict] = None  # None: the last residual is empty
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))


def validate_strat_certificate(c: StratCertificate) -> Verdict:
    """Check the chain shape and propagate the asserted facts into a verdict.

    Raises ValueError for malformed chains.  A missing or false assertion makes
    the verdict Unknown: the chain then proves nothing, but nothing is refuted
    either.
    """
    if not isinstance(c.strata, tuple):
        raise ValueError("strata must be a list")
    for i, s in enumerate(c.strata):
        if not isinstance(s, Stratum):
            raise ValueError(f"stratum {i} is not a stratum")
        if not isinstance(s.section_power, int) or isinstance(s.section_power, bool):
            raise ValueError(f"stratum {i}: section power must be an integer")
        if s.open_locus_quasi_affine not in (True, False, None):
            raise ValueError(f"stratum {i}: assertion must be true, false or absent")
    if c.terminal is not None and not isinstance(c.terminal, Verdict):
        raise ValueError("terminal must be a verdict or empty")
    if not c.strata and c.terminal is None:
        raise ValueError("empty chain")
    assertions = [
        {"index": i, "label": s.label, "section_power": s.section_power, "quasi_affine": s.open_locus_quasi_affine}
        for i, s in enumerate(c.strata)
    ]
    ev = {"kind": "stratification", "assertions": assertions, "terminal": c.terminal}
    missing = [a["index"] for a in assertions if a["quasi_affine"] is not True]
    if c.terminal is not None and c.terminal.no:
        return Verdict(Status.NO, {**ev, "kind": "terminal_fails"}, assumptions=("user_assertions",))
    if missing:
        return Verdict(Status.UNKNOWN, ev, "strata without a quasi-affine assertion: " + ", ".join(map(str, missing)))
    if c.terminal is not None and c.terminal.unknown:
        return Verdict(Status.UNKNOWN, ev, "terminal stratum undecided")
    return Verdict(Status.YES, ev, assumptions=("user_assertions",))


def de_jong_certificate() -> StratCertificate:
    """Blow-up of the affine plane at the origin with the origin of the exceptional line removed.

    Inverting x gives Spec k[x^{+-1}, y]; on the rest inverting y gives an affine
    chart; what is left is an affine line.
    """
    return StratCertificate(
        (Stratum(1, True, "x"), Stratum(1, True, "y")),
        Verdict(Status.YES, {"kind": "affine", "scheme": "A1"}),
        name="de Jong example",
    )


def doubled_origin_certificate(n: int) -> StratCertificate:
    """Affine n-space with a doubled origin: invert the coordinate functions one at a time."""
    if n < 1:
        raise ValueError("n must be positive")
    strata = tuple(Stratum(1, True, f"T{i}") for i in range(1, n + 1))
    return StratCertificate(
        strata,
        Verdict(Status.YES, {"kind": "affine", "scheme": "two points"}),
        name=f"A{n} with doubled origin",
    )
