"""Intersection lattices, surface models and positivity verdicts.

A :class:`SurfaceModel` is a finite description of a smooth proper surface: a
rational lattice of numerical divisor classes with its intersection form, the
canonical class, a catalog of integral curves and flags saying how much of the
surface the catalog is known to capture.

Every classifier returns a three-valued :class:`Verdict`.  ``No`` answers only
ever rely on an explicit witness (a curve, a separating functional, ...) and
stay valid when completeness flags are relaxed.  ``Yes`` answers list the
model assumptions they used.  :func:`verify_verdict` re-checks any verdict
from its evidence alone.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import exact
from .cone import (
    ConeQ,
    HalfSpaceQ,
    boundary_functional,
    cone_contains,
    interior_coefficients,
)
from .exact import EQ, GE, GT, CapacityError, DimensionError, RatVec, lp_feasible, lp_optimize, rat, vec


class Status(str, Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    status: Status
    evidence: Mapping = field(default_factory=dict)
    reason: str = ""
    assumptions: tuple = ()

    @property
    def yes(self) -> bool:
        return self.status is Status.YES

    @property
    def no(self) -> bool:
        return self.status is Status.NO

    @property
    def unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    @property
    def witness(self) -> Optional[str]:
        """Name of the witness curve, when the evidence has one."""
        return self.evidence.get("curve") if isinstance(self.evidence, Mapping) else None


def _yes(evidence, assumptions=(), reason="") -> Verdict:
    return Verdict(Status.YES, evidence, reason, tuple(dict.fromkeys(assumptions)))


def _no(evidence, assumptions=(), reason="") -> Verdict:
    return Verdict(Status.NO, evidence, reason, tuple(dict.fromkeys(assumptions)))


def _unknown(reason: str, evidence=None) -> Verdict:
    return Verdict(Status.UNKNOWN, evidence or {}, reason, ())


class MissingDataError(CapacityError):
    """The model lacks data (cone generators, completeness) an operation needs."""


# ---------------------------------------------------------------------------
# Lattice and classes


@dataclass(frozen=True)
class DivisorClass:
    coeffs: RatVec

    def __post_init__(self):
        object.__setattr__(self, "coeffs", vec(self.coeffs))

    @classmethod
    def of(cls, *xs) -> "DivisorClass":
        return cls(xs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(exact.add(self.coeffs, _coeffs(other)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(exact.sub(self.coeffs, _coeffs(other)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(exact.neg(self.coeffs))

    def __mul__(self, c) -> "DivisorClass":
        return DivisorClass(exact.scale(c, self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return exact.is_zero(self.coeffs)

    def __repr__(self) -> str:
        return "DivisorClass(" + ", ".join(str(c) for c in self.coeffs) + ")"


def _coeffs(x) -> RatVec:
    return x.coeffs if isinstance(x, DivisorClass) else vec(x)


@dataclass(frozen=True)
class IntersectionLattice:
    rank: int
    gram: tuple
    basis_names: tuple = ()
    hodge_index: bool = False

    def __post_init__(self):
        g = exact.mat(self.gram)
        if len(g) != self.rank or any(len(r) != self.rank for r in g):
            raise DimensionError(f"Gram matrix must be {self.rank}x{self.rank}")
        if not exact.is_symmetric(g):
            raise ValueError("Gram matrix must be symmetric")
        names = tuple(self.basis_names) or tuple(f"e{i}" for i in range(self.rank))
        if len(names) != self.rank:
            raise DimensionError("one basis name per lattice generator")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "basis_names", names)
        if self.hodge_index:
            pos, negc, zero = exact.signature(g)
            if (pos, negc, zero) != (1, self.rank - 1, 0):
                raise ValueError(f"intersection form has signature {(pos, negc, zero)}, not (1, {self.rank - 1})")

    def pair(self, d, e) -> Fraction:
        d, e = _coeffs(d), _coeffs(e)
        if len(d) != self.rank or len(e) != self.rank:
            raise DimensionError("class does not belong to this lattice")
        return exact.bilinear(d, self.gram, e)

    def dual_vector(self, c) -> RatVec:
        """The functional D -> D.c as a coefficient vector."""
        return exact.matvec(self.gram, _coeffs(c))


def pair(lat: IntersectionLattice, d, e) -> Fraction:
    """Intersection number ``d . e``."""
    return lat.pair(d, e)


@dataclass(frozen=True)
class CurveEntry:
    name: str
    cls: DivisorClass

    def __post_init__(self):
        if not isinstance(self.cls, DivisorClass):
            object.__setattr__(self, "cls", DivisorClass(self.cls))
        if self.cls.is_zero():
            raise ValueError(f"curve {self.name!r} has the zero class")


@dataclass(frozen=True)
class SurfaceModel:
    lattice: IntersectionLattice
    canonical: DivisorClass
    curves: tuple = ()
    neg_curves_complete: bool = False
    curve_cone_generated: bool = False
    ample_witness: Optional[DivisorClass] = None
    pseff_gens: Optional[tuple] = None
    nef_gens: Optional[tuple] = None
    proper_positive_dim: bool = True
    name: str = ""

    def __post_init__(self):
        n = self.lattice.rank
        object.__setattr__(self, "canonical", _as_class(self.canonical, n))
        curves = tuple(c if isinstance(c, CurveEntry) else CurveEntry(*c) for c in self.curves)
        for c in curves:
            _as_class(c.cls, n)
        names = [c.name for c in curves]
        if len(set(names)) != len(names):
            raise ValueError("curve names must be unique")
        object.__setattr__(self, "curves", curves)
        if self.ample_witness is not None:
            object.__setattr__(self, "ample_witness", _as_class(self.ample_witness, n))
        for attr in ("pseff_gens", "nef_gens"):
            gens = getattr(self, attr)
            if gens is not None:
                object.__setattr__(self, attr, tuple(_as_class(g, n) for g in gens))
        self._validate()

    @functools.cached_property
    def curve_gram(self) -> tuple:
        """Pairings C_i.C_j over the catalog."""
        return tuple(tuple(self.pair(a.cls, b.cls) for b in self.curves) for a in self.curves)

    def _validate(self) -> None:
        if self.pseff_gens is not None:
            cone = self.pseff_cone()
            for c in self.curves:
                if not cone_contains(cone, c.cls.coeffs).member:
                    raise ValueError(f"curve {c.name!r} is not in the declared pseudo-effective cone")
        a = self.ample_witness
        if a is not None:
            if self.pair(a, a) <= 0:
                raise ValueError("declared ample class has nonpositive self-intersection")
            for c in self.curves:
                if self.pair(a, c.cls) <= 0:
                    raise ValueError(f"declared ample class pairs nonpositively with {c.name!r}")
            if self.pseff_gens is not None and interior_coefficients(self.pseff_cone(), a.coeffs) is None:
                raise ValueError("declared ample class is not interior to the pseudo-effective cone")

    # convenience -----------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def pair(self, d, e) -> Fraction:
        return self.lattice.pair(d, e)

    def curve(self, name: str) -> CurveEntry:
        for c in self.curves:
            if c.name == name:
                return c
        raise KeyError(name)

    def negative_curves(self) -> list[CurveEntry]:
        return [c for c in self.curves if self.pair(c.cls, c.cls) < 0]

    def pseff_cone(self) -> ConeQ:
        if self.pseff_gens is None:
            raise MissingDataError("model has no pseudo-effective cone generators")
        return ConeQ(self.rank, tuple(g.coeffs for g in self.pseff_gens))

    def nef_cone(self) -> ConeQ:
        if self.nef_gens is None:
            raise MissingDataError("model has no nef cone generators")
        return ConeQ(self.rank, tuple(g.coeffs for g in self.nef_gens))

    def with_curve(self, name: str, cls) -> "SurfaceModel":
        """Copy of the model with one more catalog curve."""
        return dataclasses.replace(self, curves=self.curves + (CurveEntry(name, _as_class(cls, self.rank)),))

    def relaxed(self, **flags) -> "SurfaceModel":
        return dataclasses.replace(self, **flags)

    def cls(self, *coeffs) -> DivisorClass:
        return _as_class(coeffs, self.rank)


def _as_class(x, n: int) -> DivisorClass:
    d = x if isinstance(x, DivisorClass) else DivisorClass(x)
    if len(d) != n:
        raise DimensionError(f"class has {len(d)} coefficients, lattice rank is {n}")
    return d


def arithmetic_genus(m: SurfaceModel, c) -> Fraction:
    """Adjunction: ``(K.C + C^2)/2 + 1``."""
    c = _as_class(c, m.rank)
    return (m.pair(m.canonical, c) + m.pair(c, c)) / 2 + 1


def is_minus_two_curve(m: SurfaceModel, c) -> bool:
    c = _as_class(c, m.rank)
    return m.pair(c, c) == -2 and m.pair(m.canonical, c) == 0


# ---------------------------------------------------------------------------
# Nef


def is_nef(m: SurfaceModel, d) -> Verdict:
    d = _as_class(d, m.rank)
    for c in m.curves:
        v = m.pair(d, c.cls)
        if v < 0:
            return _no({"kind": "negative_curve_pairing", "curve": c.name, "pairing": v})
    if m.curve_cone_generated:
        pairings = {c.name: m.pair(d, c.cls) for c in m.curves}
        return _yes({"kind": "catalog_pairings", "pairings": pairings}, ["curve_cone_generated"])
    if m.nef_gens is not None:
        res = cone_contains(m.nef_cone(), d.coeffs)
        if res.member:
            return _yes({"kind": "nef_cone_membership", "coefficients": res.coefficients}, ["nef_gens"])
        return _no({"kind": "nef_cone_separation", "functional": res.functional}, ["nef_gens"])
    return _unknown("all catalog pairings are nonnegative but the catalog is not known to generate the curve cone")


# ---------------------------------------------------------------------------
# Zariski decomposition


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: DivisorClass
    negative: Mapping  # curve name -> coefficient > 0

    def negative_class(self, m: SurfaceModel) -> DivisorClass:
        acc = DivisorClass(exact.zeros(m.rank))
        for name, c in self.negative.items():
            acc = acc + m.curve(name).cls * c
        return acc


def zariski_decompose(m: SurfaceModel, d) -> Optional[ZariskiDecomposition]:
    """Iterative support enlargement over the catalog's negative curves.

    Returns ``None`` when the class is not (nef on the catalog) plus (effective
    over the catalog), e.g. when a negative-definite support cannot be found or
    the positive part still pairs negatively with some catalog curve.  The
    result is the true Zariski decomposition when the negative curve list is
    complete and the catalog generates the curve cone.
    """
    d = _as_class(d, m.rank)
    negs = m.negative_curves()
    support: list[CurveEntry] = [c for c in negs if m.pair(d, c.cls) < 0]
    coeffs: dict[str, Fraction] = {}
    p = d
    while True:
        if support:
            gram = [[m.pair(a.cls, b.cls) for b in support] for a in support]
            if not exact.is_negative_definite(gram):
                return None
            rhs = [m.pair(d, c.cls) for c in support]
            x = exact.solve_linear(gram, rhs)
            if x is None or any(xi < 0 for xi in x):
                return None
            coeffs = {c.name: xi for c, xi in zip(support, x)}
            p = d
            for c, xi in zip(support, x):
                p = p - c.cls * xi
        new = [c for c in negs if c not in support and m.pair(p, c.cls) < 0]
        if not new:
            break
        support = [c for c in negs if c in support or c in new]
    if any(m.pair(p, c.cls) < 0 for c in m.curves):
        return None
    return ZariskiDecomposition(p, {k: v for k, v in coeffs.items() if v != 0})


# ---------------------------------------------------------------------------
# Big / anti-big


def _decomposition_certificate(m: SurfaceModel, d: DivisorClass) -> Optional[Verdict]:
    """Search D = N + F with F >= 0 over the catalog, N.C >= 0 on the catalog and N^2 > 0.

    N is certified big either because the catalog generates the curve cone
    (so N is nef) or because N.A > 0 for the declared ample class A.
    """
    if not (m.curve_cone_generated or m.ample_witness is not None):
        return None
    k = len(m.curves)
    if k == 0:
        coeffs: RatVec = ()
    else:
        rows = []
        for j, cj in enumerate(m.curves):
            # (D - sum c_i C_i).C_j >= 0
            row = tuple(-m.curve_gram[i][j] for i in range(k))
            rows.append((row, GE, -m.pair(d, cj.cls)))
        status, x = lp_optimize(rows, [1] * k, nonneg=[True] * k, minimize=True)
        if status != "optimal":
            return None
        coeffs = x
    n = d
    for c, xi in zip(m.curves, coeffs):
        n = n - c.cls * xi
    n2 = m.pair(n, n)
    if n2 <= 0:
        return None
    f = {c.name: xi for c, xi in zip(m.curves, coeffs) if xi != 0}
    ev = {"kind": "decomposition", "N": n.coeffs, "F": f, "N_squared": n2}
    if m.curve_cone_generated:
        ev["justification"] = "nef_catalog"
        return _yes(ev, ["curve_cone_generated"])
    na = m.pair(n, m.ample_witness)
    if na > 0:
        ev["justification"] = "ample_witness"
        ev["N_dot_A"] = na
        return _yes(ev, ["ample_witness"])
    return None


def is_big(m: SurfaceModel, d) -> Verdict:
    """Bigness with a fixed route order: pseff interior, decomposition, signature, Zariski."""
    d = _as_class(d, m.rank)
    if d.is_zero() and m.proper_positive_dim:
        return _no({"kind": "zero_class"}, ["proper_positive_dim"])
    for c in m.curves:
        # a curve with C^2 >= 0 is nef, and big classes pair positively with nonzero nef classes
        if m.pair(c.cls, c.cls) >= 0 and m.pair(d, c.cls) <= 0:
            return _no({"kind": "nef_curve_pairing", "curve": c.name, "pairing": m.pair(d, c.cls)})
    if m.pseff_gens is not None:
        cone = m.pseff_cone()
        if not cone.is_full_dimensional():
            return _no({"kind": "pseff_not_full_dimensional"}, ["pseff_gens"])
        lam = interior_coefficients(cone, d.coeffs)
        if lam is not None:
            return _yes({"kind": "pseff_interior", "coefficients": lam}, ["pseff_gens"])
        f = boundary_functional(cone, d.coeffs)
        return _no({"kind": "pseff_boundary", "functional": f}, ["pseff_gens"])
    cert = _decomposition_certificate(m, d)
    if cert is not None:
        return cert
    a = m.ample_witness
    if a is not None:
        d2, da = m.pair(d, d), m.pair(d, a)
        if d2 > 0 and da > 0:
            return _yes({"kind": "signature", "D_squared": d2, "D_dot_A": da}, ["ample_witness"])
        if da <= 0:
            return _no({"kind": "ample_pairing_nonpositive", "D_dot_A": da}, ["ample_witness"])
    z = zariski_decompose(m, d)
    if z is not None:
        p = z.positive
        p2 = m.pair(p, p)
        ev = {"kind": "zariski", "P": p.coeffs, "N": dict(z.negative), "P_squared": p2}
        if p2 > 0:
            if m.curve_cone_generated:
                return _yes({**ev, "justification": "nef_catalog"}, ["curve_cone_generated"])
            if a is not None and m.pair(p, a) > 0:
                return _yes({**ev, "justification": "ample_witness", "P_dot_A": m.pair(p, a)}, ["ample_witness"])
        elif m.curve_cone_generated:
            return _no({**ev, "kind": "zariski_nonpositive"}, ["curve_cone_generated"])
    return _unknown("no bigness route applies: supply pseudo-effective generators, an ample class or a complete catalog")


def is_anti_big(m: SurfaceModel, d) -> Verdict:
    """``is_big`` of the negated class; evidence refers to ``-D``."""
    d = _as_class(d, m.rank)
    return is_big(m, -d)


# ---------------------------------------------------------------------------
# Ample / tensor-ample


def is_ample(m: SurfaceModel, d) -> Verdict:
    d = _as_class(d, m.rank)
    for c in m.curves:
        v = m.pair(d, c.cls)
        if v <= 0:
            return _no({"kind": "nonpositive_curve_pairing", "curve": c.name, "pairing": v})
    big = is_big(m, d)
    if big.no:
        return _no({"kind": "not_big", "big": big}, big.assumptions)
    if big.yes and m.neg_curves_complete:
        pairings = {c.name: m.pair(d, c.cls) for c in m.negative_curves()}
        return _yes(
            {"kind": "big_and_positive", "big": big, "pairings": pairings},
            list(big.assumptions) + ["neg_curves_complete"],
        )
    if big.unknown:
        return _unknown("bigness undecided: " + big.reason)
    return _unknown("negative curve list not known to be complete")


def is_tensor_ample(m: SurfaceModel, d) -> Verdict:
    d = _as_class(d, m.rank)
    for c in m.curves:
        if m.pair(d, c.cls) == 0:
            return _no({"kind": "zero_curve_pairing", "curve": c.name, "pairing": Fraction(0)})
    big = is_big(m, d)
    anti = is_anti_big(m, d)
    if big.no and anti.no:
        return _no({"kind": "neither_big_nor_antibig", "big": big, "antibig": anti}, big.assumptions + anti.assumptions)
    side, sv = ("big", big) if big.yes else (("antibig", anti) if anti.yes else (None, None))
    if sv is not None and m.neg_curves_complete:
        pairings = {c.name: m.pair(d, c.cls) for c in m.negative_curves()}
        return _yes(
            {"kind": "nonzero_on_negative_curves", "side": side, side: sv, "pairings": pairings},
            list(sv.assumptions) + ["neg_curves_complete"],
        )
    if sv is None:
        return _unknown("neither bigness nor anti-bigness could be decided")
    return _unknown("negative curve list not known to be complete")


def is_anti_ample(m: SurfaceModel, d) -> Verdict:
    d = _as_class(d, m.rank)
    return is_ample(m, -d)


# ---------------------------------------------------------------------------
# Canonical class


@dataclass(frozen=True)
class CanonicalReport:
    big: Verdict
    anti_big: Verdict
    minus_two_curves: tuple
    tensor_ample: Verdict


def canonical_report(m: SurfaceModel) -> CanonicalReport:
    k = m.canonical
    big, anti, tens = is_big(m, k), is_anti_big(m, k), is_tensor_ample(m, k)
    minus_two = tuple(c.name for c in m.curves if is_minus_two_curve(m, c.cls))
    if tens.yes and minus_two:
        # a (-2)-curve has K.C = 0 and must already have produced a No
        raise AssertionError(f"inconsistent model: K tensor-ample but (-2)-curves {minus_two} present")
    return CanonicalReport(big, anti, minus_two, tens)


# ---------------------------------------------------------------------------
# Cone pieces


@dataclass(frozen=True)
class ConePiece:
    signs: tuple  # '+' / '-' per negative curve
    witness: DivisorClass
    is_amp: bool


@dataclass(frozen=True)
class TensorAmpleConePieces:
    big: ConeQ  # Big is the interior of this cone
    hyperplanes: tuple  # (curve name, HalfSpaceQ of classes pairing >= 0)
    pieces: tuple


MAX_PIECE_CURVES = 16


def tensor_ample_cone_pieces(m: SurfaceModel) -> TensorAmpleConePieces:
    """Split Big minus the hyperplanes orthogonal to negative curves into sign pieces.

    Each piece is an open convex cone recorded by its sign vector and a rational
    witness point; the all-plus piece is the ample cone.
    """
    if m.pseff_gens is None:
        raise MissingDataError("tensor-ample cone pieces need pseudo-effective generators")
    if not m.neg_curves_complete:
        raise MissingDataError("tensor-ample cone pieces need a complete negative curve list")
    cone = m.pseff_cone()
    negs = m.negative_curves()
    if len(negs) > MAX_PIECE_CURVES:
        raise CapacityError(f"more than {MAX_PIECE_CURVES} negative curves")
    hyper = tuple((c.name, HalfSpaceQ(m.lattice.dual_vector(c.cls))) for c in negs)
    gens = cone.generators
    k, n = len(gens), m.rank
    pieces = []
    if not cone.is_full_dimensional():
        return TensorAmpleConePieces(cone, hyper, ())
    for signs in itertools.product("+-", repeat=len(negs)):
        rows = [(exact.unit(k, i), GT, 0) for i in range(k)]
        for s, c in zip(signs, negs):
            row = tuple(m.pair(g, c.cls) for g in gens)
            if s == "-":
                row = exact.neg(row)
            rows.append((row, GT, 0))
        res = lp_feasible(rows)
        if res.feasible:
            w = DivisorClass(exact.lincomb(res.point, gens, n))
            pieces.append(ConePiece(tuple(signs), w, all(s == "+" for s in signs)))
    return TensorAmpleConePieces(cone, hyper, tuple(pieces))


# ---------------------------------------------------------------------------
# Subgroups


def group_tensor_ample(m: SurfaceModel, gens: Sequence) -> Verdict:
    """Whether the subgroup generated by ``gens`` has, on every integral subvariety, a big member."""
    gs = [_as_class(g, m.rank) for g in gens]
    a = m.ample_witness
    if a is not None and gs:
        cols = [[g[j] for g in gs] for j in range(m.rank)]
        mu = exact.solve_linear(cols, a.coeffs)
        if mu is not None:
            return _yes({"kind": "span_contains_ample", "coefficients": mu}, ["ample_witness"])
    for c in m.curves:
        if all(m.pair(g, c.cls) == 0 for g in gs):
            return _no({"kind": "orthogonal_curve", "curve": c.name})
    assumptions: list[str] = []
    if m.pseff_gens is not None:
        point = _span_interior_point(gs, m.pseff_cone())
        if point is None:
            return _no({"kind": "span_misses_big"}, ["pseff_gens"])
        big_ev = {"kind": "span_point_in_big", "coefficients": point[0], "class": point[1]}
        assumptions.append("pseff_gens")
    else:
        big_ev = None
        for i, g in enumerate(gs):
            for sign in (1, -1):
                v = is_big(m, g * sign)
                if v.yes:
                    big_ev = {"kind": "generator_big", "index": i, "sign": sign, "big": v}
                    assumptions += list(v.assumptions)
                    break
            if big_ev:
                break
        if big_ev is None:
            return _unknown("no element of the subgroup is certified big")
    if not m.neg_curves_complete:
        return _unknown("negative curve list not known to be complete", {"big_member": big_ev})
    pairings = {c.name: [m.pair(g, c.cls) for g in gs] for c in m.negative_curves()}
    return _yes(
        {"kind": "group_criterion", "big_member": big_ev, "pairings": pairings},
        assumptions + ["neg_curves_complete"],
    )


def _span_interior_point(gs: Sequence[DivisorClass], cone: ConeQ):
    n, k, s = cone.ambient_dim, len(cone.generators), len(gs)
    if not gs or not cone.is_full_dimensional():
        return None
    rows = []
    for j in range(n):
        rows.append((tuple(g[j] for g in gs) + tuple(-c[j] for c in cone.generators), EQ, 0))
    for i in range(k):
        rows.append((exact.zeros(s) + exact.unit(k, i), GT, 0))
    res = lp_feasible(rows)
    if not res.feasible:
        return None
    mu = res.point[:s]
    return mu, exact.lincomb(mu, [g.coeffs for g in gs], n)


# ---------------------------------------------------------------------------
# Verification


PROPERTIES = ("nef", "ample", "big", "antibig", "tensample")


def classify(m: SurfaceModel, d, prop: str) -> Verdict:
    fn = {
        "nef": is_nef,
        "ample": is_ample,
        "big": is_big,
        "antibig": is_anti_big,
        "tensample": is_tensor_ample,
    }.get(prop)
    if fn is None:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    return fn(m, d)


def verify_verdict(m: SurfaceModel, d, prop: str, v: Verdict) -> bool:
    """Re-check a verdict's evidence against the model without rerunning the classifier.

    ``Unknown`` verdicts carry no claim and always pass.
    """
    d = _as_class(d, m.rank)
    if v.unknown:
        return True
    if prop == "big":
        return _verify_big(m, d, v)
    if prop == "antibig":
        return _verify_big(m, -d, v)
    if prop == "nef":
        return _verify_nef(m, d, v)
    if prop == "ample":
        return _verify_ample(m, d, v)
    if prop == "tensample":
        return _verify_tensample(m, d, v)
    raise ValueError(f"unknown property {prop!r}")


def _curve_pairing_ok(m, d, ev, pred) -> bool:
    try:
        c = m.curve(ev["curve"])
    except KeyError:
        return False
    return pred(m.pair(d, c.cls))


def _curve_nonneg_square(m, name) -> bool:
    c = m.curve(name).cls
    return m.pair(c, c) >= 0


def _verify_nef(m, d, v) -> bool:
    ev = v.evidence
    kind = ev.get("kind")
    if v.no and kind == "negative_curve_pairing":
        return _curve_pairing_ok(m, d, ev, lambda x: x < 0)
    if v.yes and kind == "catalog_pairings":
        return m.curve_cone_generated and all(m.pair(d, c.cls) >= 0 for c in m.curves)
    if kind in ("nef_cone_membership", "nef_cone_separation") and m.nef_gens is not None:
        from .cone import MembershipResult, verify_membership

        res = MembershipResult(v.yes, ev.get("coefficients"), ev.get("functional"))
        return verify_membership(m.nef_cone(), d.coeffs, res)
    return False


def _sum_with_curves(m, base: Sequence, parts: Mapping) -> Optional[RatVec]:
    acc = vec(base)
    for name, c in parts.items():
        if c < 0:
            return None
        try:
            acc = exact.add(acc, exact.scale(c, m.curve(name).cls.coeffs))
        except KeyError:
            return None
    return acc


def _positive_part_justified(m, p, ev) -> bool:
    j = ev.get("justification")
    if j == "nef_catalog":
        return m.curve_cone_generated and all(m.pair(p, c.cls) >= 0 for c in m.curves)
    if j == "ample_witness":
        return m.ample_witness is not None and m.pair(p, m.ample_witness) > 0
    return False


def _verify_big(m, d, v) -> bool:
    ev = v.evidence
    kind = ev.get("kind")
    if kind == "zero_class":
        return v.no and d.is_zero() and m.proper_positive_dim
    if kind in ("pseff_interior", "pseff_boundary", "pseff_not_full_dimensional"):
        if m.pseff_gens is None:
            return False
        cone = m.pseff_cone()
        if kind == "pseff_not_full_dimensional":
            return v.no and not cone.is_full_dimensional()
        if kind == "pseff_interior":
            lam = vec(ev["coefficients"])
            return (
                v.yes
                and cone.is_full_dimensional()
                and len(lam) == len(cone.generators)
                and all(x > 0 for x in lam)
                and exact.lincomb(lam, cone.generators, m.rank) == d.coeffs
            )
        f = vec(ev["functional"] or ())
        return (
            v.no
            and len(f) == m.rank
            and not exact.is_zero(f)
            and all(exact.dot(f, g) >= 0 for g in cone.generators)
            and exact.dot(f, d.coeffs) <= 0
        )
    if kind == "decomposition":
        n = DivisorClass(ev["N"])
        total = _sum_with_curves(m, n.coeffs, ev["F"])
        return v.yes and total == d.coeffs and m.pair(n, n) > 0 and _positive_part_justified(m, n, ev)
    if kind == "nef_curve_pairing":
        return v.no and _curve_pairing_ok(m, d, ev, lambda x: x <= 0) and _curve_nonneg_square(m, ev["curve"])
    if kind == "signature":
        a = m.ample_witness
        return v.yes and a is not None and m.pair(d, d) > 0 and m.pair(d, a) > 0
    if kind == "ample_pairing_nonpositive":
        a = m.ample_witness
        return v.no and a is not None and not d.is_zero() and m.pair(d, a) <= 0
    if kind in ("zariski", "zariski_nonpositive"):
        p = DivisorClass(ev["P"])
        total = _sum_with_curves(m, p.coeffs, ev["N"])
        if total != d.coeffs:
            return False
        p2 = m.pair(p, p)
        if kind == "zariski":
            return v.yes and p2 > 0 and _positive_part_justified(m, p, ev)
        support = [m.curve(name).cls for name in ev["N"]]
        gram = [[m.pair(a, b) for b in support] for a in support]
        return (
            v.no
            and p2 <= 0
            and m.curve_cone_generated
            and all(m.pair(p, c.cls) >= 0 for c in m.curves)
            and all(m.pair(p, s) == 0 for s in support)
            and (not support or exact.is_negative_definite(gram))
        )
    return False


def _verify_ample(m, d, v) -> bool:
    ev = v.evidence
    kind = ev.get("kind")
    if v.no and kind == "nonpositive_curve_pairing":
        return _curve_pairing_ok(m, d, ev, lambda x: x <= 0)
    if v.no and kind == "not_big":
        sub = ev["big"]
        return sub.no and _verify_big(m, d, sub)
    if v.yes and kind == "big_and_positive":
        sub = ev["big"]
        return (
            sub.yes
            and _verify_big(m, d, sub)
            and m.neg_curves_complete
            and all(m.pair(d, c.cls) > 0 for c in m.curves)
        )
    return False


def _verify_tensample(m, d, v) -> bool:
    ev = v.evidence
    kind = ev.get("kind")
    if v.no and kind == "zero_curve_pairing":
        return _curve_pairing_ok(m, d, ev, lambda x: x == 0)
    if v.no and kind == "neither_big_nor_antibig":
        b, a = ev["big"], ev["antibig"]
        return b.no and a.no and _verify_big(m, d, b) and _verify_big(m, -d, a)
    if v.yes and kind == "nonzero_on_negative_curves":
        side = ev.get("side")
        sub = ev.get(side)
        if sub is None or not sub.yes:
            return False
        target = d if side == "big" else -d
        return (
            _verify_big(m, target, sub)
            and m.neg_curves_complete
            and all(m.pair(d, c.cls) != 0 for c in m.curves)
        )
    return False
