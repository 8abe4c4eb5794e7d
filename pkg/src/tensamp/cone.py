"""Finitely generated rational polyhedral cones.

Membership, interior and subspace tests go through :func:`tensamp.exact.lp_feasible`
and work in any dimension.  Facet enumeration (:func:`dual_cone`) uses the
double description method and is capped at ambient dimension 12.

Interior means topological interior in the ambient space: a cone that is not
full-dimensional has empty interior.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from .exact import (
    EQ,
    GE,
    GT,
    CapacityError,
    DimensionError,
    RatVec,
    dot,
    is_zero,
    lincomb,
    lp_feasible,
    neg,
    primitive,
    rank,
    scale,
    solve_linear,
    sub,
    unit,
    vec,
    zeros,
)

DUAL_DIM_CAP = 12


@dataclass(frozen=True)
class ConeQ:
    ambient_dim: int
    generators: tuple = ()

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        gens = tuple(vec(g) for g in self.generators)
        for g in gens:
            if len(g) != self.ambient_dim:
                raise DimensionError(f"generator {g} is not of dimension {self.ambient_dim}")
            if is_zero(g):
                raise ValueError("cone generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, generators: Sequence[Sequence], ambient_dim: Optional[int] = None) -> "ConeQ":
        gens = [vec(g) for g in generators]
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient_dim required for the zero cone")
            ambient_dim = len(gens[0])
        return cls(ambient_dim, tuple(gens))

    def is_full_dimensional(self) -> bool:
        if self.ambient_dim == 0:
            return True
        return bool(self.generators) and rank(self.generators) == self.ambient_dim

    def __contains__(self, x) -> bool:
        return cone_contains(self, x).member


@dataclass(frozen=True)
class HalfSpaceQ:
    """``{x : normal . x >= 0}`` (or ``> 0`` when strict)."""

    normal: RatVec
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "normal", vec(self.normal))
        if is_zero(self.normal):
            raise ValueError("half-space normal must be nonzero")

    def contains(self, x: Sequence) -> bool:
        v = dot(self.normal, x)
        return v > 0 if self.strict else v >= 0


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    coefficients: Optional[RatVec] = None
    functional: Optional[RatVec] = None

    def __bool__(self) -> bool:
        return self.member


def _check_dim(c: ConeQ, x: Sequence) -> RatVec:
    x = vec(x)
    if len(x) != c.ambient_dim:
        raise DimensionError(f"point of dimension {len(x)} in a cone of dimension {c.ambient_dim}")
    return x


def verify_membership(c: ConeQ, x: Sequence, result: MembershipResult) -> bool:
    """Re-check a membership answer from its evidence alone."""
    x = vec(x)
    if result.member:
        lam = result.coefficients
        return (
            lam is not None
            and len(lam) == len(c.generators)
            and all(l >= 0 for l in lam)
            and lincomb(lam, c.generators, c.ambient_dim) == x
        )
    f = result.functional
    return (
        f is not None
        and len(f) == c.ambient_dim
        and all(dot(f, g) >= 0 for g in c.generators)
        and dot(f, x) < 0
    )


def cone_contains(c: ConeQ, x: Sequence) -> MembershipResult:
    """Farkas-style membership: coefficients on Yes, separating functional on No."""
    x = _check_dim(c, x)
    m, n = len(c.generators), c.ambient_dim
    if is_zero(x):
        return MembershipResult(True, coefficients=zeros(m))
    if m == 0:
        return MembershipResult(False, functional=primitive(neg(x)))
    rows = [(tuple(g[j] for g in c.generators), EQ, x[j]) for j in range(n)]
    rows += [(unit(m, i), GE, 0) for i in range(m)]
    res = lp_feasible(rows)
    if res.feasible:
        return MembershipResult(True, coefficients=res.point)
    # multipliers w on the equality rows give w.g_i <= 0 and w.x > 0
    w = res.certificate[:n]
    return MembershipResult(False, functional=primitive(neg(w)))


def cone_interior_contains(c: ConeQ, x: Sequence) -> bool:
    """True iff ``c`` is full-dimensional and ``x`` lies in its topological interior."""
    x = _check_dim(c, x)
    return interior_coefficients(c, x) is not None


def interior_coefficients(c: ConeQ, x: Sequence) -> Optional[RatVec]:
    """Strictly positive coefficients writing ``x`` over all generators, if ``x`` is interior.

    For a full-dimensional cone the interior is exactly the set of strictly
    positive combinations of the generators.
    """
    x = _check_dim(c, x)
    n, m = c.ambient_dim, len(c.generators)
    if n == 0:
        return ()
    if not c.is_full_dimensional():
        return None
    rows = [(tuple(g[j] for g in c.generators), EQ, x[j]) for j in range(n)]
    rows += [(unit(m, i), GT, 0) for i in range(m)]
    res = lp_feasible(rows)
    return res.point if res.feasible else None


def boundary_functional(c: ConeQ, x: Sequence) -> Optional[RatVec]:
    """A nonzero functional f >= 0 on ``c`` with f.x <= 0, when ``x`` is not interior.

    Only meaningful for full-dimensional cones; returns ``None`` when ``x`` is
    interior or the cone is not full-dimensional.
    """
    x = _check_dim(c, x)
    if not c.generators or not c.is_full_dimensional():
        return None
    n = c.ambient_dim
    rows = [(g, GE, 0) for g in c.generators]
    rows.append((neg(x), GE, 0))
    total = lincomb([1] * len(c.generators), c.generators, n)
    rows.append((total, EQ, 1))
    res = lp_feasible(rows)
    return primitive(res.point) if res.feasible else None


def subspace_meets_interior(span: Sequence[Sequence], c: ConeQ) -> bool:
    """True iff the linear span of ``span`` contains an interior point of ``c``."""
    vecs = [_check_dim(c, s) for s in span]
    n, m, s = c.ambient_dim, len(c.generators), len(vecs)
    if n == 0:
        return True
    if not c.is_full_dimensional() or s == 0:
        return False
    # sum mu_k s_k - sum lam_i g_i = 0 with lam_i > 0
    rows = []
    for j in range(n):
        rows.append((tuple(v[j] for v in vecs) + tuple(-g[j] for g in c.generators), EQ, 0))
    for i in range(m):
        rows.append((zeros(s) + unit(m, i), GT, 0))
    return lp_feasible(rows).feasible


# ---------------------------------------------------------------------------
# Double description


def cone_from_halfspaces(normals: Sequence[Sequence], ambient_dim: int) -> tuple[list[RatVec], list[RatVec]]:
    """Generators of ``{y : h . y >= 0 for all h}``.

    Returns ``(lineality_basis, extreme_rays)``; every vector is a primitive
    integer vector.  Incremental double description with the combinatorial
    adjacency test.
    """
    if ambient_dim > DUAL_DIM_CAP:
        raise CapacityError(f"facet enumeration is capped at dimension {DUAL_DIM_CAP}")
    hs = [vec(h) for h in normals]
    for h in hs:
        if len(h) != ambient_dim:
            raise DimensionError("normal has wrong dimension")
    lin: list[RatVec] = [unit(ambient_dim, i) for i in range(ambient_dim)]
    rays: list[tuple[RatVec, frozenset]] = []
    seen: list[int] = []
    for idx, h in enumerate(hs):
        if is_zero(h):
            continue
        k = next((i for i, l in enumerate(lin) if dot(h, l) != 0), None)
        if k is not None:
            l0 = lin.pop(k)
            hl0 = dot(h, l0)
            if hl0 < 0:
                l0, hl0 = neg(l0), -hl0
            lin = [sub(l, scale(dot(h, l) / hl0, l0)) for l in lin]
            rays = [(primitive(sub(r, scale(dot(h, r) / hl0, l0))), z | {idx}) for r, z in rays]
            rays.append((primitive(l0), frozenset(seen)))
            seen.append(idx)
            continue
        pos, zer, negs = [], [], []
        for i, (r, z) in enumerate(rays):
            v = dot(h, r)
            if v > 0:
                pos.append((i, r, z, v))
            elif v < 0:
                negs.append((i, r, z, v))
            else:
                zer.append((r, z | {idx}))
        new = [(r, z) for _, r, z, _ in pos] + zer
        for ip, p, zp, vp in pos:
            for iq, q, zq, vq in negs:
                common = zp & zq
                adjacent = True
                for i, (r, z) in enumerate(rays):
                    if i == ip or i == iq:
                        continue
                    if common <= z:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = sub(scale(vp, q), scale(vq, p))
                new.append((primitive(combo), common | {idx}))
        rays = new
        seen.append(idx)
    lin = [primitive(l) for l in lin]
    out_rays = sorted({r for r, _ in rays})
    return lin, out_rays


def dual_cone(c: ConeQ) -> ConeQ:
    """Generators of ``{y : y . g >= 0 for every generator g}``.

    Lineality directions appear as ``+l, -l`` pairs ahead of the extreme rays.
    """
    if c.ambient_dim > DUAL_DIM_CAP:
        raise CapacityError(f"dual cone is capped at ambient dimension {DUAL_DIM_CAP}")
    lin, rays = cone_from_halfspaces(c.generators, c.ambient_dim)
    gens: list[RatVec] = []
    for l in lin:
        gens += [l, neg(l)]
    gens += rays
    return ConeQ(c.ambient_dim, tuple(gens))


def same_cone(a: ConeQ, b: ConeQ) -> bool:
    """Mutual generator containment."""
    return all(cone_contains(b, g).member for g in a.generators) and all(
        cone_contains(a, g).member for g in b.generators
    )


# ---------------------------------------------------------------------------
# Plane slices


def _cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _angle_cmp(u, v) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    cr = _cross(u, v)
    return -1 if cr > 0 else (1 if cr < 0 else 0)


def order_ccw(rays: Sequence[Sequence]) -> list[RatVec]:
    """Counterclockwise order for a 2D ray set.

    A pointed cone starts from the ray having every other ray on its left;
    otherwise rays are sorted by angle from the positive first axis.
    """
    rs = [vec(r) for r in rays]
    for start in rs:
        if all(_cross(start, r) >= 0 for r in rs) and all(
            not (_cross(start, r) == 0 and dot(start, r) < 0) for r in rs
        ):
            rest = sorted((r for r in rs if r is not start), key=cmp_to_key(lambda a, b: -1 if _cross(a, b) > 0 else (1 if _cross(a, b) < 0 else 0)))
            return [start] + rest
    return sorted(rs, key=cmp_to_key(_angle_cmp))


def plane_coordinates(x: Sequence, plane: Sequence[Sequence]) -> Optional[RatVec]:
    b1, b2 = vec(plane[0]), vec(plane[1])
    cols = [(p, q) for p, q in zip(b1, b2)]
    return solve_linear(cols, vec(x))


def slice2d(c: ConeQ, plane: Sequence[Sequence]) -> list[RatVec]:
    """Extremal rays of a cone lying in a plane, in plane coordinates, counterclockwise."""
    if len(plane) != 2:
        raise ValueError("a plane is given by exactly two vectors")
    b1, b2 = vec(plane[0]), vec(plane[1])
    if len(b1) != c.ambient_dim or len(b2) != c.ambient_dim:
        raise DimensionError("plane vectors have wrong dimension")
    if rank([b1, b2]) != 2:
        raise ValueError("plane vectors must be independent")
    coords: list[RatVec] = []
    for g in c.generators:
        uv = plane_coordinates(g, (b1, b2))
        if uv is None:
            raise ValueError(f"generator {g} is outside the plane")
        p = primitive(uv)
        if p not in coords:
            coords.append(p)
    kept = list(coords)
    for r in coords:
        others = [s for s in kept if s != r]
        if others and cone_contains(ConeQ(2, tuple(others)), r).member:
            kept = others
    return order_ccw(kept)
