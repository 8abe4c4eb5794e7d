"""Two-dimensional slices of the tensor-ample cone pieces, as CSV rows and SVG.

The geometry is exact; floats appear only when placing SVG coordinates.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import exact
from .cone import cone_from_halfspaces, dual_cone, order_ccw, plane_coordinates
from .exact import RatVec
from .surface import DivisorClass, SurfaceModel, tensor_ample_cone_pieces


@dataclass(frozen=True)
class SlicePiece:
    piece_id: int
    label: str
    signs: tuple
    rays: tuple  # two plane vectors, counterclockwise


@dataclass(frozen=True)
class LabeledRay:
    label: str
    coords: RatVec


@dataclass(frozen=True)
class ConeSlice:
    plane: tuple
    pieces: tuple
    rays: tuple


def _pull(normal: Sequence, plane) -> RatVec:
    return tuple(exact.dot(normal, p) for p in plane)


def _in_halfplanes(x, normals) -> bool:
    return all(exact.dot(n, x) >= 0 for n in normals)


def piece_label(signs, names) -> str:
    neg = [n for s, n in zip(signs, names) if s == "-"]
    return "Amp" if not neg else "Big_{" + ",".join(neg) + ",−}"


def cone_slice(m: SurfaceModel, plane: Optional[Sequence] = None) -> ConeSlice:
    if plane is None:
        if m.rank != 2:
            raise ValueError("models of rank other than 2 need an explicit slice plane")
        plane = (exact.unit(2, 0), exact.unit(2, 1))
    plane = tuple(tuple(p.coeffs) if isinstance(p, DivisorClass) else exact.vec(p) for p in plane)
    if len(plane) != 2 or exact.rank(plane) != 2:
        raise ValueError("a slice plane needs two independent classes")
    data = tensor_ample_cone_pieces(m)
    pseff_normals = [_pull(n, plane) for n in dual_cone(data.big).generators]
    pseff_normals = [n for n in pseff_normals if not exact.is_zero(n)]
    negs = m.negative_curves()
    names = [c.name for c in negs]
    curve_normals = [_pull(m.lattice.dual_vector(c.cls), plane) for c in negs]

    pieces = []
    for piece in data.pieces:
        normals = list(pseff_normals)
        for s, n in zip(piece.signs, curve_normals):
            normals.append(n if s == "+" else exact.neg(n))
        lin, rays = cone_from_halfspaces(normals, 2)
        if lin or len(rays) != 2 or exact.rank(rays) != 2:
            continue
        pieces.append(SlicePiece(len(pieces), piece_label(piece.signs, names), piece.signs, tuple(order_ccw(rays))))

    labeled = []
    lin, prays = cone_from_halfspaces(pseff_normals, 2)
    for r in order_ccw(prays) if not lin else []:
        label = "PsEff"
        for c in m.curves:
            pc = plane_coordinates(c.cls.coeffs, plane)
            if pc is not None and exact.primitive(pc) == exact.primitive(r):
                label = c.name
                break
        labeled.append(LabeledRay(label, exact.primitive(r)))
    for name, n in zip(names, curve_normals):
        if exact.is_zero(n):
            continue
        for cand in ((-n[1], n[0]), (n[1], -n[0])):
            if _in_halfplanes(cand, pseff_normals):
                labeled.append(LabeledRay(f"{name}^⊥", exact.primitive(cand)))
                break
    mk = plane_coordinates(exact.neg(m.canonical.coeffs), plane)
    if mk is not None and not exact.is_zero(mk):
        labeled.append(LabeledRay("−K", exact.primitive(mk)))
    return ConeSlice(plane, tuple(pieces), tuple(labeled))


def slice_csv(s: ConeSlice) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["piece_id", "ray_index", "coord_1", "coord_2"])
    for p in s.pieces:
        for i, r in enumerate(p.rays):
            w.writerow([p.piece_id, i] + [_rs(x) for x in r])
    return buf.getvalue()


def _rs(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_FILLS = ("#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc", "#fdd0a2", "#c7e9c0")
_SIZE, _CX, _CY, _R = 420, 210, 230, 170


def _screen(v, radius=_R):
    x, y = float(v[0]), float(v[1])
    norm = math.hypot(x, y)
    return _CX + radius * x / norm, _CY - radius * y / norm


def _angle(v) -> float:
    return math.atan2(float(v[1]), float(v[0]))


def slice_svg(s: ConeSlice, title: str = "") -> str:
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE + 60}" '
        f'viewBox="0 0 {_SIZE} {_SIZE + 60}">',
        f'<rect width="{_SIZE}" height="{_SIZE + 60}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="10" y="20" font-size="14" font-family="sans-serif">{_esc(title)}</text>')
    for p in s.pieces:
        a0, a1 = _angle(p.rays[0]), _angle(p.rays[1])
        if a1 < a0:
            a1 += 2 * math.pi
        pts = [(_CX, _CY)]
        steps = 24
        for i in range(steps + 1):
            t = a0 + (a1 - a0) * i / steps
            pts.append((_CX + _R * math.cos(t), _CY - _R * math.sin(t)))
        fill = _FILLS[p.piece_id % len(_FILLS)]
        path = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
        out.append(f'<polygon class="piece" data-piece="{p.piece_id}" points="{path}" fill="{fill}" fill-opacity="0.8" stroke="none"/>')
    for r in s.rays:
        x, y = _screen(r.coords, _R + 8)
        lx, ly = _screen(r.coords, _R + 24)
        out.append(f'<line class="ray" x1="{_CX}" y1="{_CY}" x2="{x:.2f}" y2="{y:.2f}" stroke="black" stroke-width="1.5"/>')
        out.append(
            f'<text class="ray-label" x="{lx:.2f}" y="{ly:.2f}" font-size="12" font-family="sans-serif" '
            f'text-anchor="middle">{_esc(r.label)}</text>'
        )
    y0 = _SIZE + 10
    for i, p in enumerate(s.pieces):
        fill = _FILLS[p.piece_id % len(_FILLS)]
        x0 = 10 + 140 * i
        out.append(f'<rect x="{x0}" y="{y0}" width="14" height="14" fill="{fill}"/>')
        out.append(f'<text class="legend" x="{x0 + 20}" y="{y0 + 12}" font-size="12" font-family="sans-serif">{_esc(p.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
