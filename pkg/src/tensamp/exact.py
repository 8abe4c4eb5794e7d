"""Exact rational linear algebra and LP feasibility.

Everything here works over :class:`fractions.Fraction`; no floating point is
used anywhere.  Vectors are tuples of Fractions, matrices are tuples of row
tuples.

Strict inequalities in :func:`lp_feasible` are handled by maximizing a
common slack ``t`` (bounded above by 1) with an exact two-phase simplex.  A
positive optimum gives a point satisfying every strict relation; otherwise
the Motzkin alternative system is solved and its solution is returned as an
infeasibility certificate.  Pivoting follows Bland's smallest-index rule, so
results are reproducible for a fixed input order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]
RatMat = tuple  # tuple[RatVec, ...]

GE, GT, EQ = ">=", ">", "="
_RELATIONS = (GE, GT, EQ)


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


class CapacityError(ValueError):
    """Input exceeds a documented size cap."""


def rat(x) -> Fraction:
    """Parse an int, Fraction or string such as ``"3/4"`` into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        if not s:
            raise ValueError("empty rational")
        if "." in s or "e" in s.lower():
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(xs: Iterable) -> RatVec:
    return tuple(rat(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> RatMat:
    out = tuple(vec(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise DimensionError("matrix rows have different lengths")
    return out


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RatVec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def _check_same(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")


def add(u: RatVec, v: RatVec) -> RatVec:
    _check_same(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: RatVec, v: RatVec) -> RatVec:
    _check_same(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: RatVec) -> RatVec:
    c = rat(c)
    return tuple(c * a for a in u)


def neg(u: RatVec) -> RatVec:
    return tuple(-a for a in u)


def dot(u: Sequence, v: Sequence) -> Fraction:
    _check_same(u, v)
    if all(a.denominator == 1 for a in u) and all(b.denominator == 1 for b in v):
        # integral vectors: skip per-term fraction normalization
        return Fraction(sum(a.numerator * b.numerator for a, b in zip(u, v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def lincomb(coeffs: Sequence, vectors: Sequence[RatVec], dim: int) -> RatVec:
    """Return sum(c_i * v_i) in dimension ``dim``."""
    if len(coeffs) != len(vectors):
        raise DimensionError("coefficient count does not match vector count")
    acc = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if len(v) != dim:
            raise DimensionError("vector has wrong dimension")
        if c:
            for j, a in enumerate(v):
                acc[j] += c * a
    return tuple(acc)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def transpose(m: RatMat) -> RatMat:
    return tuple(zip(*m)) if m else ()


def matvec(m: RatMat, v: RatVec) -> RatVec:
    return tuple(dot(row, v) for row in m)


def bilinear(u: RatVec, gram: RatMat, v: RatVec) -> Fraction:
    if len(gram) != len(u):
        raise DimensionError("Gram matrix size does not match vector")
    return dot(u, matvec(gram, v))


def is_symmetric(m: RatMat) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def primitive(u: Sequence) -> RatVec:
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    if is_zero(u):
        return tuple(Fraction(0) for _ in u)
    den = 1
    for a in u:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in u]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(Fraction(a // g) for a in ints)


# ---------------------------------------------------------------------------
# Elimination


def rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with leftmost pivots. Returns (rows, pivot_columns)."""
    a = [list(map(rat, r)) for r in m]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1]) if m else 0


def solve_linear(a: Sequence[Sequence], b: Sequence) -> Optional[RatVec]:
    """Solve ``A x = b`` exactly.

    Returns ``None`` when inconsistent.  Underdetermined systems get zeros on
    the non-pivot columns (leftmost-pivot elimination).
    """
    if len(a) != len(b):
        raise DimensionError(f"A has {len(a)} rows but b has {len(b)} entries")
    if not a:
        return ()
    ncols = len(a[0])
    aug = [list(map(rat, row)) + [rat(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = red[r][ncols]
    return tuple(x)


def nullspace(m: Sequence[Sequence], ncols: Optional[int] = None) -> list[RatVec]:
    """Basis of {x : M x = 0}, one vector per free column (leftmost-pivot RREF)."""
    if not m:
        if ncols is None:
            raise DimensionError("ncols required for an empty matrix")
        return [unit(ncols, i) for i in range(ncols)]
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, col in enumerate(pivots):
            x[col] = -red[r][f]
        basis.append(tuple(x))
    return basis


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [list(map(rat, r)) for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def charpoly(m: Sequence[Sequence]) -> list[Fraction]:
    """Characteristic polynomial det(xI - M), coefficients from x^n down to x^0.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    a = [list(map(rat, r)) for r in m]
    n = len(a)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prod = [[sum((a[i][l] * mk[l][j] for l in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        c_prev = coeffs[-1]
        mk = [[prod[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        am = [[sum((a[i][l] * mk[l][j] for l in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        trace = sum((am[i][i] for i in range(n)), Fraction(0))
        coeffs.append(-trace / k)
    return coeffs


def _sign_changes(cs: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in cs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def signature(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric rational matrix.

    Descartes' rule of signs is exact for the characteristic polynomial of a
    symmetric matrix because all of its roots are real.
    """
    if not is_symmetric(tuple(tuple(r) for r in gram)):
        raise ValueError("signature needs a symmetric matrix")
    cs = charpoly(gram)
    n = len(cs) - 1
    zero = 0
    while zero < n and cs[n - zero] == 0:
        zero += 1
    trimmed = cs[: n + 1 - zero]
    pos = _sign_changes(trimmed)
    # p(-x): flip sign of odd-degree coefficients
    deg = len(trimmed) - 1
    negx = [c if (deg - i) % 2 == 0 else -c for i, c in enumerate(trimmed)]
    negc = _sign_changes(negx)
    return pos, negc, zero


def leading_minors(m: Sequence[Sequence]) -> list[Fraction]:
    return [determinant([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def is_negative_definite(m: Sequence[Sequence]) -> bool:
    """Sylvester: leading principal minors alternate in sign starting negative."""
    return all((d < 0) if k % 2 == 1 else (d > 0) for k, d in enumerate(leading_minors(m), start=1))


# ---------------------------------------------------------------------------
# Simplex (internal)


class _LPResult:
    __slots__ = ("status", "x", "value")

    def __init__(self, status: str, x=None, value=None):
        self.status = status
        self.x = x
        self.value = value


def _simplex_max(a_eq: list[list[Fraction]], b_eq: list[Fraction], c: list[Fraction]) -> _LPResult:
    """Maximize c.x subject to A x = b, x >= 0.  Two-phase, Bland's rule."""
    m = len(a_eq)
    n = len(c)
    rows = []
    for r, bi in zip(a_eq, b_eq):
        r = list(r)
        if bi < 0:
            r = [-x for x in r]
            bi = -bi
        rows.append(r + [Fraction(0)] * m + [bi])
    for i in range(m):
        rows[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]
    total = n + m

    def pivot(pr: int, pc: int) -> None:
        p = rows[pr][pc]
        rows[pr] = [x / p for x in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][pc] != 0:
                f = rows[i][pc]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[pr])]
        basis[pr] = pc

    def run(cost: list[Fraction], allowed: int) -> str:
        while True:
            # reduced cost of column j: cost_j - sum_i cost_{basis_i} * rows[i][j]
            entering = None
            for j in range(allowed):
                if j in basis:
                    continue
                rc = cost[j] - sum((cost[basis[i]] * rows[i][j] for i in range(len(rows))), Fraction(0))
                if rc > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i in range(len(rows)):
                coef = rows[i][entering]
                if coef > 0:
                    ratio = rows[i][-1] / coef
                    key = (ratio, basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            pivot(best[1], entering)

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    run(phase1, total)
    infeas = sum((rows[i][-1] for i in range(len(rows)) if basis[i] >= n), Fraction(0))
    if infeas != 0:
        return _LPResult("infeasible")
    # drive artificials out of the basis; drop redundant rows
    i = 0
    while i < len(rows):
        if basis[i] >= n:
            col = next((j for j in range(n) if rows[i][j] != 0), None)
            if col is None:
                del rows[i]
                del basis[i]
                continue
            pivot(i, col)
        i += 1
    rows = [r[:n] + [r[-1]] for r in rows]
    cost = list(c)
    status = run(cost + [Fraction(0)] * 0, n)
    x = [Fraction(0)] * n
    for i, bvar in enumerate(basis):
        x[bvar] = rows[i][-1]
    if status == "unbounded":
        return _LPResult("unbounded", tuple(x))
    return _LPResult("optimal", tuple(x), sum((ci * xi for ci, xi in zip(c, x)), Fraction(0)))


def _maximize_free(
    rows: Sequence[tuple[RatVec, str, Fraction]],
    objective: Sequence[Fraction],
    nonneg: Sequence[bool],
) -> _LPResult:
    """Maximize objective.x over ``a.x REL b`` rows with x_j >= 0 where nonneg[j].

    Free variables are split as x = u - v; ``>=`` rows get a surplus column.
    Strict relations are not accepted here.
    """
    n = len(objective)
    colmap: list[tuple[int, Optional[int]]] = []
    k = 0
    for j in range(n):
        if nonneg[j]:
            colmap.append((k, None))
            k += 1
        else:
            colmap.append((k, k + 1))
            k += 2
    nsurplus = sum(1 for _, rel, _ in rows if rel == GE)
    width = k + nsurplus
    a_eq, b_eq = [], []
    s = k
    for a, rel, b in rows:
        if rel not in (GE, EQ):
            raise ValueError("internal LP accepts only >= and = rows")
        r = [Fraction(0)] * width
        for j, coef in enumerate(a):
            p, q = colmap[j]
            r[p] += coef
            if q is not None:
                r[q] -= coef
        if rel == GE:
            r[s] = Fraction(-1)
            s += 1
        a_eq.append(r)
        b_eq.append(rat(b))
    c = [Fraction(0)] * width
    for j, coef in enumerate(objective):
        p, q = colmap[j]
        c[p] += coef
        if q is not None:
            c[q] -= coef
    if not a_eq:
        return _LPResult("optimal", zeros(n), Fraction(0)) if all(o == 0 for o in objective) else _LPResult("unbounded")
    res = _simplex_max(a_eq, b_eq, c)
    if res.x is None:
        return res
    x = []
    for j in range(n):
        p, q = colmap[j]
        x.append(res.x[p] - (res.x[q] if q is not None else 0))
    val = sum((o * xi for o, xi in zip(objective, x)), Fraction(0))
    return _LPResult(res.status, tuple(x), val)


def lp_optimize(
    rows: Sequence[tuple[Sequence, str, object]],
    objective: Sequence,
    nonneg: Optional[Sequence[bool]] = None,
    minimize: bool = False,
):
    """Optimize a linear objective over non-strict rows (internal helper).

    Returns ``(status, point)`` with status one of ``optimal``, ``infeasible``,
    ``unbounded``.
    """
    obj = [rat(o) for o in objective]
    if minimize:
        obj = [-o for o in obj]
    rows_q = [(vec(a), rel, rat(b)) for a, rel, b in rows]
    nn = list(nonneg) if nonneg is not None else [False] * len(obj)
    res = _maximize_free(rows_q, obj, nn)
    return res.status, res.x


# ---------------------------------------------------------------------------
# Feasibility with certificates


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x  rel  rhs`` with rel one of ``>=``, ``>``, ``=``."""

    coeffs: RatVec
    rel: str = GE
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        if self.rel not in _RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")
        object.__setattr__(self, "coeffs", vec(self.coeffs))
        object.__setattr__(self, "rhs", rat(self.rhs))

    def holds(self, x: Sequence) -> bool:
        v = dot(self.coeffs, x)
        if self.rel == GE:
            return v >= self.rhs
        if self.rel == GT:
            return v > self.rhs
        return v == self.rhs


def _as_constraint(c) -> Constraint:
    if isinstance(c, Constraint):
        return c
    if len(c) == 2:
        return Constraint(c[0], c[1])
    return Constraint(c[0], c[1], c[2])


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: Optional[RatVec] = None
    certificate: Optional[RatVec] = None  # one multiplier per constraint

    def __bool__(self) -> bool:
        return self.feasible


def verify_infeasibility(constraints: Sequence, multipliers: Sequence) -> bool:
    """Check a Motzkin certificate by direct expansion.

    Multipliers on ``>=``/``>`` rows must be nonnegative.  The combination of
    left-hand sides must vanish while the combined right-hand side is positive,
    or is zero with positive weight on some strict row.
    """
    cons = [_as_constraint(c) for c in constraints]
    if len(cons) != len(multipliers) or not cons:
        return False
    ys = vec(multipliers)
    dim = len(cons[0].coeffs)
    for c, y in zip(cons, ys):
        if c.rel != EQ and y < 0:
            return False
    if not is_zero(lincomb(ys, [c.coeffs for c in cons], dim)):
        return False
    rhs = sum((y * c.rhs for c, y in zip(cons, ys)), Fraction(0))
    if rhs > 0:
        return True
    return rhs == 0 and any(y > 0 for c, y in zip(cons, ys) if c.rel == GT)


def _farkas(cons: list[Constraint]) -> Optional[RatVec]:
    m = len(cons)
    dim = len(cons[0].coeffs)
    nonneg = [c.rel != EQ for c in cons]
    base = []
    for j in range(dim):
        base.append((tuple(c.coeffs[j] for c in cons), EQ, Fraction(0)))
    rhs_row = tuple(c.rhs for c in cons)
    strict = tuple(Fraction(1 if c.rel == GT else 0) for c in cons)
    attempts = []
    if any(strict):
        attempts.append(base + [(strict, EQ, Fraction(1)), (rhs_row, GE, Fraction(0))])
    attempts.append(base + [(rhs_row, EQ, Fraction(1))])
    for rows in attempts:
        res = _maximize_free(rows, [Fraction(0)] * m, nonneg)
        if res.status == "optimal":
            return res.x
    return None


def lp_feasible(constraints: Sequence, dim: Optional[int] = None) -> FeasibilityResult:
    """Decide feasibility of a finite system of linear relations over Q.

    ``constraints`` holds :class:`Constraint` objects or tuples
    ``(coeffs, rel[, rhs])``.  Returns a feasible point or a multiplier vector
    certifying infeasibility (see :func:`verify_infeasibility`).
    """
    cons = [_as_constraint(c) for c in constraints]
    if not cons:
        return FeasibilityResult(True, point=zeros(dim or 0))
    n = len(cons[0].coeffs)
    if any(len(c.coeffs) != n for c in cons):
        raise DimensionError("constraint vectors differ in dimension")
    if dim is not None and dim != n:
        raise DimensionError("declared dimension does not match constraints")
    has_strict = any(c.rel == GT for c in cons)
    # variables (x_1..x_n, t); strict rows become a.x - t >= b
    rows = []
    for c in cons:
        if c.rel == GT:
            rows.append((c.coeffs + (Fraction(-1),), GE, c.rhs))
        else:
            rows.append((c.coeffs + (Fraction(0),), c.rel, c.rhs))
    if has_strict:
        rows.append((zeros(n) + (Fraction(-1),), GE, Fraction(-1)))
        objective = zeros(n) + (Fraction(1),)
    else:
        objective = zeros(n + 1)
        rows.append((zeros(n) + (Fraction(1),), EQ, Fraction(0)))
    res = _maximize_free(rows, objective, [False] * (n + 1))
    if res.status == "optimal" and (not has_strict or res.value > 0):
        point = res.x[:n]
        if not all(c.holds(point) for c in cons):  # pragma: no cover - internal bug guard
            raise AssertionError("LP returned a point violating the constraints")
        return FeasibilityResult(True, point=point)
    cert = _farkas(cons)
    if cert is None or not verify_infeasibility(cons, cert):  # pragma: no cover
        raise AssertionError("no infeasibility certificate found for an infeasible system")
    return FeasibilityResult(False, certificate=cert)
