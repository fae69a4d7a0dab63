"""Lattice point counting and tropical Ehrhart polynomials.

Two counting regimes share one polytope:

* max-times: the image exp_b(P) of a hull P under coordinatewise b**(.) is an
  ordinary (classically convex by pieces) polytope with rational data; its
  integer dilates t * exp_b(P) are counted exactly over Z_{>=0}^d.
* tropical: the count of b-power lattice points of the tropical dilate k (.) P
  equals the max-times count at t = b**k.

The counting function in t = b**k agrees with a polynomial of degree dim(P);
its coefficients are recovered two independent ways: exact interpolation from
raw counts, and a signed, (b-1)-weighted sum of classical Ehrhart coefficients
of the b-scaled closed cells of the canonical triangulation.  Each closed cell
is a weighted chain simplex: scaling by diag(b**a_r) collapses the count of
its t-th dilate to

    #{ integers n_1..n_m : 0 <= n_m/g_m <= ... <= n_1/g_1 <= t },

with one weight g_l = b**(min of the base point over the l-th increment
block) per chain step; open-cell counts use the strict variant.  Both are
enumerated by a guarded recursion whose cost is proportional to the count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional, Sequence

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dependency, but stay graceful
    _np = None

from .cells import AlcovedSimplex, CellComplex, enumerate_triangulation
from .core import TropMatrix, contains
from .errors import CrossCheckError, GuardExceeded, ValidationError
from .guard import check_guard, resolve_guard
from .ratpoly import lagrange_interpolate, poly_degree, poly_eval


@dataclass(frozen=True)
class LatticeSpec:
    """The base of the b-power lattice: coordinates are logs of 0, 1, 2, ..."""

    b: int

    def __post_init__(self):
        _check_base(self.b)


@dataclass(frozen=True)
class TropicalEhrhartPolynomial:
    """Counting polynomial in x = b**k: value(k) = sum_i coeffs[i] * (b**k)**i."""

    b: int
    coeffs: tuple  # Fractions c_0..c_d
    verified_at: Optional[int] = None  # extra node the prediction was checked at

    def evaluate(self, k: int) -> Fraction:
        return poly_eval(self.coeffs, Fraction(self.b) ** k)

    def degree(self) -> int:
        return poly_degree(self.coeffs)


@dataclass(frozen=True)
class ClassicalEhrhartPolynomial:
    """Ehrhart polynomial of one b-scaled closed cell, in the dilation t."""

    coeffs: tuple
    dim: int

    def evaluate(self, t) -> Fraction:
        return poly_eval(self.coeffs, Fraction(t))

    @property
    def rvol(self) -> Fraction:
        """Leading coefficient: the relative volume of the cell."""
        return self.coeffs[self.dim]


def _check_base(b) -> None:
    if isinstance(b, bool) or not isinstance(b, int) or b < 2:
        raise ValidationError(f"base must be an integer >= 2, got {b!r}")


def _check_counting_matrix(m: TropMatrix, allow_minus_inf: bool) -> None:
    for row in m.entries:
        for e in row:
            if e is None:
                if not allow_minus_inf:
                    raise ValidationError(
                        "counting needs finite entries here; -inf entries leave "
                        "the polynomial regime"
                    )
                continue
            if not isinstance(e, int) or e < 0:
                raise ValidationError(
                    f"counting needs entries in Z>=0 (or -inf), got {e!r}"
                )


def count_maxtimes(m: TropMatrix, b: int, t: int, guard: int | None = None) -> int:
    """#(t * exp_b(P) cap Z_{>=0}^d), exactly.

    Works at integer scale: with L = t * b**(max entry), the residuation
    coefficients of a candidate z against the scaled generators are integers
    z_i * b**(max - M_ij), and membership is the usual cap-and-recompose test
    carried out in exact integer arithmetic.  Vectorized over box chunks when
    the intermediate products fit in int64, otherwise pure big-int Python.
    """
    _check_base(b)
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise ValidationError(f"dilation factor must be a positive integer, got {t!r}")
    _check_counting_matrix(m, allow_minus_inf=True)
    guard = resolve_guard(guard)
    d, n = m.rows, m.cols
    amax = m.max_entry()
    if amax is None:
        amax = 0
    tb = [[0 if e is None else t * b ** e for e in row] for row in m.entries]
    hi = [max(row) for row in tb]
    candidates = 1
    for h in hi:
        candidates *= h + 1
    check_guard(candidates, guard, "max-times box scan")
    big = t * b ** amax
    empty_col = [all(tb[i][j] == 0 for i in range(d)) for j in range(n)]
    has_empty = any(empty_col)
    if _np is not None and big * big < 2 ** 62:
        return _count_maxtimes_np(tb, hi, big, empty_col, has_empty)
    return _count_maxtimes_py(tb, hi, big, empty_col, has_empty)


def _count_maxtimes_np(tb, hi, big, empty_col, has_empty) -> int:
    d = len(hi)
    n = len(tb[0])
    rest_shape = [h + 1 for h in hi[1:]]
    rest = 1
    for s in rest_shape:
        rest *= s
    if d > 1:
        mesh = _np.indices(rest_shape).reshape(d - 1, rest).astype(_np.int64)
    chunk = max(1, 4_000_000 // max(rest, 1))
    total = 0
    for start in range(0, hi[0] + 1, chunk):
        z0 = _np.arange(start, min(start + chunk, hi[0] + 1), dtype=_np.int64)
        if d > 1:
            zz = _np.empty((d, z0.size * rest), dtype=_np.int64)
            zz[0] = _np.repeat(z0, rest)
            zz[1:] = _np.tile(mesh, z0.size)
        else:
            zz = z0.reshape(1, -1)
        lam = _np.empty((n, zz.shape[1]), dtype=_np.int64)
        for j in range(n):
            if empty_col[j]:
                lam[j] = big
                continue
            cur = None
            for i in range(d):
                if tb[i][j] == 0:
                    continue
                val = zz[i] * (big // tb[i][j])
                cur = val if cur is None else _np.minimum(cur, val)
            lam[j] = cur
        ok = _np.ones(zz.shape[1], dtype=bool) if has_empty else lam.max(axis=0) >= big
        lam_cap = _np.minimum(lam, big)
        for i in range(d):
            best = _np.zeros(zz.shape[1], dtype=_np.int64)
            for j in range(n):
                if tb[i][j] == 0:
                    continue
                _np.maximum(best, lam_cap[j] * tb[i][j], out=best)
            ok &= best == big * zz[i]
        total += int(_np.count_nonzero(ok))
    return total


def _count_maxtimes_py(tb, hi, big, empty_col, has_empty) -> int:
    d = len(hi)
    n = len(tb[0])
    weights = [
        [None if tb[i][j] == 0 else big // tb[i][j] for i in range(d)]
        for j in range(n)
    ]
    total = 0
    for zz in itertools.product(*[range(h + 1) for h in hi]):
        lam = []
        for j in range(n):
            if empty_col[j]:
                lam.append(big)
                continue
            cur = None
            for i in range(d):
                w = weights[j][i]
                if w is None:
                    continue
                val = zz[i] * w
                if cur is None or val < cur:
                    cur = val
            lam.append(cur)
        if not has_empty and max(lam) < big:
            continue
        good = True
        for i in range(d):
            best = 0
            for j in range(n):
                if tb[i][j] == 0:
                    continue
                val = min(lam[j], big) * tb[i][j]
                if val > best:
                    best = val
            if best != big * zz[i]:
                good = False
                break
        if good:
            total += 1
    return total


def count_tropical(m: TropMatrix, b: int, k: int, guard: int | None = None) -> int:
    """Number of b-power lattice points of the tropical dilate k (.) P."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValidationError(f"k must be a nonnegative integer, got {k!r}")
    return count_maxtimes(m, b, b ** k, guard)


def count_classical_dilate(m: TropMatrix, k: int, guard: int | None = None) -> int:
    """#(k * P cap Z^d) for the classical dilation of the hull."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValidationError(f"k must be a positive integer, got {k!r}")
    _check_counting_matrix(m, allow_minus_inf=False)
    guard = resolve_guard(guard)
    box = [(min(row) * k, max(row) * k) for row in m.entries]
    candidates = 1
    for lo, hiv in box:
        candidates *= hiv - lo + 1
    check_guard(candidates, guard, "classical dilate scan")
    total = 0
    for z in itertools.product(*[range(lo, hiv + 1) for lo, hiv in box]):
        if contains(m, tuple(Fraction(c, k) for c in z)):
            total += 1
    return total


def cell_weights(cell: AlcovedSimplex, b: int) -> tuple:
    """Chain weights g_l = b**(min of the base point over the l-th block)."""
    base = cell.vertices[0]
    return tuple(b ** min(base[r] for r in block) for block in cell.blocks())


def cell_rvol(cell: AlcovedSimplex, b: int) -> Fraction:
    """Relative volume of the b-scaled closed cell: (prod g_l) / m!."""
    prod = 1
    for g in cell_weights(cell, b):
        prod *= g
    return Fraction(prod, factorial(cell.dim))


def _chain_count(gs: Sequence[int], t: int, strict: bool, budget, guard: int) -> int:
    """Count weighted chains below dilation t; strict toggles < versus <=.

    strict=False:  0 <= n_m/g_m <= ... <= n_1/g_1 <= t
    strict=True:   0 <  n_m/g_m <  ... <  n_1/g_1 <  t
    Recursion visits one node per counted prefix, so cost tracks the answer;
    the shared budget raises GuardExceeded past the configured limit.
    """
    m = len(gs)
    if m == 0:
        return 1
    if t == 0:
        return 0 if strict else 1

    def rec(level: int, num: int, den: int) -> int:
        g = gs[level]
        if strict:
            top = (g * num - 1) // den
            lo = 1
        else:
            top = (g * num) // den
            lo = 0
        if top < lo:
            return 0
        if level == m - 1:
            return top - lo + 1
        budget[0] += top - lo + 1
        check_guard(budget[0], guard, "weighted chain enumeration")
        total = 0
        for nv in range(lo, top + 1):
            total += rec(level + 1, nv, g)
        return total

    return rec(0, t, 1)


def open_cell_count(cell: AlcovedSimplex, b: int, k: int, guard: int | None = None) -> int:
    """#((b**(k+1) - b**k) * scaled open cell cap Z^d) by direct enumeration."""
    _check_base(b)
    guard = resolve_guard(guard)
    t = (b - 1) * b ** k
    return _chain_count(cell_weights(cell, b), t, True, [0], guard)


def closed_cell_count(cell: AlcovedSimplex, b: int, t: int, guard: int | None = None) -> int:
    """Lattice points of the t-th classical dilate of the b-scaled closed cell."""
    _check_base(b)
    guard = resolve_guard(guard)
    if t < 0:
        raise ValidationError("dilation must be nonnegative")
    if t == 0:
        return 1
    return _chain_count(cell_weights(cell, b), t, False, [0], guard)


def _as_complex(arg, guard) -> CellComplex:
    if isinstance(arg, CellComplex):
        return arg
    if isinstance(arg, TropMatrix):
        return enumerate_triangulation(arg, guard)
    raise ValidationError(f"expected a matrix or cell complex, got {type(arg).__name__}")


def count_via_cells(arg, b: int, k: int, guard: int | None = None) -> int:
    """Independent tropical count: sum of open-cell counts over the triangulation."""
    guard = resolve_guard(guard)
    t = enumerate_triangulation  # noqa: F841  (keeps import alive for readers)
    complex_ = _as_complex(arg, guard)
    return sum(open_cell_count(c, b, k, guard) for c in complex_.cells)


def classical_ehrhart_scaled_simplex(
    cell: AlcovedSimplex, b: int, guard: int | None = None
) -> ClassicalEhrhartPolynomial:
    """Ehrhart polynomial of the b-scaled closed cell, by counting m+1 dilates."""
    _check_base(b)
    guard = resolve_guard(guard)
    m = cell.dim
    pts = [(t, closed_cell_count(cell, b, t, guard)) for t in range(m + 1)]
    coeffs = lagrange_interpolate(pts)
    return ClassicalEhrhartPolynomial(coeffs, m)


def coeffs_via_formula(arg, b: int, guard: int | None = None) -> tuple:
    """Assemble c_0..c_d as signed, (b-1)-weighted sums over all cells.

    c_i = sum over cells of dimension m >= i of
          (-1)**(m-i) * (b-1)**i * (classical coefficient i of the scaled cell).
    """
    _check_base(b)
    guard = resolve_guard(guard)
    complex_ = _as_complex(arg, guard)
    d = complex_.ambient_dim
    out = [Fraction(0)] * (d + 1)
    for cell in complex_.cells:
        ec = classical_ehrhart_scaled_simplex(cell, b, guard)
        m = cell.dim
        for i in range(m + 1):
            out[i] += (-1) ** (m - i) * Fraction(b - 1) ** i * ec.coeffs[i]
    return tuple(out)


def c_top_leading(arg, b: int, guard: int | None = None) -> Fraction:
    """Leading coefficient c_d, closed form: (b-1)^d * sum of full-cell rvols."""
    _check_base(b)
    complex_ = _as_complex(arg, resolve_guard(guard))
    d = complex_.ambient_dim
    total = Fraction(0)
    for cell in complex_.cells_of_dim(d):
        total += cell_rvol(cell, b)
    return Fraction(b - 1) ** d * total


def c_dminus1_direct(arg, b: int, guard: int | None = None) -> Fraction:
    """Second-highest coefficient by facet weights, no interpolation.

    Each (d-1)-cell contributes delta * (b-1)**(d-1) * rvol with delta
    depending on how many full cells cover it: none -> 1 (a tentacle facet),
    one -> 1/2 (boundary), two -> 0 (interior wall).
    """
    _check_base(b)
    complex_ = _as_complex(arg, resolve_guard(guard))
    d = complex_.ambient_dim
    total = Fraction(0)
    cover = {
        frozenset(c.vertices): 0 for c in complex_.cells_of_dim(d - 1)
    }
    for c in complex_.cells_of_dim(d):
        for f in c.facets():
            key = frozenset(f.vertices)
            if key in cover:
                cover[key] += 1
    for cell in complex_.cells_of_dim(d - 1):
        cnt = cover[frozenset(cell.vertices)]
        delta = Fraction(2 - cnt, 2)
        if delta:
            total += delta * Fraction(b - 1) ** (d - 1) * cell_rvol(cell, b)
    return total


def tropical_ehrhart_poly(
    m: TropMatrix,
    b: int,
    guard: int | None = None,
    counter: Optional[Callable[[TropMatrix, int, int, int], int]] = None,
) -> TropicalEhrhartPolynomial:
    """Recover the counting polynomial by interpolation at k = 0..d.

    The nodes b**0..b**d are distinct, so the Vandermonde system is regular
    and Lagrange interpolation is exact.  The prediction is verified against
    one extra count at k = d+1 when that box fits under the guard.
    """
    _check_base(b)
    _check_counting_matrix(m, allow_minus_inf=False)
    guard = resolve_guard(guard)
    count = counter or count_tropical
    d = m.rows
    pts = []
    for k in range(d + 1):
        pts.append((Fraction(b) ** k, count(m, b, k, guard)))
    coeffs = lagrange_interpolate(pts)
    verified = None
    try:
        extra = count(m, b, d + 1, guard)
    except GuardExceeded:
        extra = None
    if extra is not None:
        if poly_eval(coeffs, Fraction(b) ** (d + 1)) != extra:
            raise CrossCheckError(
                f"interpolated polynomial fails at k={d + 1}: "
                f"predicted {poly_eval(coeffs, Fraction(b) ** (d + 1))}, counted {extra}"
            )
        verified = d + 1
    return TropicalEhrhartPolynomial(b, coeffs, verified)


def interior_coeffs_via_formula(arg, b: int, guard: int | None = None) -> tuple:
    """The formula sum restricted to cells away from the support boundary."""
    _check_base(b)
    guard = resolve_guard(guard)
    complex_ = _as_complex(arg, guard)
    d = complex_.ambient_dim
    out = [Fraction(0)] * (d + 1)
    for cell in complex_.interior_cells():
        ec = classical_ehrhart_scaled_simplex(cell, b, guard)
        m = cell.dim
        for i in range(m + 1):
            out[i] += (-1) ** (m - i) * Fraction(b - 1) ** i * ec.coeffs[i]
    return tuple(out)


def reciprocity_check(arg, b: int, guard: int | None = None) -> bool:
    """c_i(interior) == (-1)**(dim - i) * c_i(P) for every i.

    The identity needs the polytope to equal its top trunk: every maximal
    cell must have the full ambient dimension.  Weak purity is not enough;
    a branching tree of segments in the plane has equal-dimensional maximal
    cells but its interior counts break the sign pattern at the branch
    vertex, so such inputs are rejected rather than reported as False.
    """
    guard = resolve_guard(guard)
    complex_ = _as_complex(arg, guard)
    if not complex_.is_pure() or complex_.dim != complex_.ambient_dim:
        raise ValidationError(
            "reciprocity needs a pure complex of full dimension"
        )
    dim = complex_.dim
    full = coeffs_via_formula(complex_, b, guard)
    inner = interior_coeffs_via_formula(complex_, b, guard)
    return all(
        inner[i] == (-1) ** (dim - i) * full[i] for i in range(len(full))
    )


def log_map(samples: Sequence[tuple], degree_bound: int) -> Optional[int]:
    """Degree of the polynomial (in b) behind the samples; None stands for -inf.

    samples are (b, value) pairs of one polynomial of degree <= degree_bound;
    at least degree_bound + 1 of them are required, extras must be consistent.
    """
    if degree_bound < 0:
        raise ValidationError("degree bound must be nonnegative")
    if len(samples) < degree_bound + 1:
        raise ValidationError(
            f"need at least {degree_bound + 1} samples, got {len(samples)}"
        )
    head = samples[: degree_bound + 1]
    coeffs = lagrange_interpolate(head)
    for bval, val in samples:
        if poly_eval(coeffs, Fraction(bval)) != Fraction(val):
            raise ValidationError(
                f"samples are not polynomial of degree <= {degree_bound} "
                f"(residual at b={bval})"
            )
    deg = poly_degree(coeffs)
    return None if deg < 0 else deg


def log_degree_bound(m: TropMatrix) -> int:
    """Degree of any c_i in b is at most d * (1 + max entry)."""
    top = m.max_entry()
    return m.rows * (1 + (top if top is not None else 0))


def coefficient_in_b(arg, i: int, b: int, guard: int | None = None) -> Fraction:
    """c_i at one base b, routed to the cheapest exact path available.

    i = 0 is the Euler characteristic, the top two indices have closed forms,
    anything in between falls back to the per-cell interpolation formula.
    """
    complex_ = _as_complex(arg, resolve_guard(guard))
    d = complex_.ambient_dim
    if not 0 <= i <= d:
        raise ValidationError(f"coefficient index {i} out of range")
    if i == 0:
        return Fraction(complex_.euler_characteristic())
    if i == d:
        return c_top_leading(complex_, b, guard)
    if i == d - 1:
        return c_dminus1_direct(complex_, b, guard)
    return coeffs_via_formula(complex_, b, guard)[i]


def log_coefficient(m: TropMatrix, i: int, guard: int | None = None) -> Optional[int]:
    """Log of the i-th coefficient: its degree as a polynomial in b."""
    guard = resolve_guard(guard)
    complex_ = enumerate_triangulation(m, guard)
    bound = log_degree_bound(m)
    samples = [
        (b, coefficient_in_b(complex_, i, b, guard)) for b in range(2, bound + 3)
    ]
    return log_map(samples, bound)


def ehrhart_report(m: TropMatrix, b: int, kmax: int, guard: int | None = None) -> dict:
    """JSON-ready report: counts, interpolated and formula coefficients."""
    from .core import format_entry  # local import to keep module edges tidy

    guard = resolve_guard(guard)
    poly = tropical_ehrhart_poly(m, b, guard)
    formula = coeffs_via_formula(m, b, guard)
    counts = [
        {"k": k, "value": count_tropical(m, b, k, guard)} for k in range(kmax + 1)
    ]
    return {
        "b": b,
        "coeffs": [_format_fraction(c) for c in poly.coeffs],
        "formula_coeffs": [_format_fraction(c) for c in formula],
        "agree": tuple(poly.coeffs) == tuple(formula),
        "counts": counts,
    }


def _format_fraction(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"
