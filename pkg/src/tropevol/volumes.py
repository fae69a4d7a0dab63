"""Tropical volume functionals of max-plus polytopes.

The barycentric volume tlvol is the degree of the leading counting
coefficient and is computed here by two independent exact algorithms:

* subsets: for every (d+1)-column simplex, the d-trunk (if any) is a
  polytrope generated by columns of a Kleene star; its componentwise
  maximum is the trunk barycenter and the best coordinate sum over all
  subsets is tlvol (tropical Caratheodory).
* triangulation: tlvol is the maximal a_1+...+a_d+d over full-dimensional
  unimodular alcoves of the canonical cell decomposition.

The refined i-volumes optimize the sum of the i largest (upper) or the i
smallest (lower) coordinates over the i-trunk; the lower version is a
concave maximization solved per cell by an exact rational LP.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .cells import AlcovedSimplex, CellComplex, enumerate_triangulation
from .core import Entry, TropMatrix, tsum
from .ehrhart import c_dminus1_direct, log_degree_bound, log_map
from .errors import CrossCheckError, ValidationError
from .guard import resolve_guard
from .linalg import (
    UNIQUE_GAP,
    assignment_normalize,
    is_nonsingular,
    kleene_star,
    tminor,
    tvol_max_sub,
    tvol_square,
)
from .ratlp import lp_max_min_linear


def tropical_barycenter(m: TropMatrix) -> tuple:
    """Componentwise maximum over the generators; dominates the polytope."""
    return tuple(tsum(row) for row in m.entries)


def simplex_dtrunk_barycenter(m: TropMatrix) -> Optional[tuple]:
    """Barycenter of the d-trunk of a (d+1)-column simplex, or None.

    Appends a row of tropical ones, tests non-singularity, normalizes by the
    assignment duals so the optimal diagonal is 0 with off-diagonal <= 0,
    closes up with the Kleene star, and undoes the normalization: column j
    of the trunk has coordinates S[i][j] - S[0][j] + u[i] - u[0].  Column
    scalings drop out (they do not move a tropical hull), the zero-th row
    rescaling fixes the projective representative.
    """
    d = m.rows
    if m.cols != d + 1:
        raise ValidationError(
            f"expected a {d}x{d + 1} simplex matrix, got {d}x{m.cols}"
        )
    rows = [tuple(0 for _ in range(d + 1))]
    rows.extend(m.entries)
    abar = TropMatrix.from_rows(rows)
    if not is_nonsingular(abar):
        return None
    na = assignment_normalize(abar)
    star = kleene_star(na.matrix)
    u = na.u
    bt = []
    for i in range(1, d + 1):
        best = None
        for j in range(d + 1):
            sij = star.entries[i][j]
            if sij is None:
                continue
            val = sij - star.entries[0][j] + u[i] - u[0]
            if best is None or val > best:
                best = val
        bt.append(best)
    return tuple(bt)


def tlvol_subsets(m: TropMatrix):
    """(tlvol, witness column subset) via the Caratheodory subset sweep."""
    d = m.rows
    if m.cols < d + 1:
        return None, None
    best = None
    witness = None
    for J in itertools.combinations(range(m.cols), d + 1):
        cols = [m.column(j) for j in J]
        if len(set(cols)) < len(cols):
            continue
        bt = simplex_dtrunk_barycenter(m.submatrix_columns(J))
        if bt is None:
            continue
        val = sum(bt)
        if best is None or val > best:
            best = val
            witness = J
    return best, witness


def tlvol_triangulation(arg, guard: int | None = None):
    """(tlvol, witness base point) over full-dimensional alcoves of the complex."""
    complex_ = _as_complex(arg, guard)
    d = complex_.ambient_dim
    best = None
    witness = None
    for cell in complex_.cells_of_dim(d):
        base = cell.vertices[0]
        val = sum(base) + d
        if best is None or val > best:
            best = val
            witness = base
    return best, witness


def tlvol(m: TropMatrix, method: str = "subsets", guard: int | None = None) -> Entry:
    """Tropical barycentric volume; method picks the algorithm or cross-checks."""
    if method == "subsets":
        return tlvol_subsets(m)[0]
    if method == "triangulation":
        return tlvol_triangulation(m, guard)[0]
    if method == "both":
        a = tlvol_subsets(m)[0]
        b = tlvol_triangulation(m, guard)[0]
        if a != b:
            raise CrossCheckError(
                f"tlvol mismatch: subsets {a!r} vs triangulation {b!r}"
            )
        return a
    raise ValidationError(f"unknown method {method!r}")


def _as_complex(arg, guard) -> CellComplex:
    if isinstance(arg, CellComplex):
        return arg
    if isinstance(arg, TropMatrix):
        return enumerate_triangulation(arg, resolve_guard(guard))
    raise ValidationError(f"expected a matrix or cell complex, got {type(arg).__name__}")


def _ivol_complex(arg, guard):
    """Complex plus the translation that was applied to reach Z>=0 entries.

    The i-volumes are only treated for finite entries; negative integers are
    shifted into range and the result is corrected by homogeneity
    (tlvol_i of the translate by s differs by exactly s*i).
    """
    if isinstance(arg, CellComplex):
        return arg, 0
    if not isinstance(arg, TropMatrix):
        raise ValidationError(
            f"expected a matrix or cell complex, got {type(arg).__name__}"
        )
    if not arg.is_finite():
        raise ValidationError(
            "i-volumes are only defined here for finite entries"
        )
    low = min(min(row) for row in arg.entries)
    shift = -low if low < 0 else 0
    complex_ = enumerate_triangulation(arg.translate(shift), resolve_guard(guard))
    return complex_, shift


def _sum_largest(coords: Sequence, i: int):
    return sum(sorted(coords, reverse=True)[:i])


def _sum_smallest(coords: Sequence, i: int):
    return sum(sorted(coords)[:i])


def tlvol_i_plus(arg, i: int, guard: int | None = None):
    """(upper barycentric i-volume, witness vertex): best i largest coordinates."""
    complex_, shift = _ivol_complex(arg, guard)
    d = complex_.ambient_dim
    if not 1 <= i <= d:
        raise ValidationError(f"i must be in 1..{d}, got {i}")
    candidates = set()
    for cell in complex_.cells:
        if cell.dim >= i:
            candidates.update(cell.vertices)
    best = None
    witness = None
    for v in sorted(candidates):
        val = _sum_largest(v, i)
        if best is None or val > best:
            best = val
            witness = tuple(c - shift for c in v)
    if best is None:
        return None, None
    return best - i * shift, witness


def tlvol_i_minus(arg, i: int, guard: int | None = None):
    """(lower barycentric i-volume, witness point): best i smallest coordinates.

    Concave objective, maximized per closed trunk cell by the exact LP; the
    optimum may sit in a cell's relative interior.
    """
    complex_, shift = _ivol_complex(arg, guard)
    d = complex_.ambient_dim
    if not 1 <= i <= d:
        raise ValidationError(f"i must be in 1..{d}, got {i}")
    best = None
    witness = None
    for cell in complex_.cells:
        if cell.dim < i:
            continue
        val, point = lp_max_min_linear(cell.vertices, i)
        if best is None or val > best:
            best = val
            witness = tuple(c - shift for c in point)
    if best is None:
        return None, None
    return best - i * shift, witness


def qtvol_plus(m: TropMatrix):
    """(dequantized volume, witness columns): the maximal tropical d-minor."""
    d = m.rows
    if m.cols < d:
        raise ValidationError(f"need at least {d} columns, got {m.cols}")
    value, _rows, cols = tminor(m, d)
    return value, cols


def cartesian_product(m: TropMatrix, n: TropMatrix) -> TropMatrix:
    """Generator matrix of the product polytope: all stacked column pairs."""
    cols = []
    for jn in range(n.cols):
        for jm in range(m.cols):
            cols.append(m.column(jm) + n.column(jn))
    return TropMatrix.from_columns(
        cols,
        allow_minus_inf_columns=m.allow_minus_inf_columns or n.allow_minus_inf_columns,
    )


def tlsurf(arg, guard: int | None = None) -> tuple:
    """(lower, upper) tropical surface area: the (d-1)-volumes."""
    complex_, shift = _ivol_complex(arg, guard)
    d = complex_.ambient_dim
    if d - 1 < 1:
        raise ValidationError("surface areas need dimension at least 2")
    if shift:
        # re-wrap the original argument so the shift correction is applied once
        minus = tlvol_i_minus(arg, d - 1, guard)[0]
        plus = tlvol_i_plus(arg, d - 1, guard)[0]
    else:
        minus = tlvol_i_minus(complex_, d - 1, guard)[0]
        plus = tlvol_i_plus(complex_, d - 1, guard)[0]
    return minus, plus


def discrete_surface(m: TropMatrix, guard: int | None = None) -> Optional[int]:
    """Log of the second highest counting coefficient, via exact b-samples."""
    complex_ = _as_complex(m, guard)
    bound = log_degree_bound(m)
    samples = [(b, c_dminus1_direct(complex_, b)) for b in range(2, bound + 3)]
    return log_map(samples, bound)


def _fmt_value(v) -> str:
    """Report rendering: every value is a string, rationals reduced as p/q."""
    if v is UNIQUE_GAP:
        return "unique"
    if v is None:
        return "-inf"
    f = Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class VolumeReport:
    """All volume functionals of one matrix, with witnesses."""

    tlvol: Entry
    tlvol_witness: Optional[tuple]
    qtvol_plus: Entry
    qtvol_plus_witness: Optional[tuple]
    tvol: object  # Entry or the "unique" marker
    tvol_witness: Optional[tuple]
    i_volumes: Optional[dict]  # i -> {plus, plus_witness, minus, minus_witness}
    surface: Optional[dict]

    def to_json_dict(self) -> dict:
        fmt = _fmt_value
        out = {
            "tlvol": fmt(self.tlvol),
            "tlvol_witness": list(self.tlvol_witness) if self.tlvol_witness else None,
            "qtvol_plus": fmt(self.qtvol_plus),
            "qtvol_plus_witness": (
                list(self.qtvol_plus_witness) if self.qtvol_plus_witness else None
            ),
            "tvol": fmt(self.tvol),
            "tvol_witness": list(self.tvol_witness) if self.tvol_witness else None,
            "i_volumes": None,
            "surface": None,
        }
        if self.i_volumes is not None:
            out["i_volumes"] = {
                str(i): {
                    "plus": fmt(t["plus"]),
                    "plus_witness": (
                        [fmt(c) for c in t["plus_witness"]]
                        if t["plus_witness"] is not None
                        else None
                    ),
                    "minus": fmt(t["minus"]),
                    "minus_witness": (
                        [fmt(c) for c in t["minus_witness"]]
                        if t["minus_witness"] is not None
                        else None
                    ),
                }
                for i, t in sorted(self.i_volumes.items())
            }
        if self.surface is not None:
            out["surface"] = {
                "lower": fmt(self.surface["lower"]),
                "upper": fmt(self.surface["upper"]),
                "discrete": fmt(self.surface["discrete"]),
            }
        return out


def build_volume_report(
    m: TropMatrix, method: str = "subsets", guard: int | None = None
) -> VolumeReport:
    """Evaluate every functional that applies to the input matrix."""
    if method == "both":
        tl = tlvol(m, "both", guard)
        tl_w = tlvol_subsets(m)[1]
    elif method == "triangulation":
        tl, wit_base = tlvol_triangulation(m, guard)
        tl_w = None
    else:
        tl, tl_w = tlvol_subsets(m)
    if m.cols >= m.rows:
        qv, qv_w = qtvol_plus(m)
    else:
        qv, qv_w = None, None
    if m.rows == m.cols:
        tv = tvol_square(m)
        tv_w = tuple(range(m.cols))
    else:
        tv, tv_w = tvol_max_sub(m)
    ivols = None
    surface = None
    if m.is_finite() and m.is_integer():
        ivols = {}
        for i in range(1, m.rows + 1):
            pv, pw = tlvol_i_plus(m, i, guard)
            mv, mw = tlvol_i_minus(m, i, guard)
            ivols[i] = {
                "plus": pv,
                "plus_witness": pw,
                "minus": mv,
                "minus_witness": mw,
            }
        if m.rows >= 2:
            lo, hi = tlsurf(m, guard)
            surface = {"lower": lo, "upper": hi, "discrete": None}
            if m.is_nonnegative():
                surface["discrete"] = discrete_surface(m, guard)
    return VolumeReport(
        tlvol=tl,
        tlvol_witness=tl_w,
        qtvol_plus=qv,
        qtvol_plus_witness=qv_w,
        tvol=tv,
        tvol_witness=tv_w,
        i_volumes=ivols,
        surface=surface,
    )
