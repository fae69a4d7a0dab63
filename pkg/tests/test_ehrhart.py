"""Base-b lattice counting, counting polynomials and their coefficients."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tropevol.cells import AlcovedSimplex, enumerate_triangulation
from tropevol.core import TropMatrix
from tropevol.ehrhart import (
    c_dminus1_direct,
    c_top_leading,
    cell_rvol,
    classical_ehrhart_scaled_simplex,
    coefficient_in_b,
    coeffs_via_formula,
    count_classical_dilate,
    count_maxtimes,
    count_tropical,
    count_via_cells,
    ehrhart_report,
    log_coefficient,
    log_degree_bound,
    log_map,
    reciprocity_check,
    tropical_ehrhart_poly,
)
from tropevol.errors import GuardExceeded, ValidationError
from tropevol.fixtures import alcove_simplex, cube, fix_l, fix_tri


# Frozen count tables for the triangle-with-tail shape, length parameter 4.
# Derived from three independent routes: the raw box scan in the b-power
# domain, the per-cell chain counting, and evaluation of the interpolated
# polynomial.
L4_COUNTS = {2: [9, 18, 39, 93], 3: [30, 100, 406, 2188]}
L4_COEFFS = {
    2: (Fraction(1), Fraction(15, 2), Fraction(1, 2)),
    3: (Fraction(1), Fraction(27), Fraction(2)),
}


def test_count_basics():
    m = fix_l(4)
    assert count_maxtimes(m, 2, 1) == 9
    for b, expected in L4_COUNTS.items():
        for k, n in enumerate(expected):
            assert count_tropical(m, b, k) == n
            assert count_via_cells(m, b, k) == n


def test_count_single_point():
    m = TropMatrix.from_rows([[1], [2]])
    assert count_tropical(m, 2, 0) == 1
    assert count_tropical(m, 2, 3) == 1


def test_count_cube_closed_form():
    # [-inf, 0]^d meets the base-b grid in (b^k + 1)^d points after k scalings
    for d in (1, 2, 3):
        m = cube(d)
        for b in (2, 3):
            for k in (0, 1, 2):
                assert count_tropical(m, b, k) == (b**k + 1) ** d


def test_count_validation():
    with pytest.raises(ValidationError):
        count_tropical(fix_l(4), 1, 0)
    with pytest.raises(ValidationError):
        count_tropical(TropMatrix.from_rows([[0, -1], [0, 0]]), 2, 0)
    with pytest.raises(GuardExceeded):
        count_tropical(fix_l(4), 2, 5, guard=10)


def test_polynomial_interpolation_frozen_values():
    m = fix_l(4)
    for b, coeffs in L4_COEFFS.items():
        poly = tropical_ehrhart_poly(m, b)
        assert poly.coeffs == coeffs
        assert coeffs_via_formula(m, b) == coeffs
        for k, n in enumerate(L4_COUNTS[b]):
            assert poly.evaluate(k) == n
        assert poly.verified_at is not None


def test_polynomial_rejects_minus_inf():
    with pytest.raises(ValidationError):
        tropical_ehrhart_poly(cube(2), 2)


def test_second_coefficient_of_triangle_with_edge():
    # half-open boundary plus a pendant edge; both derivation routes agree
    expected = {(3, 0, 2): 3, (3, 1, 2): 5, (3, 0, 3): 11, (3, 1, 3): 17}
    for (l, k, b), value in expected.items():
        m = fix_tri(l, k)
        assert tropical_ehrhart_poly(m, b).coeffs[1] == value
        assert coeffs_via_formula(m, b)[1] == value
        assert c_dminus1_direct(m, b) == value
        assert coefficient_in_b(m, 1, b) == value


def test_unit_alcove_coefficients():
    m = alcove_simplex((1, 2))
    assert tropical_ehrhart_poly(m, 2).coeffs == (1, 4, 4)
    assert coeffs_via_formula(m, 2) == (1, 4, 4)


def test_leading_coefficient_closed_form():
    for m in (fix_l(4), fix_tri(3, 1), alcove_simplex((1, 2))):
        for b in (2, 3):
            assert c_top_leading(m, b) == tropical_ehrhart_poly(m, b).coeffs[-1]


def test_classical_dilate_counts():
    m = fix_l(2)  # unimodular triangle
    for k in (1, 2, 3):
        assert count_classical_dilate(m, k) == (k + 1) * (k + 2) // 2


def test_scaled_cell_polynomial():
    # diagonal unit cell based at (1,1): after base-2 coordinate scaling the
    # segment runs to (2t, 2t) and carries 2t + 1 lattice points
    cell = AlcovedSimplex.from_chain([(1, 1), (2, 2)])
    p = classical_ehrhart_scaled_simplex(cell, 2)
    assert p.coeffs == (1, 2)
    assert p.rvol == 2
    assert cell_rvol(cell, 2) == 2


def test_cell_rvol_matches_polynomial_leading_coefficient():
    for m in (fix_l(4), fix_tri(3, 1)):
        cx = enumerate_triangulation(m)
        for cell in cx.cells:
            for b in (2, 3):
                p = classical_ehrhart_scaled_simplex(cell, b)
                assert p.rvol == cell_rvol(cell, b)


def test_coefficient_homogeneity_under_translation():
    m = fix_tri(3, 0)
    b = 2
    base = tropical_ehrhart_poly(m, b).coeffs
    shifted = tropical_ehrhart_poly(m.translate(1), b).coeffs
    assert shifted == tuple(c * b**i for i, c in enumerate(base))


def test_counting_is_a_valuation_on_a_union():
    # triangle and pendant segment overlapping in one point
    b = 2
    tri = TropMatrix.from_rows([[1, 2, 2], [0, 0, 1]])
    seg = TropMatrix.from_rows([[2, 3], [1, 2]])
    union = TropMatrix.from_rows([[1, 2, 2, 3], [0, 0, 1, 2]])
    point = TropMatrix.from_rows([[2], [1]])
    for k in (0, 1, 2):
        assert (
            count_tropical(union, b, k) + count_tropical(point, b, k)
            == count_tropical(tri, b, k) + count_tropical(seg, b, k)
        )


def test_reciprocity_on_pure_shapes():
    assert reciprocity_check(fix_tri(3, 0), 2)
    assert reciprocity_check(fix_l(2), 2)
    assert reciprocity_check(alcove_simplex((1, 2)), 3)
    with pytest.raises(ValidationError):
        reciprocity_check(fix_l(4), 2)  # tail makes the complex non-pure


def test_reciprocity_rejects_flat_pure_complexes():
    # A branching tree of segments in the plane: all maximal cells are
    # one-dimensional, yet the interior counts break the sign pattern at
    # the branch vertex, so the identity's hypothesis excludes it.
    tree = TropMatrix(((3, 2, 3, 1), (2, 0, 2, 1)))
    with pytest.raises(ValidationError):
        reciprocity_check(tree, 2)


def test_log_map():
    # 2 b^3 + b: degree 3 regardless of small low-order noise
    samples = [(b, 2 * b**3 + b) for b in range(2, 9)]
    assert log_map(samples, 3) == 3
    assert log_map([(b, 0) for b in range(2, 9)], 3) is None
    assert log_map([(b, Fraction(1, 2)) for b in range(2, 9)], 3) == 0
    with pytest.raises(ValidationError):
        log_map([(b, Fraction(1, b)) for b in range(2, 9)], 3)


def test_log_degree_bound():
    m = fix_l(4)
    assert log_degree_bound(m) >= 2 * (1 + 3)


def test_log_coefficients_frozen():
    assert log_coefficient(fix_tri(3, 0), 1) == 3
    assert log_coefficient(fix_tri(3, 1), 1) == 3
    assert log_coefficient(fix_tri(3, 2), 1) == 3
    assert log_coefficient(fix_l(4), 1) == 3
    assert log_coefficient(fix_tri(3, 0), 0) == 0
    assert log_coefficient(fix_tri(3, 0), 2) == 4


def test_ehrhart_report_shape():
    rep = ehrhart_report(fix_l(4), 2, 3)
    assert rep["agree"] is True
    assert rep["coeffs"] == ["1", "15/2", "1/2"]
    assert [c["value"] for c in rep["counts"]] == [9, 18, 39, 93]


@st.composite
def counting_matrices(draw):
    d = draw(st.integers(min_value=1, max_value=2))
    ncols = draw(st.integers(min_value=1, max_value=4))
    cols = [
        tuple(draw(st.integers(min_value=0, max_value=3)) for _ in range(d))
        for _ in range(ncols)
    ]
    return TropMatrix.from_columns(cols)


@given(m=counting_matrices(), b=st.sampled_from([2, 3]))
@settings(max_examples=30, deadline=None)
def test_interpolation_agrees_with_cell_formula(m, b):
    assert tropical_ehrhart_poly(m, b).coeffs == coeffs_via_formula(m, b)


@given(m=counting_matrices(), b=st.sampled_from([2, 3]), k=st.integers(min_value=0, max_value=2))
@settings(max_examples=30, deadline=None)
def test_count_routes_agree(m, b, k):
    assert count_tropical(m, b, k) == count_via_cells(m, b, k)
