"""Tropical determinants, stars, minors, rank and genericity."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tropevol.core import MINUS_INF, TropMatrix, tadd
from tropevol.errors import ValidationError
from tropevol.linalg import (
    UNIQUE_GAP,
    assignment_normalize,
    bideterminant,
    is_nonsingular,
    is_nonsingular_brute,
    is_sign_generic,
    kleene_star,
    tdet,
    tdet_brute,
    tdet_second,
    tminor,
    tropical_rank,
    tvol_max_sub,
    tvol_square,
)


@st.composite
def square_matrices(draw, max_n=4, lo=-9, hi=9, inf_chance=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if draw(st.integers(min_value=0, max_value=inf_chance)) == 0:
                row.append(None)
            else:
                row.append(draw(st.integers(min_value=lo, max_value=hi)))
        rows.append(tuple(row))
    return TropMatrix(tuple(rows), allow_minus_inf_columns=True)


def test_tdet_examples():
    m = TropMatrix.from_rows([[0, 2], [1, 0]])
    r = tdet(m)
    assert r.value == 3
    assert r.sigma == (1, 0)
    assert tdet_brute(m) == 3
    assert tdet_second(m) == 0
    assert tvol_square(m) == 3
    with pytest.raises(ValidationError):
        tdet(TropMatrix.from_rows([[0, 1, 2], [0, 1, 2]]))


def test_tdet_all_minus_inf_permutations():
    m = TropMatrix.from_rows([[0, 0], [None, None]], allow_minus_inf_columns=True)
    assert tdet(m).value is MINUS_INF
    assert tdet_brute(m) is MINUS_INF


def test_tdet_duals_certify_optimality():
    m = TropMatrix.from_rows([[0, 2, None], [1, 0, 4], [None, 3, 1]])
    r = tdet(m)
    assert r.value == tdet_brute(m)
    assert r.value == sum(r.u) + sum(r.v)
    for i in range(3):
        for j in range(3):
            e = m.entries[i][j]
            if e is not None:
                assert r.u[i] + r.v[j] >= e
        assert r.u[i] + r.v[r.sigma[i]] == m.entries[i][r.sigma[i]]


@given(m=square_matrices())
@settings(max_examples=150, deadline=None)
def test_tdet_matches_brute_force(m):
    r = tdet(m)
    assert r.value == tdet_brute(m)
    if r.value is not MINUS_INF:
        # the reported permutation attains the optimum
        attained = sum(m.entries[i][r.sigma[i]] for i in range(m.rows))
        assert attained == r.value


def test_tdet_second_and_unique_marker():
    u = TropMatrix.from_rows([[0, None], [None, 0]], allow_minus_inf_columns=True)
    assert tdet_second(u) is MINUS_INF
    assert tvol_square(u) is UNIQUE_GAP
    tie = TropMatrix.from_rows([[0, 0], [0, 0]])
    assert tdet_second(tie) == 0
    assert tvol_square(tie) == 0


def test_tvol_max_sub():
    m = TropMatrix.from_rows([[0, 2, 5], [1, 0, 0]])
    value, cols = tvol_max_sub(m)
    assert value == 6
    assert cols == (0, 2)


@given(m=square_matrices(max_n=4))
@settings(max_examples=100, deadline=None)
def test_nonsingularity_matches_brute_force(m):
    assert is_nonsingular(m) == is_nonsingular_brute(m)


def test_nonsingular_examples():
    assert is_nonsingular(TropMatrix.from_rows([[0, 5], [5, 0]]))
    assert not is_nonsingular(TropMatrix.from_rows([[0, 0], [0, 0]]))


def test_kleene_star_properties():
    c = TropMatrix.from_rows([[0, -1], [-2, 0]])
    s = kleene_star(c)
    assert s.entries == ((0, -1), (-2, 0))
    # star is idempotent and dominates its argument
    ss = kleene_star(s)
    assert ss.entries == s.entries
    with pytest.raises(ValidationError):
        kleene_star(TropMatrix.from_rows([[0, 1], [0, 0]]))


def test_kleene_star_transitive_closure():
    c = TropMatrix.from_rows([[0, -1, None], [None, 0, -1], [None, None, 0]],)
    s = kleene_star(c)
    assert s.entries[0][2] == -2  # two-step path beats the missing direct edge


def _brute_bideterminant(m):
    n = m.rows
    plus = None
    minus = None
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if perm[a] > perm[b]
        )
        term = (
            None
            if any(m.entries[i][perm[i]] is None for i in range(n))
            else sum(m.entries[i][perm[i]] for i in range(n))
        )
        if inversions % 2 == 0:
            plus = tadd(plus, term)
        else:
            minus = tadd(minus, term)
    return plus, minus


@given(m=square_matrices(max_n=4, lo=-5, hi=5))
@settings(max_examples=80, deadline=None)
def test_bideterminant_matches_permutation_split(m):
    d = bideterminant(m)
    plus, minus = _brute_bideterminant(m)
    assert d.plus == plus
    assert d.minus == minus
    assert tadd(d.plus, d.minus) == tdet(m).value


def test_tminor_examples():
    m = TropMatrix.from_rows([[0, 2], [1, 0]])
    assert tminor(m, 1) == (2, (0,), (1,))
    value, rows, cols = tminor(m, 2)
    assert value == 3
    sub = m.submatrix(rows, cols)
    assert tdet(sub).value == value


@given(m=square_matrices(max_n=4, lo=0, hi=6, inf_chance=6))
@settings(max_examples=40, deadline=None)
def test_tminor_is_max_over_submatrices(m):
    for i in range(1, m.rows + 1):
        value, rows, cols = tminor(m, i)
        best = MINUS_INF
        for rr in itertools.combinations(range(m.rows), i):
            for cc in itertools.combinations(range(m.cols), i):
                best = tadd(best, tdet(m.submatrix(rr, cc)).value)
        assert value == best


def test_tropical_rank():
    assert tropical_rank(TropMatrix.from_rows([[0, 0], [0, 0]])) == 1
    assert tropical_rank(TropMatrix.from_rows([[0, None], [None, 0]])) == 2
    m = TropMatrix.from_rows([[0, 1, 2], [1, 2, 3]])
    assert tropical_rank(m) == 1  # second row is a tropical multiple of the first


def test_sign_genericity():
    assert is_sign_generic(TropMatrix.from_rows([[0, 5], [5, 0]]), 2)
    dup = TropMatrix.from_rows([[1, 1], [3, 3]])
    assert not is_sign_generic(dup, 2)


def test_assignment_normalize():
    a = TropMatrix.from_rows([[0, 2], [1, 0]])
    norm = assignment_normalize(a)
    n = norm.matrix
    for i in range(2):
        assert n.entries[i][i] == 0
        for j in range(2):
            assert tadd(n.entries[i][j], 0) == 0  # off-diagonal <= 0
            assert (
                n.entries[i][j]
                == a.entries[i][norm.sigma[j]] - norm.u[i] - norm.v[norm.sigma[j]]
            )
