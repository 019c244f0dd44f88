"""Exponential Riordan arrays and their production matrices."""

from fractions import Fraction
from math import comb

import pytest

from qeuler.algebra import QPoly, QRatFun
from qeuler.riordan import (
    ExpRiordan,
    LowerTri,
    exp_riordan_from_params,
    lower_tri_inverse,
    production_matrix_direct,
    production_matrix_from_series,
    production_series,
    riordan_matrix,
)
from qeuler.series import TruncSeries


def _rf(value):
    return QRatFun(QPoly(value))


def _pascal_pair(order):
    # g = e^x, f = x gives the Pascal matrix
    return ExpRiordan(TruncSeries.x(order).exp(), TruncSeries.x(order))


# -- validation ----------------------------------------------------------------


def test_exp_riordan_validates_shape():
    order = 5
    with pytest.raises(ValueError):
        ExpRiordan(TruncSeries.x(order), TruncSeries.x(order))  # g(0) = 0
    with pytest.raises(ValueError):
        ExpRiordan(TruncSeries.constant(order, 1), TruncSeries.constant(order, 1))  # f(0) != 0
    with pytest.raises(ValueError):
        ExpRiordan(
            TruncSeries.constant(order, 1),
            TruncSeries.x(order) * TruncSeries.x(order),
        )  # f'(0) = 0
    with pytest.raises(ValueError):
        ExpRiordan(TruncSeries.constant(4, 1), TruncSeries.x(5))


def test_lower_tri_rejects_upper_entries_and_ragged_rows():
    with pytest.raises(ValueError):
        LowerTri([[_rf(1), _rf(2)], [_rf(0), _rf(1)]])
    with pytest.raises(ValueError):
        LowerTri([[_rf(1)], [_rf(1), _rf(1)]])  # rows must be square


def test_lower_tri_identity_and_matmul():
    eye = LowerTri.identity(3)
    m = LowerTri(
        [
            [_rf(1), _rf(0), _rf(0)],
            [_rf(2), _rf(1), _rf(0)],
            [_rf(3), _rf(4), _rf(1)],
        ]
    )
    assert eye @ m == m
    assert m @ eye == m
    assert m.entry(2, 0) == _rf(3)
    assert m.entry(0, 2) == _rf(0)


# -- matrices from (g, f) --------------------------------------------------------


def test_pascal_matrix_and_inverse():
    order = 7
    mat = riordan_matrix(_pascal_pair(order))
    for n in range(order):
        for k in range(n + 1):
            assert mat.entry(n, k) == _rf(comb(n, k))
    inv = lower_tri_inverse(mat)
    for n in range(order):
        for k in range(n + 1):
            assert inv.entry(n, k) == _rf((-1) ** (n - k) * comb(n, k))
    assert inv @ mat == LowerTri.identity(order)


def test_first_column_holds_the_polynomials():
    arr = exp_riordan_from_params(1, 1, 1, 6)
    mat = riordan_matrix(arr)
    want = [QPoly(1), QPoly(1), QPoly(1, 1), QPoly(1, 4, 1), QPoly(1, 11, 11, 1)]
    for n, poly in enumerate(want):
        # column 0 entry is n! [x^n] g, a polynomial in q
        assert mat.entry(n, 0) == QRatFun(poly)


def test_singular_diagonal_has_no_inverse():
    m = LowerTri([[_rf(1), _rf(0)], [_rf(2), _rf(0)]])
    with pytest.raises(ValueError):
        lower_tri_inverse(m)


def test_exp_riordan_from_params_rejects_d_zero():
    with pytest.raises(ValueError):
        exp_riordan_from_params(1, 1, 0, 5)


# -- production matrices ---------------------------------------------------------


@pytest.mark.parametrize(
    "a,b,d",
    [
        (1, 1, 1),
        (0, 1, 1),
        (1, 2, 1),
        (1, 1, 2),
        (2, 1, 5),
        (1, Fraction(1, 2), 1),
        (1, 1, Fraction(3, 2)),
    ],
)
def test_production_matrix_two_routes_agree(a, b, d):
    arr = exp_riordan_from_params(a, b, d, 8)
    direct = production_matrix_direct(riordan_matrix(arr))
    c, r = production_series(arr)
    formula = production_matrix_from_series(c, r)
    rows = min(direct.nrows, formula.nrows)
    for i in range(rows):
        for j in range(min(direct.ncols, formula.ncols)):
            assert direct.entry(i, j) == formula.entry(i, j), (a, b, d, i, j)
    assert direct.tridiagonal and formula.tridiagonal


def test_production_weights_match_closed_forms():
    arr = exp_riordan_from_params(1, 1, 1, 9)
    prod = production_matrix_direct(riordan_matrix(arr))
    s = prod.s_values(5)
    t = prod.t_values(4)
    for i in range(5):
        assert s[i] == QPoly(i + 1, i)
    for i in range(4):
        assert t[i] == QPoly(0, (i + 1) ** 2)


def test_production_matrix_shape_and_json():
    arr = exp_riordan_from_params(1, 1, 2, 6)
    prod = production_matrix_direct(riordan_matrix(arr))
    assert prod.nrows == 5 and prod.ncols == 6
    data = prod.to_json()
    assert data["tridiagonal"] is True
    assert len(data["entries"]) == prod.nrows


def test_defining_identity_l_times_p_is_shifted_l():
    # P = L^{-1} Lbar means L P must reproduce L with its first row removed
    arr = exp_riordan_from_params(1, 1, 2, 7)
    mat = riordan_matrix(arr)
    prod = production_matrix_direct(mat)
    for n in range(prod.nrows):
        for j in range(n + 2):
            acc = QRatFun(0)
            for k in range(n + 1):
                acc = acc + mat.entry(n, k) * prod.entry(k, j)
            assert acc == mat.entry(n + 1, j)


def test_non_family_array_still_consistent():
    # g = 1/(1-x), f = x/(1-x): not from the parametrized family, and the
    # two production routes must still agree entry by entry
    order = 6
    one_minus_x = TruncSeries.constant(order, 1) - TruncSeries.x(order)
    g = one_minus_x.inverse()
    f = TruncSeries.x(order) * g
    arr = ExpRiordan(g, f)
    direct = production_matrix_direct(riordan_matrix(arr))
    c, r = production_series(arr)
    formula = production_matrix_from_series(c, r)
    for i in range(min(direct.nrows, formula.nrows)):
        for j in range(min(direct.ncols, formula.ncols)):
            assert direct.entry(i, j) == formula.entry(i, j)


def test_production_requires_enough_terms():
    with pytest.raises(ValueError):
        production_series(exp_riordan_from_params(1, 1, 1, 2))
