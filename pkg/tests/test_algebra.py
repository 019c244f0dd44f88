"""Exact polynomial and rational-function arithmetic."""

import random
from fractions import Fraction

import pytest

from qeuler.algebra import (
    NEG_INF,
    QPoly,
    QRatFun,
    as_fraction,
    parse_rational,
    poly_gcd,
)


def _rand_poly(rng, max_deg, allow_zero=True):
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(deg + 1)]
    p = QPoly(*coeffs)
    if not allow_zero and p.is_zero:
        return p + 1
    return p


# -- scalars -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text,value",
    [("3", Fraction(3)), ("-7/2", Fraction(-7, 2)), ("+1/3", Fraction(1, 3)), ("0", 0)],
)
def test_parse_rational_accepts_exact_literals(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "1/-2", "", "q", "1 / 2", "nan"])
def test_parse_rational_rejects_inexact_or_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_fraction_refuses_floats_and_bools():
    assert as_fraction(5) == 5
    assert as_fraction(Fraction(2, 7)) == Fraction(2, 7)
    assert as_fraction("-3/4") == Fraction(-3, 4)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


# -- QPoly basics ------------------------------------------------------------


def test_qpoly_normalizes_trailing_zeros():
    assert QPoly(1, 2, 0, 0) == QPoly(1, 2)
    assert QPoly(0, 0).is_zero
    assert QPoly().degree == NEG_INF
    assert QPoly(0, 0, 3).degree == 2


def test_qpoly_is_immutable_and_hashable():
    p = QPoly(1, 1)
    with pytest.raises(AttributeError):
        p.coeffs = (2,)
    assert len({QPoly(1, 1), QPoly(1, 1), QPoly(1)}) == 2


def test_qpoly_accessors():
    p = QPoly(5, 0, Fraction(1, 2))
    assert p.constant == 5
    assert p.lead == Fraction(1, 2)
    assert p.coefficient(1) == 0
    assert p.coefficient(99) == 0
    assert QPoly(2, 4).monic() == QPoly(Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        QPoly().lead


def test_qpoly_equals_scalars():
    assert QPoly(3) == 3
    assert QPoly() == 0
    assert QPoly(Fraction(1, 2)) == Fraction(1, 2)
    assert QPoly(1, 1) != 1


def test_qpoly_arithmetic_hand_cases():
    q = QPoly(0, 1)
    assert (1 + q) * (1 + q) == QPoly(1, 2, 1)
    assert (1 + q) ** 3 == QPoly(1, 3, 3, 1)
    assert (QPoly(1, 4, 1) - 1).divide_by_q() == QPoly(4, 1)
    assert QPoly(2, 4) / 2 == QPoly(1, 2)
    assert 1 - q == QPoly(1, -1)
    assert q * 0 == QPoly()


def test_qpoly_power_zero_and_division_errors():
    assert QPoly(2, 5) ** 0 == 1
    with pytest.raises(ValueError):
        QPoly(1, 1) ** -1
    with pytest.raises(ZeroDivisionError):
        QPoly(1, 1) / 0
    with pytest.raises(ValueError):
        QPoly(1, 1).divide_by_q()


def test_qpoly_refuses_floats_everywhere():
    with pytest.raises(TypeError):
        QPoly(0.5)
    assert QPoly(1, 1).__add__(0.5) is NotImplemented


def test_qpoly_evaluation_and_composition():
    p = QPoly(1, 4, 1)
    assert p(Fraction(1)) == 6
    assert p(Fraction(-1)) == -2
    # evaluation at a polynomial point is composition
    inner = QPoly(0, 2)
    assert p(inner) == QPoly(1, 8, 4)


def test_qpoly_derivative_and_nonnegativity():
    assert QPoly(7, 3, 0, 5).derivative() == QPoly(3, 0, 15)
    assert QPoly(0, 1, 2).is_nonneg()
    assert not QPoly(1, -1).is_nonneg()
    assert QPoly().is_nonneg()


def test_qpoly_ring_axioms_on_random_inputs():
    rng = random.Random(20240811)
    for _ in range(60):
        f, g, h = (_rand_poly(rng, 5) for _ in range(3))
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)
        assert f - f == 0
        assert f * 1 == f


def test_qpoly_str_forms():
    assert str(QPoly(1, 4, 1)) == "1 + 4*q + q^2"
    assert str(QPoly()) == "0"
    assert str(QPoly(0, -1, Fraction(1, 2))) == "-q + 1/2*q^2"


def test_qpoly_json_round_trip():
    p = QPoly(1, Fraction(-3, 2), 0, 7)
    assert p.to_json() == ["1", "-3/2", "0", "7"]
    assert QPoly.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        QPoly.from_json(["1.5"])


# -- gcd ---------------------------------------------------------------------


def test_poly_gcd_common_factor_comes_back_monic():
    f = QPoly(1, 1) ** 2 * QPoly(2, 1)
    g = QPoly(1, 1) * QPoly(3, 1)
    assert poly_gcd(f, g) == QPoly(1, 1)
    assert poly_gcd(QPoly(2, 2), QPoly(4, 4)) == QPoly(1, 1)


def test_poly_gcd_coprime_and_degenerate_inputs():
    assert poly_gcd(QPoly(1, 1), QPoly(1, -1)) == 1
    assert poly_gcd(QPoly(5), QPoly(0, 0, 3)) == 1
    assert poly_gcd(QPoly(), QPoly(0, 2)) == QPoly(0, 1)
    with pytest.raises(ValueError):
        poly_gcd(QPoly(), QPoly())


def test_poly_gcd_divides_both_on_random_inputs():
    rng = random.Random(911)
    for _ in range(40):
        common = _rand_poly(rng, 3, allow_zero=False)
        f = common * _rand_poly(rng, 3, allow_zero=False)
        g = common * _rand_poly(rng, 3, allow_zero=False)
        d = poly_gcd(f, g)
        assert d.lead == 1
        # gcd must absorb the planted factor
        assert d.degree >= common.degree
        assert QRatFun(f, d).is_polynomial and QRatFun(g, d).is_polynomial


# -- QRatFun -----------------------------------------------------------------


def test_qratfun_canonical_form():
    r = QRatFun(QPoly(0, 2), QPoly(4, 4))
    assert r.num == QPoly(0, Fraction(1, 2)) and r.den == QPoly(1, 1)
    assert QRatFun(QPoly(2, 2), QPoly(1, 1)) == QRatFun(QPoly(2))
    assert QRatFun(QPoly(), QPoly(5, 3)) == QRatFun(0)
    assert QRatFun(QPoly(1, 2, 1), QPoly(1, 1)) == QRatFun(QPoly(1, 1))


def test_qratfun_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        QRatFun(QPoly(1), QPoly())
    with pytest.raises(ZeroDivisionError):
        QRatFun(1).__truediv__(QRatFun(0))
    with pytest.raises(ZeroDivisionError):
        QRatFun(0).reciprocal()


def test_qratfun_arithmetic_hand_cases():
    one_minus = QRatFun(1, QPoly(1, -1))  # 1/(1-q)
    one_plus = QRatFun(1, QPoly(1, 1))
    assert one_minus + one_plus == QRatFun(QPoly(2), QPoly(1, 0, -1))
    assert one_minus * QPoly(1, -1) == QRatFun(1)
    assert one_minus - one_minus == QRatFun(0)
    assert one_minus.reciprocal() == QRatFun(QPoly(1, -1))
    assert QRatFun(QPoly(0, 1)) ** -2 * QPoly(0, 1) == QRatFun(1, QPoly(0, 1))


def test_qratfun_as_poly_and_diagnostics():
    assert QRatFun(QPoly(1, 2)).as_poly() == QPoly(1, 2)
    r = QRatFun(1, QPoly(1, 1))
    assert not r.is_polynomial
    with pytest.raises(ValueError):
        r.as_poly()


def test_qratfun_field_axioms_by_evaluation():
    # compare through evaluation at points that dodge every pole
    rng = random.Random(7)
    points = [Fraction(5), Fraction(7, 2), Fraction(-9, 4)]
    for _ in range(25):
        f = QRatFun(_rand_poly(rng, 4), _rand_poly(rng, 3, allow_zero=False))
        g = QRatFun(_rand_poly(rng, 4), _rand_poly(rng, 3, allow_zero=False))
        for p in points:
            fv = f.num(p) / f.den(p)
            gv = g.num(p) / g.den(p)
            prod = f * g
            tot = f + g
            if prod.den(p) and tot.den(p):
                assert prod.num(p) / prod.den(p) == fv * gv
                assert tot.num(p) / tot.den(p) == fv + gv


def test_qratfun_json_round_trip():
    # canonical form keeps the denominator monic, so 1/(1-q) = -1/(q-1)
    r = QRatFun(QPoly(0, 1), QPoly(1, -1))
    data = r.to_json()
    assert data == {"num": ["0", "-1"], "den": ["-1", "1"]}
    assert QRatFun.from_json(data) == r
