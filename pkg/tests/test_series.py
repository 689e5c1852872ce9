"""Truncated power series and the structure-theorem expansion."""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knotcover.laurent_poly import LaurentPoly
from knotcover.series import (
    FractionalExponent,
    NonzeroConstantTerm,
    OrderExceeded,
    PowerSeries,
    donaldson_series_xk,
    extract_qk,
    ps_exp,
    witten_coefficient,
)

UNKNOT = LaurentPoly.one()
TREFOIL = LaurentPoly(-1, (1, -1, 1))
FIG8 = LaurentPoly(-1, (-1, 3, -1))

small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=6)
zero_head_series = st.lists(small_fracs, min_size=0, max_size=5).map(
    lambda cs: PowerSeries(6, [0] + cs)
)


def test_power_series_basics():
    p = PowerSeries(3, [1, 2])
    assert p.coeff(0) == 1 and p.coeff(1) == 2 and p.coeff(3) == 0
    assert (PowerSeries(2, [1, 1]) * PowerSeries(2, [1, -1])).coeffs == (
        Fraction(1),
        Fraction(0),
        Fraction(-1),
    )
    with pytest.raises(OrderExceeded):
        p.coeff(4)
    with pytest.raises(ValueError):
        p.coeff(-1)
    with pytest.raises(ValueError):
        PowerSeries(-1)


def test_power_series_truncation_to_min_order():
    a = PowerSeries(5, [1, 1, 1, 1, 1, 1])
    b = PowerSeries(2, [1, 1, 1])
    assert (a * b).order == 2
    assert (a + b).order == 2


def test_power_series_scalar_arithmetic():
    a = PowerSeries(3, [1, 2, 3, 4])
    assert (2 * a).coeffs == (2, 4, 6, 8)
    assert (a * Fraction(1, 2)).coeffs == (Fraction(1, 2), 1, Fraction(3, 2), 2)
    assert (a + 1).coeff(0) == 2
    assert (a - 1).coeff(0) == 0


def test_exponential_series():
    e = PowerSeries.exponential(1, 1, 5)
    assert [e.coeff(k) for k in range(6)] == [Fraction(1, math.factorial(k)) for k in range(6)]
    g = PowerSeries.exponential(Fraction(1, 2), 2, 6)
    assert g.coeff(2) == Fraction(1, 2)
    assert g.coeff(4) == Fraction(1, 8)
    assert g.coeff(6) == Fraction(1, 48)
    assert g.coeff(3) == 0
    with pytest.raises(ValueError):
        PowerSeries.exponential(1, 0, 4)


def test_ps_exp_constant_term_guard():
    with pytest.raises(NonzeroConstantTerm):
        ps_exp(PowerSeries(3, [1]))


def test_ps_exp_matches_exponential():
    assert ps_exp(PowerSeries(6, [0, 1])) == PowerSeries.exponential(1, 1, 6)
    assert ps_exp(PowerSeries(6, [0, 0, Fraction(3, 2)])) == PowerSeries.exponential(
        Fraction(3, 2), 2, 6
    )


@given(zero_head_series, zero_head_series)
@settings(max_examples=80)
def test_ps_exp_group_law(a, b):
    assert ps_exp(a + b) == ps_exp(a) * ps_exp(b)


@given(zero_head_series)
def test_ps_exp_inverse(a):
    assert ps_exp(a) * ps_exp(-a) == PowerSeries(a.order, [1])


def test_donaldson_series_fig8_frozen():
    series = donaldson_series_xk(FIG8, 0, 1, 6)
    assert series.coeffs[:5] == (
        Fraction(1),
        Fraction(0),
        Fraction(-4),
        Fraction(0),
        Fraction(-4, 3),
    )


def test_donaldson_series_trefoil_is_shifted_cosh():
    # trefoil coefficients 1,-1,1 at degrees -1,0,1 give 2cosh(2 F.h s) - 1
    series = donaldson_series_xk(TREFOIL, 0, 1, 8)
    for j in range(9):
        if j % 2 == 1:
            assert series.coeff(j) == 0
        else:
            want = 2 * Fraction(2**j, math.factorial(j)) - (1 if j == 0 else 0)
            assert series.coeff(j) == want


def test_donaldson_series_unknot_is_pure_gaussian():
    for q_h in (0, 1, 2, -3):
        series = donaldson_series_xk(UNKNOT, q_h, 5, 20)
        assert series == PowerSeries.exponential(Fraction(q_h, 2), 2, 20)


def test_donaldson_series_no_f_dependence_for_unknot():
    assert donaldson_series_xk(UNKNOT, 1, 7, 10) == donaldson_series_xk(UNKNOT, 1, 0, 10)


def test_donaldson_series_factorizes():
    # the Gaussian prefactor is an exact factor of the full series
    full = donaldson_series_xk(FIG8, 3, 2, 8)
    bare = donaldson_series_xk(FIG8, 0, 2, 8)
    gauss = PowerSeries.exponential(Fraction(3, 2), 2, 8)
    assert full == gauss * bare


def test_witten_coefficient_values():
    assert witten_coefficient(24, -16, 1) == 1
    assert witten_coefficient(4, 0, 1) == 512
    assert witten_coefficient(4, 0, -2) == -1024
    assert witten_coefficient(-4, 0, 1) == Fraction(1, 32)
    with pytest.raises(FractionalExponent):
        witten_coefficient(5, 0, 1)


def test_extract_qk():
    gauss = PowerSeries.exponential(1, 2, 10)
    # exp(s^2): coefficient of s^(2m) is 1/m!, so the degree-4m invariant
    # recovers (2m)!/m!
    assert extract_qk(gauss, 0) == 1
    assert extract_qk(gauss, 4) == 2
    assert extract_qk(gauss, 8) == Fraction(math.factorial(4), math.factorial(2))
    with pytest.raises(ValueError):
        extract_qk(gauss, 3)
    with pytest.raises(ValueError):
        extract_qk(gauss, -2)
    with pytest.raises(OrderExceeded):
        extract_qk(gauss, 30)


def test_extract_qk_fig8_hand_values():
    series = donaldson_series_xk(FIG8, 0, 1, 12)
    hand = {0: 1, 1: 0, 2: -4, 3: 0, 4: Fraction(-4, 3), 6: Fraction(-8, 45)}
    for j, coeff in hand.items():
        assert series.coeff(j) == coeff
        assert extract_qk(series, 2 * j) == coeff * math.factorial(j)
