import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import trapezoid

from hermite_bounds.hermite import (eval_weighted, laguerre_expression, log_derivative,
                                    log_weighted_square_grid, ode_residual, psi_grid,
                                    weighted_value, y_of)
from hermite_bounds.zeros import all_zeros

from conftest import hermite_exact, hermite_integer_coeffs


def test_examples():
    assert eval_weighted(0, 0.0).psi_k == pytest.approx(math.pi ** -0.25, rel=1e-15)
    assert eval_weighted(0, 0.0).psi_k == pytest.approx(0.7511255, rel=1e-7)
    assert eval_weighted(1, 0.0).psi_k == 0.0
    assert eval_weighted(2, 2.0).t == pytest.approx(16 / 14, rel=1e-15)


def test_y_of():
    assert y_of(3, 0.0) == 6
    assert y_of(6, math.sqrt(12)) == pytest.approx(0.0, abs=1e-14)
    assert y_of(2, 1.5) == 1.75


@pytest.mark.parametrize("k", range(0, 21))
@pytest.mark.parametrize("x", [Fraction(0), Fraction(1, 3), Fraction(-7, 4), Fraction(9, 2)])
def test_representation_contract_against_exact_polynomial(k, x):
    st_ = eval_weighted(k, float(x))
    exact = hermite_exact(k, x)
    lhs = float(exact) ** 2 * math.exp(-float(x) ** 2)
    got = st_.log_weighted_square()
    if exact == 0:
        assert got.is_zero() or got.log_mag < -60
    else:
        # condition number of evaluating H_k at x; large next to a zero
        coeffs = hermite_integer_coeffs(k)
        cond = float(sum(abs(c * x ** i) for i, c in enumerate(coeffs)) / abs(exact))
        assert got.to_float() == pytest.approx(lhs, rel=1e-13 * cond)
        assert math.copysign(1, st_.psi_k) == (1 if exact > 0 else -1)
        deriv = sum(i * c * x ** (i - 1) for i, c in enumerate(coeffs) if i)
        if k:
            assert st_.t == pytest.approx(float(deriv / exact), rel=1e-13 * cond)


@given(st.integers(min_value=0, max_value=400), st.floats(min_value=0, max_value=60))
def test_parity_exact(k, x):
    a, b = eval_weighted(k, x), eval_weighted(k, -x)
    assert b.psi_k == (-1) ** k * a.psi_k
    assert b.log_scale == a.log_scale


def test_t_finite_iff_psi_nonzero():
    st_ = eval_weighted(1, 0.0)
    assert math.isinf(st_.t)
    assert math.isfinite(eval_weighted(1, 0.5).t)


def test_pole_sign_follows_branch():
    # H_1 = 2x: t = 1/x -> +inf from the right, -inf from the left
    assert log_derivative(1, 1e-320) > 0
    assert log_derivative(1, -1e-320) < 0


def test_far_tail_keeps_log_scale():
    st_ = eval_weighted(10, 80.0)
    assert st_.weighted_value == 0.0  # underflows as a plain float
    ref = 2 * math.log(float(hermite_exact(10, 80))) - 80.0 ** 2
    assert st_.log_weighted_square().log_mag == pytest.approx(ref, rel=1e-13)


def test_high_degree_values_are_finite():
    st_ = eval_weighted(100_000, 447.0)
    assert math.isfinite(st_.psi_k) and math.isfinite(st_.log_scale)
    assert abs(st_.weighted_value) < 1


def test_laguerre_expression_examples():
    r = 1 / math.sqrt(2)
    assert laguerre_expression(2, 2.0) == pytest.approx(1 / (2 - r) ** 2 + 1 / (2 + r) ** 2,
                                                         rel=1e-14)
    assert laguerre_expression(2, 2.0) == pytest.approx(0.7346939, rel=1e-7)
    assert laguerre_expression(1, 2.0) == pytest.approx(0.25, rel=1e-15)
    with pytest.raises(ZeroDivisionError):
        laguerre_expression(1, 0.0)


@given(st.integers(min_value=1, max_value=60), st.floats(min_value=-20, max_value=20))
def test_laguerre_positivity(k, x):
    try:
        v = laguerre_expression(k, x)
    except ZeroDivisionError:
        return
    assert v > 0
    assert v >= y_of(k, x) - 1e-9 * abs(v)


@pytest.mark.parametrize("k", [1, 2, 7, 20, 50])
def test_laguerre_identity_against_zero_sum(k):
    zs = np.array(all_zeros(k).zeros)
    for x in np.linspace(-math.sqrt(2 * k) - 2, math.sqrt(2 * k) + 2, 97):
        if np.min(np.abs(x - zs)) < 1e-3:
            continue
        ref = math.fsum(1 / (x - zs) ** 2)
        assert laguerre_expression(k, float(x)) == pytest.approx(ref, rel=1e-8)


def test_ode_residual_examples():
    assert ode_residual(2, 0.3) < 1e-12
    assert ode_residual(100, 10.0) < 1e-10
    assert ode_residual(5, -1.0) == ode_residual(5, 1.0)
    with pytest.raises(ValueError):
        ode_residual(1, 0.0)


@given(st.integers(min_value=2, max_value=10_000), st.floats(min_value=0, max_value=1))
def test_ode_residual_contract(k, frac):
    x = frac * (math.sqrt(2 * k) + 5)
    assert ode_residual(k, x) <= 1e-10


@pytest.mark.parametrize("k", [0, 1, 10, 57, 200])
def test_normalisation(k):
    edge = math.sqrt(2 * k + 1) + 12
    xs = np.linspace(-edge, edge, 40001)
    _, p, ls = psi_grid(k, xs)
    vals = (p * np.exp(ls)) ** 2
    assert trapezoid(vals, xs) == pytest.approx(1.0, abs=1e-6)


def test_grid_matches_scalar():
    xs = np.linspace(-30, 30, 41)
    _, p, ls = psi_grid(300, xs)
    for x, pv, lv in zip(xs, p, ls):
        st_ = eval_weighted(300, float(x))
        assert pv == pytest.approx(st_.psi_k, rel=1e-12, abs=1e-300)
        assert lv == pytest.approx(st_.log_scale, rel=1e-15)
    lw = log_weighted_square_grid(300, xs[30:31])
    assert lw[0] == pytest.approx(eval_weighted(300, float(xs[30])).log_weighted_square().log_mag,
                                  rel=1e-13)


def test_weighted_value_continuous_in_tail():
    k = 2000
    x = math.sqrt(2 * k) + 1.0
    a, b = weighted_value(k, x), weighted_value(k, x + 1e-9)
    assert a == pytest.approx(b, rel=1e-6)
