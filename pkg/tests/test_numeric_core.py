import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hermite_bounds.numeric_core import (Bracket, ScaledValue, log_factorial,
                                         scaled_from_real, solve_bracketed)

finite = st.floats(min_value=-1e150, max_value=1e150, allow_nan=False).filter(
    lambda v: v == 0 or abs(v) > 1e-150)


def test_scaled_from_real_examples():
    assert scaled_from_real(0.0).sign == 0
    one = scaled_from_real(1.0)
    assert (one.sign, one.log_mag) == (1, 0.0)
    v = scaled_from_real(-math.e ** 2)
    assert v.sign == -1
    assert v.log_mag == pytest.approx(2.0, rel=1e-15)


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_scaled_from_real_rejects_nonfinite(bad):
    with pytest.raises(ValueError):
        scaled_from_real(bad)


@given(st.floats(min_value=1e-300, max_value=1e300), st.sampled_from([-1, 1]))
def test_round_trip_within_one_ulp(mag, sign):
    x = sign * mag
    back = scaled_from_real(x).to_float()
    assert abs(back - x) <= math.ulp(x)


@given(finite, finite)
def test_arithmetic_matches_floats(a, b):
    sa, sb = scaled_from_real(a), scaled_from_real(b)
    assert (sa * sb).to_float() == pytest.approx(a * b, rel=1e-12, abs=0)
    if b != 0:
        assert (sa / sb).to_float() == pytest.approx(a / b, rel=1e-12)
    # sums: compare against the exact rational result
    exact = float(Fraction(a) + Fraction(b))
    got = (sa + sb).to_float()
    scale = max(abs(a), abs(b))
    assert abs(got - exact) <= 1e-12 * scale
    assert abs((sa - sb).to_float() - float(Fraction(a) - Fraction(b))) <= 1e-12 * scale


def test_huge_magnitudes_do_not_overflow():
    big = ScaledValue(1, 1e9)
    s = big + big
    assert s.log_mag == pytest.approx(1e9 + math.log(2), rel=1e-15)
    assert (big - big).is_zero()
    assert (big * ScaledValue(-1, -1e9)).to_float() == pytest.approx(-1.0)
    assert big > ScaledValue(1, 1e9 - 1)
    assert -big < ScaledValue(-1, 3.0)


def test_log_factorial_examples():
    assert log_factorial(0) == 0.0
    assert log_factorial(5) == pytest.approx(math.log(120), rel=1e-15)
    assert log_factorial(20) == pytest.approx(math.log(2432902008176640000), rel=1e-15)


@pytest.mark.parametrize("n", [63, 64, 65, 100, 1000, 12345, 10 ** 5])
def test_log_factorial_against_exact_integers(n):
    assert log_factorial(n) == pytest.approx(math.log(math.factorial(n)), rel=1e-13)


def test_log_factorial_large_against_mpmath():
    import mpmath
    for n in (10 ** 6, 10 ** 7):
        ref = float(mpmath.loggamma(mpmath.mpf(n) + 1))
        assert log_factorial(n) == pytest.approx(ref, rel=1e-13)


@given(st.integers(min_value=1, max_value=10 ** 6))
def test_log_factorial_telescopes(n):
    # differences of two values of size ~n ln n carry that size's rounding
    gap = log_factorial(n) - log_factorial(n - 1) - math.log(n)
    assert abs(gap) <= 1e-12 * max(log_factorial(n), 1.0)


def test_log_factorial_rejects_negative():
    with pytest.raises(ValueError):
        log_factorial(-1)


def test_bracket_validation():
    with pytest.raises(ValueError):
        Bracket(2.0, 1.0, -1, 1)
    with pytest.raises(ValueError):
        Bracket(0.0, 1.0, 1, 1)
    with pytest.raises(ValueError):
        Bracket.from_function(lambda x: x * x + 1, -1.0, 1.0)


@pytest.mark.parametrize("f, lo, hi, root", [
    (lambda x: x * x - 2, 1.0, 2.0, math.sqrt(2)),
    (lambda x: x - 1, 0.0, 2.0, 1.0),
    (math.cos, 1.0, 2.0, None),
])
def test_solve_bracketed_examples(f, lo, hi, root):
    if root is None:
        # pi/2 from the Leibniz-free Machin series, independent of math.pi
        def arctan_inv(n):
            total, term, k = Fraction(0), Fraction(1, n), 0
            while term > Fraction(1, 10 ** 30):
                total += (-1) ** k * term / (2 * k + 1)
                k += 1
                term = Fraction(1, n ** (2 * k + 1))
            return total
        root = float(2 * (4 * arctan_inv(5) - arctan_inv(239)))
    x = solve_bracketed(f, Bracket.from_function(f, lo, hi), 1e-14)
    assert x == pytest.approx(root, rel=2e-14)


def test_solve_bracketed_sign_mismatch():
    with pytest.raises(ValueError):
        solve_bracketed(lambda x: x - 1, Bracket(0.0, 2.0, 1, -1))


@settings(max_examples=50)
@given(st.floats(min_value=-50, max_value=50), st.floats(min_value=0.1, max_value=10))
def test_solve_bracketed_contract(c, w):
    def f(x):
        return math.tanh(x - c) + 0.1 * (x - c)
    lo, hi = c - w, c + 1.3 * w
    b = Bracket.from_function(f, lo, hi)
    x = solve_bracketed(f, b, 1e-13)
    assert abs(f(x)) <= abs(f(lo)) + abs(f(hi))
    assert abs(x - c) <= 1e-13 * abs(x) + 1e-300 or f(x) == 0 or abs(x - c) < 1e-13


def test_solve_bracketed_across_a_pole():
    # 1/(x-1) - 3 on (1, 2]: pole at the left end, root at 4/3
    def f(x):
        return math.inf if x == 1 else 1 / (x - 1) - 3
    x = solve_bracketed(f, Bracket(1.0 + 1e-12, 2.0, 1, -1))
    assert x == pytest.approx(4 / 3, rel=1e-13)


def test_solve_bracketed_root_near_underflow():
    # Brent alone runs out of iterations here; bisection must finish the job
    c = -2.3040774420780595e-286

    def f(x):
        return math.tanh(x - c) + 0.1 * (x - c)
    x = solve_bracketed(f, Bracket.from_function(f, c - 0.25, c + 0.325), 1e-13)
    assert x == pytest.approx(c, rel=1e-13)
