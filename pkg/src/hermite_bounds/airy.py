"""The Airy function in the normalisation

    A(z) = (pi xi / 3) (J_{-1/3}(2 xi^3) + J_{1/3}(2 xi^3)),   xi = sqrt(z/3),

and the transition-region asymptotic of H_k(x)^2 exp(-x^2) built on it.

Bessel functions come from their power series. The series sum is formed in
exact rationals (the argument is a binary float, hence rational), so the
cancellation between large alternating terms costs nothing; only the
leading factor (x/2)^nu / Gamma(1+nu) is floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .envelope import log_Ck, log_weighted_square
from .numeric_core import Bracket, ScaledValue, log_factorial, solve_bracketed

GAMMA_2_3 = 1.3541179394264004169452880
GAMMA_4_3 = 0.8929795115692492112185643

THIRD = Fraction(1, 3)
_TRUNCATION = Fraction(1, 10 ** 17)

BESSEL_MAX_ARG = 50.0
AIRY_MAX_Z = 20.0
# below this the I-series difference cancels too much for double precision
AIRY_MIN_Z = -8.0

# the values quoted for the maximiser and maximum of A
Z_STAR_QUOTED = 1.46935
A_MAX_QUOTED = 1.1668


@dataclass(frozen=True)
class AiryValue:
    z: float
    xi: float
    value: float


def _nu(nu) -> Fraction:
    f = Fraction(nu).limit_denominator(10)
    if f not in (THIRD, -THIRD):
        raise ValueError(f"only orders +-1/3 are supported, got {nu!r}")
    return f


def _series(nu: Fraction, x: float, alternating: bool) -> float:
    """sum_j (-+1)^j (x^2/4)^j / (j! (nu+1)_j), summed exactly.

    Once j exceeds x^2/4 the terms decrease, so the first term below
    1e-17 bounds the tail (alternating case) or the tail is at most
    twice that term (positive case, ratio < 1/2 once j > x^2/2).
    """
    c = Fraction(x) ** 2 / 4
    term = Fraction(1)
    total = Fraction(0)
    j = 0
    while True:
        total += term
        j += 1
        term = term * c / (j * (nu + j))
        if alternating:
            term = -term
        if j > 2 * c + 2 and abs(term) < _TRUNCATION * max(abs(total), 1):
            break
    return float(total)


def _prefactor_gamma(nu: Fraction) -> float:
    return GAMMA_4_3 if nu > 0 else GAMMA_2_3


def bessel_j(nu, x: float) -> float:
    """J_nu(x) for nu = +-1/3 and 0 <= x <= 50."""
    nu = _nu(nu)
    if not 0 <= x <= BESSEL_MAX_ARG:
        raise ValueError(f"bessel_j supports 0 <= x <= {BESSEL_MAX_ARG}, got {x!r}")
    if x == 0:
        if nu > 0:
            return 0.0
        return math.inf
    return (x / 2) ** float(nu) / _prefactor_gamma(nu) * _series(nu, x, True)


def bessel_i(nu, x: float) -> float:
    """Modified Bessel I_nu(x) for nu = +-1/3; used for A(z) at z < 0."""
    nu = _nu(nu)
    if not 0 <= x <= BESSEL_MAX_ARG:
        raise ValueError(f"bessel_i supports 0 <= x <= {BESSEL_MAX_ARG}, got {x!r}")
    if x == 0:
        return 0.0 if nu > 0 else math.inf
    return (x / 2) ** float(nu) / _prefactor_gamma(nu) * _series(nu, x, False)


def _xi_times(nu: Fraction, xi: float, alternating: bool) -> float:
    # xi * (xi^3)^nu / Gamma(1+nu) * series, finite at xi = 0
    arg = 2 * xi ** 3
    return xi ** (1 + 3 * float(nu)) / _prefactor_gamma(nu) * _series(nu, arg, alternating)


def airy_A(z: float) -> AiryValue:
    """A(z) for -8 <= z <= 20.

    For z <= 0 the same series with modified Bessel functions is used,
    A(z) = (pi eta/3)(I_{-1/3} - I_{1/3})(2 eta^3), eta = sqrt(-z/3), which
    continues the defining formula analytically through z = 0.
    """
    z = float(z)
    if not AIRY_MIN_Z <= z <= AIRY_MAX_Z:
        raise ValueError(f"airy_A supports {AIRY_MIN_Z} <= z <= {AIRY_MAX_Z}, got {z!r}")
    xi = math.sqrt(abs(z) / 3)
    if z >= 0:
        s = _xi_times(-THIRD, xi, True) + _xi_times(THIRD, xi, True)
    else:
        s = _xi_times(-THIRD, xi, False) - _xi_times(THIRD, xi, False)
    return AiryValue(z, xi, math.pi / 3 * s)


def airy_derivative(z: float, h: float = 1e-5) -> float:
    return (airy_A(z + h).value - airy_A(z - h).value) / (2 * h)


def airy_max(lo: float = 0.5, hi: float = 3.0, tol: float = 1e-10) -> tuple[float, float]:
    """Maximiser and maximum of A on [lo, hi] by golden-section search."""
    invphi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = airy_A(c).value, airy_A(d).value
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = airy_A(c).value
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = airy_A(d).value
    z = (a + b) / 2
    return z, airy_A(z).value


def airy_first_zero(lo: float = 2.0, hi: float = 5.0) -> float:
    """Smallest positive zero of A (3^(1/3) times the first zero of Ai)."""
    def f(z):
        return airy_A(z).value
    return solve_bracketed(f, Bracket.from_function(f, lo, hi), 1e-13)


def transition_x(k: int, z: float) -> float:
    """sqrt(2k+1) - 2^(-1/2) 3^(-1/3) k^(-1/6) z."""
    return math.sqrt(2 * k + 1) - 2 ** -0.5 * 3 ** (-1 / 3) * k ** (-1 / 6) * z


def _log_leading(k: int) -> float:
    # ln(3^(2/3) pi^(-3/2) 2^(k+1/2) k! k^(-1/6))
    return (2 / 3 * math.log(3) - 1.5 * math.log(math.pi)
            + (k + 0.5) * math.log(2) + log_factorial(k) - math.log(k) / 6)


def transition_asymptotic(k: int, z: float) -> ScaledValue:
    """Leading-order H_k(x)^2 exp(-x^2) at ``x = transition_x(k, z)``.

    3^(2/3) pi^(-3/2) 2^(k+1/2) k! k^(-1/6) A(z)^2
    """
    if k < 1:
        raise ValueError("transition_asymptotic needs k >= 1")
    if abs(z) > 3:
        raise ValueError(f"transition window is |z| <= 3, got {z!r}")
    a = airy_A(z).value
    if a == 0.0:
        return ScaledValue.zero()
    return ScaledValue(1, _log_leading(k) + 2 * math.log(abs(a)))


def transition_ratio(k: int, z: float) -> float:
    """Asymptotic prediction over the value from the recurrence."""
    pred = transition_asymptotic(k, z)
    return math.exp(pred.log_mag - log_weighted_square(k, transition_x(k, z)))


def asymptotic_ratio(k: int, a_value: float) -> float:
    """(2k)^(1/6) * transition_asymptotic(k, z) / C_k with A(z) = a_value."""
    log_pred = _log_leading(k) + 2 * math.log(abs(a_value))
    return math.exp(math.log(2 * k) / 6 + log_pred - log_Ck(k))

