"""Closed-form envelopes for H_k(x)^2 exp(-x^2) and the maximum M_k.

Everything that involves C_k is assembled in natural logs; C_k itself
leaves double range near k = 140.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .hermite import eval_weighted, log_derivative, log_norm_sq, y_of
from .numeric_core import (Bracket, DEFAULT_REL_TOL, ScaledValue, log_factorial,
                           solve_bracketed)
from .zeros import find_largest_zero, second_largest_zero

LOWER_CONSTANT = 27 / 61
THEOREM_MIN_K = 6


@dataclass(frozen=True)
class MParam:
    """m = (k + sqrt(k^2 + 1/27))^(1/6), so that k = (27 m^12 - 1)/(54 m^6)."""

    k: float
    m: float

    @property
    def y0(self) -> float:
        """m^2 - 1/(3 m^2), a lower bound for y(omega)."""
        return self.m ** 2 - 1 / (3 * self.m ** 2)

    def k_from_m(self) -> float:
        m6 = self.m ** 6
        return (27 * m6 * m6 - 1) / (54 * m6)


def m_param(k: float) -> MParam:
    if k < 1:
        raise ValueError("m_param needs k >= 1")
    return MParam(k, (k + math.sqrt(k * k + 1 / 27)) ** (1 / 6))


def log_Ck(k: int) -> float:
    """ln C_k, with the even/odd closed forms."""
    if k < 1:
        raise ValueError("C_k is defined for k >= 1")
    lf = log_factorial
    if k % 2 == 0:
        return (math.log(2 * k) + 0.5 * math.log(4 * k - 2) + 2 * lf(k)
                - 0.5 * math.log(8 * k * k - 8 * k + 3) - 2 * lf(k // 2))
    return (0.5 * math.log(16 * k * k - 16 * k + 6) + lf(k) + lf(k - 1)
            - 0.5 * math.log(2 * k - 1) - 2 * lf((k - 1) // 2))


def _radicand(k: float, y: float) -> float:
    return y * (4 * y ** 4 - 12 * y ** 3 + 9 * y * y + 10 * k * y - 12 * k)


def envelope_F(k: float, y: float) -> float:
    """(2y^2 - 4y + 3) / sqrt(y (4y^4 - 12y^3 + 9y^2 + 10ky - 12k))."""
    r = _radicand(k, y)
    if not r > 0:
        raise ValueError(f"F_k(y) radicand is nonpositive at k={k}, y={y}")
    return (2 * y * y - 4 * y + 3) / math.sqrt(r)


def log_envelope_G(k: float, y: float) -> float:
    if y == 1.5:
        raise ZeroDivisionError("G_k has a pole at y = 3/2")
    return 15 * (2 * k - y) / (2 * y * (2 * y - 3) ** 2)


def envelope_G(k: float, y: float) -> float:
    """exp(15 (2k - y) / (2 y (2y - 3)^2))."""
    return math.exp(log_envelope_G(k, y))


def log_upper_envelope(k: int, y: float) -> float:
    """ln(C_k F_k(y) G_k(y))."""
    return log_Ck(k) + math.log(envelope_F(k, y)) + log_envelope_G(k, y)


def log_lower_envelope(k: int, y: float) -> float:
    """ln(C_k F_k(y) / G_k(y))."""
    return log_Ck(k) + math.log(envelope_F(k, y)) - log_envelope_G(k, y)


def log_upper_factor(k: int) -> float:
    """ln of (2/3) exp((15/8)(1 + 12/(4 (2k)^(1/3) - 9)))."""
    return math.log(2 / 3) + 15 / 8 * (1 + 12 / (4 * (2 * k) ** (1 / 3) - 9))


def theorem1_bounds(k: int, scaled: bool = False) -> tuple[float, float]:
    """Lower and upper bounds on M_k.

    With ``scaled=True`` the pair is returned divided by C_k (always
    representable); otherwise as natural logs.
    """
    if k < THEOREM_MIN_K:
        raise ValueError(f"the two-sided bound on M_k is stated for k >= 6, got {k}")
    if scaled:
        return LOWER_CONSTANT, math.exp(log_upper_factor(k))
    lc = log_Ck(k)
    return lc + math.log(LOWER_CONSTANT), lc + log_upper_factor(k)


def q0_of_m(m: float) -> float:
    return (3 * m ** 4 - 3 * m * m - 1) * math.sqrt(9 * m ** 4 - 3) / (9 * m ** 3)


def omega_upper(k: float) -> float:
    """(m^4 - 1/3)^(3/2) / m^3, an upper bound for the maximum point omega."""
    m = m_param(k).m
    return (m ** 4 - 1 / 3) ** 1.5 / m ** 3


def find_omega(k: int, x_kk: float | None = None, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Last solution of t(x) = x, where |H_k| exp(-x^2/2) peaks."""
    if k < 1:
        raise ValueError("find_omega needs k >= 1")
    if k == 1:
        return 1.0
    top = find_largest_zero(k) if x_kk is None else x_kk
    hi = omega_upper(k)

    def f(x):
        return log_derivative(k, x) - x

    offset = 1e-9
    while True:
        lo = top * (1 + offset)
        if f(lo) > 0:
            break
        offset *= 10
        if lo >= hi:
            raise ValueError(f"no bracket for omega at k={k}")
    if not f(hi) < 0:
        raise ValueError(f"t(x) - x not negative at the omega bound for k={k}")
    return solve_bracketed(f, Bracket(lo, hi, 1, -1), rel_tol)


def log_weighted_square(k: int, x: float) -> float:
    """ln(H_k(x)^2 exp(-x^2))."""
    st = eval_weighted(k, x)
    return 2 * math.log(abs(st.psi_k)) + 2 * st.log_scale + log_norm_sq(k)


@dataclass
class EnvelopeReport:
    k: int
    ln_Ck: float
    omega: float
    omega_upper: float
    x_kk: float
    ln_Mk: float
    ln_lower: float | None
    ln_upper: float | None
    ratio_Mk_Ck: float
    sandwich_ok: bool | None = field(default=None)

    @property
    def Mk(self) -> ScaledValue:
        return ScaledValue(1, self.ln_Mk)

    @property
    def lower_bound(self) -> ScaledValue | None:
        return None if self.ln_lower is None else ScaledValue(1, self.ln_lower)

    @property
    def upper_bound(self) -> ScaledValue | None:
        return None if self.ln_upper is None else ScaledValue(1, self.ln_upper)

    @property
    def omega_offset(self) -> float:
        """(sqrt(2k) - omega) (2k)^(1/6)."""
        return (math.sqrt(2 * self.k) - self.omega) * (2 * self.k) ** (1 / 6)


def compute_Mk(k: int, rel_tol: float = DEFAULT_REL_TOL) -> EnvelopeReport:
    """Locate omega and assemble M_k = (2k)^(1/6) max H_k^2 exp(-x^2)."""
    if k < 1:
        raise ValueError("compute_Mk needs k >= 1")
    x_kk = find_largest_zero(k, rel_tol) if k > 1 else 0.0
    omega = find_omega(k, x_kk, rel_tol)
    ln_Mk = math.log(2 * k) / 6 + log_weighted_square(k, omega)
    lc = log_Ck(k)
    if k >= THEOREM_MIN_K:
        lo, hi = theorem1_bounds(k)
        ok = lo < ln_Mk < hi
    else:
        lo = hi = ok = None
    return EnvelopeReport(k, lc, omega, omega_upper(k), x_kk, ln_Mk, lo, hi,
                          math.exp(ln_Mk - lc), ok)


def lower_bound_x(k: float) -> float:
    """sqrt(2k-2) - (9/4)(2k-2)^(-1/6)."""
    return math.sqrt(2 * k - 2) - 2.25 * (2 * k - 2) ** (-1 / 6)


def lower_bound_point_value(k: float) -> float:
    """(2k)^(1/6) F_k(y) / G_k(y) at the point from :func:`lower_bound_x`."""
    if k < 3:
        raise ValueError("lower_bound_point_value needs k >= 3")
    y = y_of(k, lower_bound_x(k))
    return (2 * k) ** (1 / 6) * envelope_F(k, y) / envelope_G(k, y)


def sharpness_rhs(k: int, x: float, literal: bool = False) -> float:
    """Right side of t(x) = x y (2y-3) / (2y^2 - 4y + 3).

    ``literal=True`` gives the variant with H_{k-1} in place of H_k',
    i.e. an extra factor 2k; its roots sit next to the zeros of H_k where
    the lower envelope does not hold.
    """
    y = y_of(k, x)
    rhs = x * y * (2 * y - 3) / (2 * y * y - 4 * y + 3)
    return 2 * k * rhs if literal else rhs


@dataclass(frozen=True)
class SharpnessPoint:
    k: int
    tau: float
    ln_lower_envelope: float
    ln_function_value: float
    zero_below: float
    zero_above: float

    @property
    def holds(self) -> bool:
        return self.ln_function_value >= self.ln_lower_envelope


def sharpness_point(k: int, zero_below: float | None = None,
                    zero_above: float | None = None,
                    rel_tol: float = DEFAULT_REL_TOL,
                    literal: bool = False) -> SharpnessPoint:
    """Root tau of the sharpness equation between the two largest zeros of H_k.

    On (x_{k-1,k}, x_kk) the logarithmic derivative falls from +inf to -inf,
    so the positive right side is crossed once, at a point below the
    largest zero of H_{k-1}.
    """
    if k < 3:
        raise ValueError("sharpness_point needs k >= 3")
    hi_zero = find_largest_zero(k) if zero_above is None else zero_above
    lo_zero = second_largest_zero(k, hi_zero) if zero_below is None else zero_below

    def f(x):
        return log_derivative(k, x) - sharpness_rhs(k, x, literal)

    width = hi_zero - lo_zero
    for delta in (1e-9, 1e-7, 1e-5, 1e-3):
        lo, hi = lo_zero + delta * width, hi_zero - delta * width
        if f(lo) > 0 and f(hi) < 0:
            break
    else:
        raise ValueError(f"no sign change for the sharpness equation at k={k}")
    tau = solve_bracketed(f, Bracket(lo, hi, 1, -1), rel_tol)
    y = y_of(k, tau)
    return SharpnessPoint(k, tau, log_lower_envelope(k, y), log_weighted_square(k, tau),
                          lo_zero, hi_zero)
