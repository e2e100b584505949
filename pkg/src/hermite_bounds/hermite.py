"""Weighted Hermite polynomials (Hermite functions) of arbitrary degree.

The orthonormal functions

    psi_j(x) = H_j(x) exp(-x^2/2) / sqrt(2^j j! sqrt(pi))

satisfy ``psi_{j+1} = x sqrt(2/(j+1)) psi_j - sqrt(j/(j+1)) psi_{j-1}`` and
stay O(1) in the oscillatory region, whereas H_j itself overflows a double
near j = 150. The Gaussian factor and any growth past 1e150 are carried in
a separate natural-log scale.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numeric_core import ScaledValue, log_factorial

LOG_PI = math.log(math.pi)
_PSI0 = math.pi ** -0.25

# rescale by an exact power of two so parity stays bit-exact
_RESCALE_AT = 1e150
_SHRINK = 2.0 ** -500
_SHRINK_LOG = 500 * math.log(2.0)
_POLE_RATIO = 1e-300


@dataclass(frozen=True)
class HermiteState:
    """Weighted Hermite values at one point.

    The true orthonormal values are ``psi * exp(log_scale)``, and
    ``t = H_k'(x) / H_k(x)``.
    """

    k: int
    x: float
    psi_km1: float
    psi_k: float
    log_scale: float
    t: float

    @property
    def weighted_value(self) -> float:
        """psi_k(x) as a plain float (underflows to 0 far in the tail)."""
        return self.psi_k * math.exp(self.log_scale) if self.psi_k else 0.0

    def log_weighted_square(self) -> ScaledValue:
        """``H_k(x)^2 exp(-x^2)`` as a ScaledValue."""
        if self.psi_k == 0.0:
            return ScaledValue.zero()
        return ScaledValue(1, 2 * math.log(abs(self.psi_k)) + 2 * self.log_scale
                           + log_norm_sq(self.k))


def log_norm_sq(k: int) -> float:
    """ln(2^k k! sqrt(pi)), the squared norm of H_k."""
    return k * math.log(2.0) + log_factorial(k) + 0.5 * LOG_PI


def _recurrence(k: int, x: float):
    """Return (psi_{k-2}, psi_{k-1}, psi_k, log_scale) for scalar x."""
    log_scale = -0.5 * x * x
    pm2, pm1, p = 0.0, 0.0, _PSI0
    sqrt = math.sqrt
    for j in range(k):
        nxt = x * sqrt(2.0 / (j + 1)) * p - sqrt(j / (j + 1)) * pm1
        pm2, pm1, p = pm1, p, nxt
        if abs(p) > _RESCALE_AT:
            pm2 *= _SHRINK
            pm1 *= _SHRINK
            p *= _SHRINK
            log_scale += _SHRINK_LOG
    return pm2, pm1, p, log_scale


def _log_derivative(k: int, psi_km1: float, psi_k: float) -> float:
    if k == 0:
        return 0.0
    num = math.sqrt(2.0 * k) * psi_km1
    if abs(psi_k) <= _POLE_RATIO * abs(psi_km1):
        # sign of the approach is carried by the signed zero of psi_k
        return math.copysign(math.inf, num) * math.copysign(1.0, psi_k)
    return num / psi_k


def eval_weighted(k: int, x: float) -> HermiteState:
    """Evaluate psi_{k-1}, psi_k and the logarithmic derivative at ``x``."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    x = float(x)
    _, pm1, p, log_scale = _recurrence(k, x)
    return HermiteState(k, x, pm1, p, log_scale, _log_derivative(k, pm1, p))


def weighted_value(k: int, x: float) -> float:
    """psi_k(x) as a plain float; continuous in x, used for zero finding."""
    _, _, p, log_scale = _recurrence(k, float(x))
    return p * math.exp(log_scale) if p else 0.0


def log_derivative(k: int, x: float) -> float:
    """t(x) = H_k'(x)/H_k(x)."""
    _, pm1, p, _ = _recurrence(k, float(x))
    return _log_derivative(k, pm1, p)


def y_of(k: int, x: float) -> float:
    return 2.0 * k - x * x


def laguerre_expression(k: int, x: float) -> float:
    """``t^2 - 2 x t + 2k``, i.e. (H'^2 - H H'') / H^2 for H = H_k.

    For a real-rooted polynomial this equals the sum of inverse squared
    distances to its zeros, hence is positive.
    """
    t = log_derivative(k, x)
    if math.isinf(t):
        raise ZeroDivisionError(f"x={x!r} is a zero of H_{k}")
    try:
        return (t - x) ** 2 + y_of(k, x)
    except OverflowError:
        return math.inf


def ode_residual(k: int, x: float) -> float:
    """Relative residual of f'' - 2x f' + 2k f for f = H_k.

    f, f', f'' are rebuilt from psi_k, psi_{k-1}, psi_{k-2} through
    H_k' = 2k H_{k-1}; the common scale cancels.
    """
    if k < 2:
        raise ValueError("ode_residual needs k >= 2")
    x = float(x)
    pm2, pm1, p, _ = _recurrence(k, x)
    f2 = 2.0 * math.sqrt(k * (k - 1.0)) * pm2
    f1 = 2.0 * x * math.sqrt(2.0 * k) * pm1
    f0 = 2.0 * k * p
    scale = abs(f2) + abs(f1) + abs(f0)
    if scale == 0.0:
        return 0.0
    return abs(f2 - f1 + f0) / scale


def psi_grid(k: int, xs) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised recurrence over an array of points.

    Returns ``(psi_km1, psi_k, log_scale)`` arrays with the same
    convention as :class:`HermiteState`.
    """
    xs = np.asarray(xs, dtype=float)
    log_scale = -0.5 * xs * xs
    pm1 = np.zeros_like(xs)
    p = np.full_like(xs, _PSI0)
    for j in range(k):
        nxt = xs * math.sqrt(2.0 / (j + 1)) * p - math.sqrt(j / (j + 1)) * pm1
        pm1, p = p, nxt
        big = np.abs(p) > _RESCALE_AT
        if big.any():
            pm1 = np.where(big, pm1 * _SHRINK, pm1)
            p = np.where(big, p * _SHRINK, p)
            log_scale = np.where(big, log_scale + _SHRINK_LOG, log_scale)
    return pm1, p, log_scale


def log_weighted_square_grid(k: int, xs) -> np.ndarray:
    """ln(H_k(x)^2 exp(-x^2)) on a grid; -inf at exact zeros."""
    _, p, ls = psi_grid(k, xs)
    with np.errstate(divide="ignore"):
        return 2 * np.log(np.abs(p)) + 2 * ls + log_norm_sq(k)
