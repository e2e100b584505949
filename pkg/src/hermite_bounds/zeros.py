"""Zeros of H_k: closed-form bounds on the largest one, and numerics."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hermite import psi_grid, weighted_value
from .numeric_core import Bracket, DEFAULT_REL_TOL, solve_bracketed

# 6^(-1/3) times the first positive zero of A(z), to the digits used upstream
AIRY_EDGE_CONSTANT = 1.85574

MAX_ALL_ZEROS_DEGREE = 500


@dataclass(frozen=True)
class ZeroBounds:
    k: int
    lower: float
    upper: float

    def contains(self, x: float) -> bool:
        return self.lower < x < self.upper


@dataclass(frozen=True)
class ZeroSet:
    k: int
    zeros: tuple[float, ...]

    @property
    def largest(self) -> float:
        return self.zeros[-1]

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)


def lower_zero_bound(k: float) -> float:
    """sqrt(2k) - (9/4)(2k)^(-1/6)."""
    return math.sqrt(2 * k) - 2.25 * (2 * k) ** (-1 / 6)


def upper_zero_bound(k: float, edge_constant: float = AIRY_EDGE_CONSTANT) -> float:
    """sqrt(2k+1) - 1.85574 (2k+1)^(-1/6)."""
    return math.sqrt(2 * k + 1) - edge_constant * (2 * k + 1) ** (-1 / 6)


def largest_zero_bounds(k: int) -> ZeroBounds:
    if k <= 2:
        raise ValueError(f"largest-zero bounds hold for k > 2, got k={k}")
    return ZeroBounds(k, lower_zero_bound(k), upper_zero_bound(k))


def _refine(k: int, lo: float, hi: float, rel_tol: float) -> float:
    def f(x):
        return weighted_value(k, x)
    return solve_bracketed(f, Bracket.from_function(f, lo, hi), rel_tol)


def find_largest_zero(k: int, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Largest zero x_kk of H_k."""
    if k < 1:
        raise ValueError("H_0 has no zeros")
    if k == 1:
        return 0.0
    if k == 2:
        lo, hi = 0.0, math.sqrt(2 * k + 1)
    else:
        b = largest_zero_bounds(k)
        lo, hi = b.lower, b.upper
    return _refine(k, lo, hi, rel_tol)


def _positive_zeros_scan(k: int, npoints: int, rel_tol: float) -> list[float]:
    edge = math.sqrt(2 * k + 1)
    grid = np.linspace(0.0, edge, npoints + 1)[1:]
    _, p, _ = psi_grid(k, grid)
    s = np.sign(p)
    idx = np.nonzero(s[:-1] * s[1:] < 0)[0]
    out = []
    for i in idx:
        out.append(_refine(k, float(grid[i]), float(grid[i + 1]), rel_tol))
    # exact zeros landing on grid points
    for i in np.nonzero(s == 0)[0]:
        out.append(float(grid[i]))
    return sorted(out)


def all_zeros(k: int, rel_tol: float = DEFAULT_REL_TOL) -> ZeroSet:
    """All zeros of H_k, ascending.

    Positive zeros come from a sign-change scan of psi_k on (0, sqrt(2k+1))
    refined by :func:`solve_bracketed`; the scan is densified until exactly
    floor(k/2) are found. Negative zeros follow by symmetry.
    """
    if not 1 <= k <= MAX_ALL_ZEROS_DEGREE:
        raise ValueError(f"all_zeros supports 1 <= k <= {MAX_ALL_ZEROS_DEGREE}, got {k}")
    want = k // 2
    npoints = 4 * k  # 8k points over the symmetric interval
    pos: list[float] = []
    for _ in range(6):
        pos = _positive_zeros_scan(k, npoints, rel_tol) if want else []
        if len(pos) == want:
            break
        npoints *= 4
    else:
        raise RuntimeError(f"scan found {len(pos)} positive zeros of H_{k}, expected {want}")
    zeros = [-z for z in reversed(pos)] + ([0.0] if k % 2 else []) + pos
    return ZeroSet(k, tuple(zeros))


def zero_sum_identity_check(k: int, zeros: ZeroSet | None = None) -> tuple[float, float]:
    """Both sides of sum_{i<k} (x_kk - x_ik)^-2 = (2k - x_kk^2 - 2)/3."""
    if not 3 <= k <= MAX_ALL_ZEROS_DEGREE:
        raise ValueError(f"zero-sum identity check supports 3 <= k <= {MAX_ALL_ZEROS_DEGREE}")
    zs = zeros if zeros is not None else all_zeros(k)
    top = zs.largest
    lhs = math.fsum(1.0 / (top - z) ** 2 for z in zs.zeros[:-1])
    rhs = (2 * k - top * top - 2) / 3
    return lhs, rhs


def bethe_inequality_check(k: int, x: float, x_kk: float | None = None) -> tuple[float, float]:
    """Both sides of 2k - x^2 < (x - x_kk)^-2 + (2k - 2 - x_kk^2)/3, x > x_kk."""
    top = find_largest_zero(k) if x_kk is None else x_kk
    if not x > top:
        raise ValueError(f"need x > x_kk = {top!r}, got {x!r}")
    lhs = 2 * k - x * x
    rhs = 1.0 / (x - top) ** 2 + (2 * k - 2 - top * top) / 3
    return lhs, rhs


def s_form(k: int, x_kk: float) -> float:
    """2 s^2 x^2 + 6 s x - 2 s^8 + 3 s^4 - 2 s^2 + 3 with s = (2k)^(1/6)."""
    s = (2 * k) ** (1 / 6)
    return 2 * s * s * x_kk ** 2 + 6 * s * x_kk - 2 * s ** 8 + 3 * s ** 4 - 2 * s * s + 3


def second_largest_zero(k: int, x_kk: float | None = None,
                        rel_tol: float = DEFAULT_REL_TOL) -> float:
    """x_{k-1,k}, found by stepping left from x_kk at a quarter of the bulk spacing."""
    if k < 2:
        raise ValueError("H_k has a second zero only for k >= 2")
    top = find_largest_zero(k, rel_tol) if x_kk is None else x_kk
    if k == 2:
        return -top
    step = 0.25 * math.pi / math.sqrt(2 * k + 1)
    hi = top - 1e-6 * step
    s_hi = math.copysign(1.0, weighted_value(k, hi))
    while True:
        lo = hi - step
        if math.copysign(1.0, weighted_value(k, lo)) != s_hi:
            return _refine(k, lo, hi, rel_tol)
        hi = lo
