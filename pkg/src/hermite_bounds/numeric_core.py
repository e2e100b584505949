"""Overflow-safe scalars, bracketed root finding and log-factorials."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.optimize import brentq

DEFAULT_REL_TOL = 1e-13

# ln(n!) is computed from exact integers up to this n
_EXACT_FACTORIAL_MAX = 64

# ln 2 split so that n * _LN2_HI is exact for |n| < 2**20
_LN2_HI = 6.93147180369123816490e-01
_LN2_LO = 1.90821492927058770002e-10


@dataclass(frozen=True)
class ScaledValue:
    """A real number stored as ``sign * exp(log_mag)``.

    ``sign == 0`` represents exact zero and ``log_mag`` is then ignored.
    ``log_lo`` is an optional low-order correction to ``log_mag``; it lets
    a float survive the round trip through :func:`scaled_from_real`.
    """

    sign: int
    log_mag: float = 0.0
    log_lo: float = 0.0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign!r}")
        if self.sign != 0 and not math.isfinite(self.log_mag):
            raise ValueError("log_mag must be finite for a nonzero value")

    @classmethod
    def zero(cls) -> "ScaledValue":
        return cls(0, 0.0)

    @classmethod
    def from_log(cls, log_mag: float, sign: int = 1) -> "ScaledValue":
        return cls(sign, log_mag) if sign else cls.zero()

    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Plain float; may overflow to +-inf or underflow to 0."""
        if self.sign == 0:
            return 0.0
        if self.log_mag > 709.782712893384:
            return math.copysign(math.inf, self.sign)
        if self.log_mag < -746.0:
            return self.sign * 0.0
        # Cody-Waite reduction keeps the low word alive
        n = round(self.log_mag / math.log(2))
        r = (self.log_mag - n * _LN2_HI) - n * _LN2_LO + self.log_lo
        return self.sign * math.ldexp(math.exp(r), n)

    __float__ = to_float

    def __neg__(self):
        return ScaledValue(-self.sign, self.log_mag, self.log_lo)

    def __abs__(self):
        return ScaledValue(abs(self.sign), self.log_mag, self.log_lo)

    def __mul__(self, other):
        other = _coerce(other)
        if self.sign == 0 or other.sign == 0:
            return ScaledValue.zero()
        return _make(self.sign * other.sign, self.log_mag + other.log_mag,
                     self.log_lo + other.log_lo)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero ScaledValue")
        if self.sign == 0:
            return ScaledValue.zero()
        return _make(self.sign * other.sign, self.log_mag - other.log_mag,
                     self.log_lo - other.log_lo)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __add__(self, other):
        other = _coerce(other)
        if other.sign == 0:
            return self
        if self.sign == 0:
            return other
        big, small = (self, other) if self.log_mag >= other.log_mag else (other, self)
        delta = small.log_mag - big.log_mag
        if big.sign == small.sign:
            return ScaledValue(big.sign, big.log_mag + math.log1p(math.exp(delta)))
        if delta == 0.0:
            return ScaledValue.zero()
        return ScaledValue(big.sign, big.log_mag + math.log1p(-math.exp(delta)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __pow__(self, p):
        if self.sign == 0:
            if p > 0:
                return ScaledValue.zero()
            raise ZeroDivisionError("zero to a nonpositive power")
        if self.sign < 0 and p != int(p):
            raise ValueError("fractional power of a negative value")
        sign = -1 if self.sign < 0 and int(p) % 2 else 1
        return ScaledValue(sign, self.log_mag * p)

    def __lt__(self, other):
        return _compare(self, _coerce(other)) < 0

    def __le__(self, other):
        return _compare(self, _coerce(other)) <= 0

    def __gt__(self, other):
        return _compare(self, _coerce(other)) > 0

    def __ge__(self, other):
        return _compare(self, _coerce(other)) >= 0


def _make(sign: int, hi: float, lo: float) -> ScaledValue:
    # renormalise so that |lo| stays below half an ulp of hi
    s = hi + lo
    return ScaledValue(sign, s, lo - (s - hi))


def _compare(a: ScaledValue, b: ScaledValue) -> int:
    if a.sign != b.sign:
        return -1 if a.sign < b.sign else 1
    ka, kb = (a.log_mag, a.log_lo), (b.log_mag, b.log_lo)
    if a.sign == 0 or ka == kb:
        return 0
    bigger = 1 if ka > kb else -1
    return bigger * a.sign


def _coerce(v) -> ScaledValue:
    if isinstance(v, ScaledValue):
        return v
    return scaled_from_real(v)


def scaled_from_real(x: float) -> ScaledValue:
    """Convert a finite real to a ScaledValue."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot scale non-finite value {x!r}")
    if x == 0.0:
        return ScaledValue.zero()
    frac, e = math.frexp(abs(x))
    hi = math.log(abs(x))
    lo = (e * _LN2_HI - hi) + (math.log(frac) + e * _LN2_LO)
    return ScaledValue(1 if x > 0 else -1, hi, lo)


def log_factorial(n: int) -> float:
    """Natural log of ``n!``."""
    if n < 0 or int(n) != n:
        raise ValueError(f"log_factorial needs a nonnegative integer, got {n!r}")
    n = int(n)
    if n <= _EXACT_FACTORIAL_MAX:
        return math.log(math.factorial(n))
    return math.lgamma(n + 1.0)


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo_sign: int
    f_hi_sign: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if {self.f_lo_sign, self.f_hi_sign} != {-1, 1}:
            raise ValueError("bracket endpoints must carry opposite signs")

    @classmethod
    def from_function(cls, f: Callable[[float], float], lo: float, hi: float) -> "Bracket":
        """Evaluate ``f`` at both ends and build the bracket.

        Raises ``ValueError`` when the signs do not differ.
        """
        flo, fhi = f(lo), f(hi)
        slo, shi = _sign(flo), _sign(fhi)
        if slo == 0 or shi == 0 or slo == shi:
            raise ValueError(f"no sign change on [{lo}, {hi}]: f={flo!r}, {fhi!r}")
        return cls(lo, hi, slo, shi)


def _sign(v: float) -> int:
    if math.isnan(v):
        return 0
    return (v > 0) - (v < 0)


_HUGE = 1e300


def solve_bracketed(f: Callable[[float], float], b: Bracket,
                    rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Root of ``f`` inside the bracket ``b``.

    Brent's method (secant and inverse-quadratic steps with a bisection
    safeguard), so a pole-adjacent endpoint never throws the iterate out
    of the bracket. Infinite function values are clipped to +-1e300.
    """
    def g(x):
        v = f(x)
        if math.isinf(v):
            return math.copysign(_HUGE, v)
        return v

    glo, ghi = g(b.lo), g(b.hi)
    if _sign(glo) == 0 and glo == 0.0:
        return b.lo
    if ghi == 0.0:
        return b.hi
    if _sign(glo) != b.f_lo_sign or _sign(ghi) != b.f_hi_sign:
        raise ValueError(f"recorded signs do not match f on [{b.lo}, {b.hi}]")
    rtol = max(rel_tol, 4 * 2.220446049250313e-16)
    x, res = brentq(g, b.lo, b.hi, xtol=1e-300, rtol=rtol, maxiter=500,
                    full_output=True, disp=False)
    if res.converged:
        return x
    return _bisect(g, b.lo, b.hi, b.f_lo_sign, rtol)


def _bisect(g, lo, hi, s_lo, rtol):
    # plain bisection; ends after at most ~2100 halvings of a double interval
    while True:
        mid = lo + (hi - lo) / 2
        if mid <= lo or mid >= hi or hi - lo <= 1e-300 + rtol * abs(mid):
            return mid
        v = g(mid)
        if v == 0.0:
            return mid
        if _sign(v) == s_lo:
            lo = mid
        else:
            hi = mid
