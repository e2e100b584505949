"""Sturm chains for univariate polynomials over the rationals.

Polynomials are ascending coefficient lists of Fractions.
"""
from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly

INF = None  # marks an unbounded endpoint


def strip(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def derivative(p):
    return strip([i * c for i, c in enumerate(p)][1:])


def divmod_poly(a, b):
    a, b = strip(a), strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        for i, bc in enumerate(b):
            rem[shift + i] -= c * bc
        rem = strip(rem)
    return strip(quot), rem


def gcd_poly(a, b):
    a, b = strip(a), strip(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return a
    return [c / a[-1] for c in a]


def squarefree_part(p):
    p = strip(p)
    g = gcd_poly(p, derivative(p))
    if len(g) <= 1:
        return p
    return divmod_poly(p, g)[0]


def sturm_chain(p):
    """p, p', and negated remainders, for the squarefree part of p."""
    p = squarefree_part(p)
    chain = [p, derivative(p)]
    while chain[-1]:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_at(p, x, side):
    if x is INF:
        lead = p[-1]
        deg = len(p) - 1
        s = 1 if lead > 0 else -1
        return s if side > 0 or deg % 2 == 0 else -s
    v = evaluate(p, x)
    return (v > 0) - (v < 0)


def sign_variations(chain, x, side=1):
    """Sign changes along the chain at x (``side`` picks +inf or -inf for INF)."""
    signs = [s for s in (_sign_at(p, x, side) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, lo=INF, hi=INF) -> int:
    """Distinct real roots in the half-open interval (lo, hi].

    ``INF`` for ``lo`` means -infinity, for ``hi`` +infinity.
    """
    p = strip(p)
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    if len(p) == 1:
        return 0
    chain = sturm_chain(p)
    lo_f = None if lo is INF else Fraction(lo)
    hi_f = None if hi is INF else Fraction(hi)
    return sign_variations(chain, lo_f, -1) - sign_variations(chain, hi_f, 1)


def sturm_root_count(p: MultiPoly, lo=INF, hi=INF) -> int:
    """Root count for a univariate :class:`MultiPoly`."""
    names = p.variables
    if len(names) > 1:
        raise ValueError(f"univariate polynomial expected, got variables {names}")
    if not names:
        if p.is_zero():
            raise ValueError("the zero polynomial has infinitely many roots")
        return 0
    return count_roots(p.univariate(names[0]), lo, hi)


def cauchy_bound(p) -> Fraction:
    """All real roots lie in (-B, B)."""
    p = strip(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def largest_root_upper(p, denominator: int = 100) -> Fraction | None:
    """Smallest n/denominator that is >= every real root of p, or None if p has none.

    Found by bisection on integers n using Sturm counts on (n/d, inf).
    """
    p = squarefree_part(p)
    if count_roots(p) == 0:
        return None
    b = cauchy_bound(p)
    hi = -(-b.numerator * denominator // b.denominator)  # ceil(b*d)
    lo = -hi
    # invariant: roots exist in (lo/d, inf), none in (hi/d, inf)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if count_roots(p, Fraction(mid, denominator)) > 0:
            lo = mid
        else:
            hi = mid
    return Fraction(hi, denominator)
