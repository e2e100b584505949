from fractions import Fraction

import pytest


def hermite_integer_coeffs(k):
    """Ascending integer coefficients of the physicists' H_k."""
    h0, h1 = [1], [0, 2]
    if k == 0:
        return h0
    for j in range(1, k):
        nxt = [0] + [2 * c for c in h1]
        for i, c in enumerate(h0):
            nxt[i] -= 2 * j * c
        h0, h1 = h1, nxt
    return h1


def hermite_exact(k, x):
    """H_k(x) at a rational point, exactly."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(hermite_integer_coeffs(k)):
        acc = acc * x + c
    return acc


@pytest.fixture
def hermite_poly():
    return hermite_integer_coeffs
