"""Sparse multivariate polynomials with exact rational coefficients.

Variables come from a fixed ordered alphabet so exponent vectors of
different polynomials always line up. Terms are kept in a dict with no
zero coefficients; iteration and printing use graded lexicographic order.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping

VARIABLES = ("k", "y", "s", "m", "q", "x", "t")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS

Exponent = tuple


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, float):
        # exact binary value; callers who want 0.1 == 1/10 pass a Fraction
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                if len(exp) != _NVARS:
                    raise ValueError(f"exponent vector must have length {_NVARS}")
                clean[tuple(exp)] = clean.get(tuple(exp), 0) + c
        self._terms = {e: c for e, c in clean.items() if c}

    # construction

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        exp = [0] * _NVARS
        exp[_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def from_univariate(cls, coeffs, name: str) -> "MultiPoly":
        """Build from ascending coefficients in variable ``name``."""
        i = _INDEX[name]
        terms = {}
        for p, c in enumerate(coeffs):
            exp = [0] * _NVARS
            exp[i] = p
            terms[tuple(exp)] = c
        return cls(terms)

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        used = [False] * _NVARS
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(VARIABLES, used) if u)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def degree(self, name: str | None = None) -> int:
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = _INDEX[name]
        return max(e[i] for e in self._terms)

    def coefficients(self) -> list[Fraction]:
        return [self._terms[e] for e in self.sorted_exponents()]

    def sorted_exponents(self) -> list[Exponent]:
        return sorted(self._terms, key=_grlex_key, reverse=True)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        for e in self.sorted_exponents():
            yield e, self._terms[e]

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def coefficient(self, **powers) -> Fraction:
        exp = [0] * _NVARS
        for v, p in powers.items():
            exp[_INDEX[v]] = p
        return self._terms.get(tuple(exp), Fraction(0))

    def coeff_in(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of ``name^power``, a polynomial in the other variables."""
        i = _INDEX[name]
        out = {}
        for e, c in self._terms.items():
            if e[i] == power:
                ne = list(e)
                ne[i] = 0
                out[tuple(ne)] = c
        return MultiPoly(out)

    def min_coefficient(self) -> Fraction:
        return min(self._terms.values())

    def all_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def content(self) -> Fraction:
        """Positive rational g with self/g primitive over the integers."""
        from math import gcd, lcm
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _as_fraction(other)
            return MultiPoly({e: v * c for e, v in self._terms.items()})
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0 or int(n) != n:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # calculus and substitution

    def diff(self, name: str) -> "MultiPoly":
        i = _INDEX[name]
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(terms)

    def subs(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials or numbers."""
        repl = {_INDEX[v]: self._coerce(p) for v, p in mapping.items()}
        powers: dict = {}

        def power(i, n):
            key = (i, n)
            if key not in powers:
                powers[key] = repl[i] ** n
            return powers[key]

        result = MultiPoly()
        for e, c in self._terms.items():
            kept = tuple(0 if i in repl else p for i, p in enumerate(e))
            term = MultiPoly({kept: c})
            for i in repl:
                if e[i]:
                    term = term * power(i, e[i])
            result = result + term
        return result

    def shift(self, name: str, c) -> "MultiPoly":
        """var := var + c."""
        return self.subs({name: MultiPoly.var(name) + c})

    def divide_by_monomial(self, name: str, power: int = 1) -> "MultiPoly":
        i = _INDEX[name]
        terms = {}
        for e, c in self._terms.items():
            if e[i] < power:
                raise ValueError(f"not divisible by {name}^{power}")
            ne = list(e)
            ne[i] -= power
            terms[tuple(ne)] = c
        return MultiPoly(terms)

    def evaluate(self, point: Mapping[str, object]):
        """Exact evaluation when all values are rational; float otherwise."""
        exact = all(not isinstance(v, float) for v in point.values())
        vals = {_INDEX[v]: (_as_fraction(x) if exact else x) for v, x in point.items()}
        total = Fraction(0) if exact else 0.0
        for e, c in self._terms.items():
            term = c if exact else float(c)
            for i, p in enumerate(e):
                if p:
                    if i not in vals:
                        raise ValueError(f"no value for variable {VARIABLES[i]}")
                    term = term * vals[i] ** p
            total += term
        return total

    def univariate(self, name: str) -> list[Fraction]:
        """Ascending coefficients; the polynomial must involve only ``name``."""
        i = _INDEX[name]
        others = set(self.variables) - {name}
        if others:
            raise ValueError(f"polynomial also depends on {sorted(others)}")
        coeffs = [Fraction(0)] * (self.degree(name) + 1 if self._terms else 0)
        for e, c in self._terms.items():
            coeffs[e[i]] = c
        return coeffs

    # text

    @staticmethod
    def monomial_text(exp: Exponent) -> str:
        parts = []
        for v, p in zip(VARIABLES, exp):
            if p == 1:
                parts.append(v)
            elif p:
                parts.append(f"{v}^{p}")
        return "*".join(parts) if parts else "1"

    def to_text(self) -> str:
        """Canonical form: one ``coefficient monomial`` pair per line."""
        if not self._terms:
            return "0 1"
        return "\n".join(f"{_frac_text(c)} {self.monomial_text(e)}" for e, c in self.items())

    @classmethod
    def from_text(cls, text: str) -> "MultiPoly":
        terms = {}
        for line in text.strip().splitlines():
            coef, mono = line.split()
            exp = [0] * _NVARS
            if mono != "1":
                for factor in mono.split("*"):
                    v, _, p = factor.partition("^")
                    exp[_INDEX[v]] += int(p) if p else 1
            terms[tuple(exp)] = Fraction(coef)
        return cls(terms)

    def __repr__(self):
        if not self._terms:
            return "MultiPoly(0)"
        body = " + ".join(f"{_frac_text(c)}*{self.monomial_text(e)}" for e, c in self.items())
        return f"MultiPoly({body})"


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


k, y, s, m, q, x, t = (MultiPoly.var(v) for v in VARIABLES)
