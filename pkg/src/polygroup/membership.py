"""Exact membership values in [0, 1].

Plain memberships are :class:`fractions.Fraction`.  Raising a membership to
a non-integer rational exponent t = a/b produces an irrational value in
general; those are kept symbolic as :class:`PowerValue` and compared exactly
by cross-exponentiation, so every downstream min/level computation stays
order-exact.  Floats are rejected everywhere: they are inexact and would
poison level-set comparisons.

Canonical form of a PowerValue is c^(1/q) with 0 < c < 1 rational, q > 1,
and c not a perfect d-th power for any d > 1 dividing q.  Two values in
canonical form are equal iff their (c, q) pairs are equal, which makes
hashing safe; the reduction below enforces the form.
"""

from __future__ import annotations

import math
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def coerce(value):
    """Accept int, Fraction, decimal/rational string, or PowerValue."""
    if isinstance(value, PowerValue):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not memberships")
    if isinstance(value, int):
        value = Fraction(value)
    elif isinstance(value, str):
        value = Fraction(value)
    elif isinstance(value, float):
        raise TypeError(
            "floats are inexact; pass a Fraction or a string like '3/10'"
        )
    elif not isinstance(value, Fraction):
        raise TypeError(f"cannot use {type(value).__name__} as a membership")
    if value < 0 or value > 1:
        raise ValueError(f"membership {value} is outside [0, 1]")
    return value


def parse_membership(text):
    """Parse "1", "3/10", or "0.3" (decimals are read exactly)."""
    return coerce(text.strip())


def render(value):
    if isinstance(value, PowerValue):
        return f"({value.base})^(1/{value.root})"
    return str(value)


def _integer_root(x, p):
    """Largest r with r**p <= x (x >= 0, p >= 1)."""
    if x < 2 or p == 1:
        return x
    r = int(round(x ** (1.0 / p)))
    while r > 0 and r ** p > x:
        r -= 1
    while (r + 1) ** p <= x:
        r += 1
    return r


def _perfect_root(fr, p):
    """The exact p-th root of a Fraction, or None if it is not rational."""
    rn = _integer_root(fr.numerator, p)
    rd = _integer_root(fr.denominator, p)
    if rn ** p == fr.numerator and rd ** p == fr.denominator:
        return Fraction(rn, rd)
    return None


class PowerValue:
    """The q-th root of a rational c in (0, 1); totally ordered with Fraction."""

    __slots__ = ("base", "root")

    def __init__(self, base, root):
        self.base = base
        self.root = root

    def _pair(self):
        return (self.base, self.root)

    @staticmethod
    def _as_pair(other):
        if isinstance(other, PowerValue):
            return other._pair()
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            return (other, 1)
        return None

    def _compare(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        c1, q1 = self._pair()
        c2, q2 = pair
        lcm = q1 * q2 // math.gcd(q1, q2)
        a = c1 ** (lcm // q1)
        b = c2 ** (lcm // q2)
        return (a > b) - (a < b)

    def __eq__(self, other):
        c = self._compare(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._compare(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    def __le__(self, other):
        c = self._compare(other)
        return c <= 0 if c is not NotImplemented else NotImplemented

    def __gt__(self, other):
        c = self._compare(other)
        return c > 0 if c is not NotImplemented else NotImplemented

    def __ge__(self, other):
        c = self._compare(other)
        return c >= 0 if c is not NotImplemented else NotImplemented

    def __hash__(self):
        # canonical form is unique, so (base, root) hashing is consistent
        return hash(("PowerValue", self.base, self.root))

    def __repr__(self):
        return render(self)


def rational_power(value, exponent):
    """value ** exponent, exactly; symbolic when the result is irrational.

    value is a membership in [0, 1]; exponent is a positive rational.
    """
    value = coerce(value)
    exponent = Fraction(exponent)
    if exponent <= 0:
        raise ValueError("exponent must be positive")
    if isinstance(value, PowerValue):
        # (c^(1/q))^e = c^(e/q)
        return rational_power(value.base, exponent / value.root)
    if value == 0 or value == 1:
        return value
    if exponent.denominator == 1:
        return value ** exponent.numerator
    c = value ** exponent.numerator
    q = exponent.denominator
    # strip the largest extractable root so the representation is canonical
    for d in sorted(_divisors(q), reverse=True):
        if d == 1:
            break
        root = _perfect_root(c, d)
        if root is not None:
            c = root
            q //= d
            break
    if q == 1:
        return c
    return PowerValue(c, q)


def _divisors(q):
    out = []
    for d in range(1, int(math.isqrt(q)) + 1):
        if q % d == 0:
            out.append(d)
            if d != q // d:
                out.append(q // d)
    return out
