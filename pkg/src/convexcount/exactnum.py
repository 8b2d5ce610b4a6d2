"""Exact integer and rational helpers.

Python's ``int`` is already arbitrary precision and ``fractions.Fraction``
keeps itself in lowest terms with a positive denominator, so both are used
directly as the big-integer and big-rational types.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import PoleError

Rational = Union[int, Fraction]

__all__ = [
    "Fraction",
    "binomial",
    "pochhammer",
    "chu_vandermonde_sides",
    "chu_vandermonde_check",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with lattice-path semantics.

    Returns ``C(n, k)`` for ``0 <= k <= n`` and 0 otherwise, including every
    negative ``n``.  This is the number of monotone paths with ``k`` steps of
    one kind among ``n`` steps, which is what all counting code here needs.

    >>> binomial(4, 2), binomial(-2, 0), binomial(3, -1)
    (6, 0, 0)
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x: Rational, n: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+n-1)``; empty product for ``n == 0``."""
    if n < 0:
        raise ValueError(f"pochhammer needs n >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def chu_vandermonde_sides(n: int, a: Rational, c: Rational) -> tuple[Fraction, Fraction]:
    """Both sides of the terminating 2F1(-n, a; c; 1) evaluation.

    Returns ``(sum_k (-n)_k (a)_k / ((c)_k k!), (c-a)_n / (c)_n)``.

    Raises
    ------
    PoleError
        If ``(c)_k`` vanishes for some ``0 <= k <= n``.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    a = Fraction(a)
    c = Fraction(c)
    lhs = Fraction(0)
    # Running products avoid recomputing each Pochhammer from scratch.
    num = Fraction(1)
    den = Fraction(1)
    for k in range(n + 1):
        if den == 0:
            raise PoleError(f"(c)_{k} = 0 for c = {c}")
        lhs += num / den
        num *= (-n + k) * (a + k)
        den *= (c + k) * (k + 1)
    cn = pochhammer(c, n)
    if cn == 0:
        raise PoleError(f"(c)_{n} = 0 for c = {c}")
    return lhs, pochhammer(c - a, n) / cn


def chu_vandermonde_check(n: int, a: Rational, c: Rational) -> bool:
    """True iff the Chu-Vandermonde evaluation holds exactly at ``(n, a, c)``."""
    lhs, rhs = chu_vandermonde_sides(n, a, c)
    return lhs == rhs
