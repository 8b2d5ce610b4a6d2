"""Counting convex polyominoes by bounding box and by perimeter.

Three routes to ``|P(m, n)|``: the closed formula :func:`count_rect`, the
lattice-path quadruple sum :func:`quadruple_sum`, and brute force in
:mod:`convexcount.lattice`.  The quadruple sum splits as
``S0 + S1 + S2 - S3 - S4 + S5``; every piece has a raw summation and, except
``S5 = 0``, a closed form.  The ``check_*`` functions test the finite
binomial identities used to pass from one to the other.

Closed forms are evaluated in exact rationals and must come out integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import binomial as C

__all__ = [
    "count_rect",
    "count_perimeter",
    "quadruple_sum",
    "corner_factor",
    "s0",
    "s1_closed",
    "s2_closed",
    "s3_closed",
    "s4_closed",
    "s1_raw",
    "s2_raw",
    "s3_raw",
    "s3_defining",
    "s4_raw",
    "s5_raw",
    "SumBreakdown",
    "breakdown",
    "check_s1_telescoping",
    "check_s2_telescoping",
    "check_s1_sum",
    "check_s2_sum",
    "reduction_failures",
    "IdentityError",
]


class IdentityError(ArithmeticError):
    """An identity that must hold exactly did not."""


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


def _need_positive(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ValueError(f"requires m, n >= 1, got ({m}, {n})")


def count_rect(m: int, n: int) -> int:
    """Number of convex polyominoes with an ``(m+1) x (n+1)`` bounding box.

    ``count_rect(0, 0) == 1``: the formula is 0/0 there, the single cell is
    the only member.
    """
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be non-negative, got ({m}, {n})")
    if m == n == 0:
        return 1
    value = Fraction(m + n + m * n, m + n) * C(2 * m + 2 * n, 2 * m) - Fraction(
        2 * m * n, m + n
    ) * C(m + n, m) ** 2
    return _integral(value, f"count_rect({m}, {n})")


def count_perimeter(N: int) -> int:
    """Number of convex polyominoes with perimeter ``2N + 8``."""
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    return (2 * N + 11) * 4**N - 4 * (2 * N + 1) * C(2 * N, N)


def corner_factor(a: int, b: int) -> int:
    """Number of boundary paths cutting an ``a x b`` corner.

    ``C(a+b-2, a-1)``, except that the empty corner ``a = b = 0`` (a point
    path) counts once.  A one-sided corner (``a = 0 < b`` or ``b = 0 < a``)
    gives 0 through the vanishing binomial.
    """
    if a == 0 and b == 0:
        return 1
    return C(a + b - 2, a - 1)


def quadruple_sum(m: int, n: int) -> int:
    """``|P(m, n)|`` as the sum over corner parameters of two path-pair counts.

    Defined for all ``m, n >= 0``; on the edges ``m = 0`` or ``n = 0`` it
    evaluates to 1, matching brute force.
    """
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be non-negative, got ({m}, {n})")
    f = [[corner_factor(a, b) for b in range(n + 1)] for a in range(m + 1)]
    # Factors depending only on a1+a2 or b1+b2.
    X = [C(s + n - m - 2, n - 1) for s in range(2 * m + 1)]
    Y = [C(t + m - n - 2, m - 1) for t in range(2 * n + 1)]
    W = [C(m + n - s, n + 1) for s in range(2 * m + 1)]
    Z = [C(m + n - t, m + 1) for t in range(2 * n + 1)]
    U = [[C(m + n - a2 - b1, m - a2) for b1 in range(n + 1)] for a2 in range(m + 1)]
    V = [[C(m + n - a1 - b2, m - a1) for b2 in range(n + 1)] for a1 in range(m + 1)]
    rn = range(n + 1)
    total = 0
    for a1 in range(m + 1):
        f1 = f[a1]
        V1 = V[a1]
        for a2 in range(m + 1):
            x = X[a1 + a2]
            w = W[a1 + a2]
            f2 = f[a2]
            U2 = U[a2]
            for b1 in rn:
                p = f1[b1]
                u = U2[b1]
                for b2 in rn:
                    t = b1 + b2
                    total += (p * f2[b2] - x * Y[t]) * (u * V1[b2] - w * Z[t])
    return total


# --------------------------------------------------------------------------
# Closed forms of the pieces


def s0(m: int, n: int) -> int:
    """The all-corners-empty term."""
    _need_positive(m, n)
    return C(m + n, m) ** 2 - C(m + n, m - 1) * C(m + n, n - 1)


def s1_closed(m: int, n: int) -> int:
    _need_positive(m, n)
    return 2 * C(m + n, n + 1) * C(m + n, n - 1)


def s2_closed(m: int, n: int) -> int:
    _need_positive(m, n)
    k = Fraction(m * n, m + n)
    return _integral(k * C(2 * m + 2 * n, 2 * m) - k * C(m + n, m) ** 2, "S2")


def s3_closed(m: int, n: int) -> int:
    _need_positive(m, n)
    return _integral(Fraction(m * n, 2 * (m + n)) * C(m + n, m) ** 2, "S3")


def s4_closed(m: int, n: int) -> int:
    _need_positive(m, n)
    value = (
        C(m + n, m) ** 2
        + C(m + n, m - 1) * C(m + n, n - 1)
        + Fraction(m * n, 2 * (m + n)) * C(m + n, m) ** 2
        - C(2 * m + 2 * n, 2 * n)
    )
    return _integral(value, "S4")


# --------------------------------------------------------------------------
# Raw sums


def s1_raw(m: int, n: int) -> int:
    """Terms where exactly one corner is empty (doubled by symmetry)."""
    _need_positive(m, n)
    return 2 * sum(
        corner_factor(a, b)
        * (C(m + n - a, m - a) * C(m + n - b, m) - C(m + n - a, n + 1) * C(m + n - b, m + 1))
        for a in range(1, m + 1)
        for b in range(1, n + 1)
    )


def _inner_tables(m, n):
    f = [[corner_factor(a, b) for b in range(n + 1)] for a in range(m + 1)]
    U = [[C(m + n - a2 - b1, m - a2) for b1 in range(n + 1)] for a2 in range(m + 1)]
    V = [[C(m + n - a1 - b2, m - a1) for b2 in range(n + 1)] for a1 in range(m + 1)]
    X = [C(s + n - m - 2, n - 1) for s in range(2 * m + 1)]
    Y = [C(t + m - n - 2, m - 1) for t in range(2 * n + 1)]
    W = [C(m + n - s, n + 1) for s in range(2 * m + 1)]
    Z = [C(m + n - t, m + 1) for t in range(2 * n + 1)]
    return f, U, V, X, Y, W, Z


def _interior(m: int, n: int, which: str) -> int:
    # One of the four products of the interior (all a_i, b_i >= 1) summand.
    f, U, V, X, Y, W, Z = _inner_tables(m, n)
    total = 0
    ra = range(1, m + 1)
    rb = range(1, n + 1)
    for a1 in ra:
        for a2 in ra:
            s = a1 + a2
            for b1 in rb:
                for b2 in rb:
                    t = b1 + b2
                    if which == "S2":
                        total += f[a1][b1] * f[a2][b2] * U[a2][b1] * V[a1][b2]
                    elif which == "S3":
                        total += X[s] * Y[t] * U[a2][b1] * V[a1][b2]
                    elif which == "S4":
                        total += f[a1][b1] * f[a2][b2] * W[s] * Z[t]
                    else:
                        total += X[s] * Y[t] * W[s] * Z[t]
    return total


def s2_raw(m: int, n: int) -> int:
    _need_positive(m, n)
    return _interior(m, n, "S2")


def s3_defining(m: int, n: int) -> int:
    """S3 as the quadruple sum it is split off from."""
    _need_positive(m, n)
    return _interior(m, n, "S3")


def s3_raw(m: int, n: int) -> int:
    """S3 after both inner sums are evaluated and indices reflected."""
    _need_positive(m, n)
    return sum(
        C(m + n + a - b - 1, m + a - 1) * C(m + n - a + b - 1, n + b - 1)
        for a in range(1, m + 1)
        for b in range(1, n + 1)
    )


def s4_raw(m: int, n: int) -> int:
    """S4 after both inner sums are evaluated, over the full index range."""
    _need_positive(m, n)
    return sum(
        C(m + n + a - b - 1, m + a + 1) * C(m + n - a + b - 1, n + b + 1)
        for a in range(1, m + 1)
        for b in range(1, n + 1)
    )


def s5_raw(m: int, n: int) -> int:
    _need_positive(m, n)
    return _interior(m, n, "S5")


# --------------------------------------------------------------------------
# Breakdown


@dataclass(frozen=True)
class SumBreakdown:
    """All pieces of the quadruple sum at one ``(m, n)``.

    ``s0`` .. ``s5`` hold the raw sums; ``closed_forms`` maps ``"s1"`` ..
    ``"s4"`` to the closed-form values.
    """

    m: int
    n: int
    s0: int
    s1: int
    s2: int
    s3: int
    s4: int
    s5: int
    quadruple: int
    closed: int
    closed_forms: dict = field(default_factory=dict, compare=False)

    @property
    def combined(self) -> int:
        return self.s0 + self.s1 + self.s2 - self.s3 - self.s4 + self.s5

    def failures(self) -> list[str]:
        """Names of the identities that fail; empty when everything holds."""
        bad = []
        if self.s5 != 0:
            bad.append("S5 = 0")
        for name in ("s1", "s2", "s3", "s4"):
            if getattr(self, name) != self.closed_forms[name]:
                bad.append(f"{name.upper()} raw = closed")
        if self.combined != self.quadruple:
            bad.append("S0+S1+S2-S3-S4+S5 = quadruple sum")
        if self.quadruple != self.closed:
            bad.append("quadruple sum = closed count")
        return bad

    @property
    def ok(self) -> bool:
        return not self.failures()


def breakdown(m: int, n: int, check: bool = True) -> SumBreakdown:
    """Evaluate every piece at ``(m, n)``.

    With ``check`` (default) an :class:`IdentityError` is raised if any
    internal identity fails.
    """
    _need_positive(m, n)
    bd = SumBreakdown(
        m=m,
        n=n,
        s0=s0(m, n),
        s1=s1_raw(m, n),
        s2=s2_raw(m, n),
        s3=s3_raw(m, n),
        s4=s4_raw(m, n),
        s5=s5_raw(m, n),
        quadruple=quadruple_sum(m, n),
        closed=count_rect(m, n),
        closed_forms={
            "s1": s1_closed(m, n),
            "s2": s2_closed(m, n),
            "s3": s3_closed(m, n),
            "s4": s4_closed(m, n),
        },
    )
    if check and not bd.ok:
        raise IdentityError(f"breakdown({m}, {n}) fails: {', '.join(bd.failures())}")
    return bd


# --------------------------------------------------------------------------
# Telescoping and inner-sum identities


def _s1_term(m, n, a):
    return C(m + n - a, n) * C(m + n + a - 1, n - 1) - C(m + n - a, n + 1) * C(m + n + a - 1, n - 2)


def check_s1_telescoping(m: int, n: int, a: int) -> bool:
    """The S1 summand at ``a`` as a difference of consecutive terms."""
    rhs = C(m + n - a + 1, n + 1) * C(m + n + a - 1, n - 1) - C(m + n - a, n + 1) * C(m + n + a, n - 1)
    return _s1_term(m, n, a) == rhs


def check_s2_telescoping(m: int, n: int, a: int) -> bool:
    """``2a C(m+n+a-1, n-1) C(m+n-a-1, n-1)`` as a difference of consecutive terms."""
    lhs = 2 * a * C(m + n + a - 1, n - 1) * C(m + n - a - 1, n - 1)
    rhs = n * C(m + n + a - 1, n) * C(m + n - a, n) - n * C(m + n + a, n) * C(m + n - a - 1, n)
    return lhs == rhs


def check_s1_sum(m: int, n: int) -> bool:
    """The telescoped S1 sum equals its closed form."""
    return 2 * sum(_s1_term(m, n, a) for a in range(1, m + 1)) == s1_closed(m, n)


def check_s2_sum(m: int, n: int) -> bool:
    """Both a-sums of S2 and the closed form they assemble into."""
    full = m * sum(C(m + n + a - 1, n - 1) * C(m + n - a - 1, n - 1) for a in range(-m, m + 1))
    if full != m * C(2 * m + 2 * n - 1, 2 * n - 1):
        return False
    weighted = sum(2 * a * C(m + n + a - 1, n - 1) * C(m + n - a - 1, n - 1) for a in range(1, m + 1))
    if weighted != n * C(m + n, n) * C(m + n - 1, n):
        return False
    return full - weighted == s2_closed(m, n)


def reduction_failures(m: int, n: int) -> list[str]:
    """Inner-sum evaluations used to simplify S1..S4 that fail at ``(m, n)``.

    Each entry names the identity and the free indices; an empty list means
    all hold.
    """
    _need_positive(m, n)
    f = corner_factor
    bad: list[str] = []
    for a in range(1, m + 1):
        lhs = sum(
            f(a, b) * (C(m + n - a, m - a) * C(m + n - b, m) - C(m + n - a, n + 1) * C(m + n - b, m + 1))
            for b in range(1, n + 1)
        )
        if lhs != _s1_term(m, n, a):
            bad.append(f"S1 b-sum a={a}")
    for a1 in range(1, m + 1):
        for a2 in range(1, m + 1):
            if sum(f(a1, b1) * C(m + n - a2 - b1, m - a2) for b1 in range(1, n + 1)) != C(
                m + n + a1 - a2 - 1, n - 1
            ):
                bad.append(f"S2 b1-sum a1={a1} a2={a2}")
            if sum(f(a2, b2) * C(m + n - a1 - b2, m - a1) for b2 in range(1, n + 1)) != C(
                m + n - a1 + a2 - 1, n - 1
            ):
                bad.append(f"S2 b2-sum a1={a1} a2={a2}")
    for a1 in range(1, m + 1):
        for b1 in range(1, n + 1):
            if sum(
                C(a1 + a2 + n - m - 2, n - 1) * C(m + n - a2 - b1, m - a2) for a2 in range(1, m + 1)
            ) != C(2 * n + a1 - b1 - 1, a1 - 1):
                bad.append(f"S3 a2-sum a1={a1} b1={b1}")
            if sum(
                C(b1 + b2 + m - n - 2, m - 1) * C(m + n - a1 - b2, m - a1) for b2 in range(1, n + 1)
            ) != C(2 * m - a1 + b1 - 1, b1 - 1):
                bad.append(f"S3 b2-sum a1={a1} b1={b1}")
    reflected = sum(
        C(2 * m - a + b - 1, b - 1) * C(2 * n + a - b - 1, a - 1)
        for a in range(1, m + 1)
        for b in range(1, n + 1)
    )
    if reflected != s3_raw(m, n):
        bad.append("S3 reflection")
    if reflected != s3_defining(m, n):
        bad.append("S3 inner sums")
    for a2 in range(1, m + 1):
        for b1 in range(1, n + 1):
            if sum(f(a1, b1) * C(m + n - a1 - a2, n + 1) for a1 in range(1, m + 1)) != C(
                m + n - a2 + b1 - 1, n + b1 + 1
            ):
                bad.append(f"S4 a1-sum a2={a2} b1={b1}")
            if sum(f(a2, b2) * C(m + n - b1 - b2, m + 1) for b2 in range(1, n + 1)) != C(
                m + n + a2 - b1 - 1, m + a2 + 1
            ):
                bad.append(f"S4 b2-sum a2={a2} b1={b1}")
    for a in range(1, m + 1):
        for b in range(1, n + 1):
            if (a >= m - 1 or b >= n - 1) and C(m + n + a - b - 1, m + a + 1) * C(
                m + n - a + b - 1, n + b + 1
            ):
                bad.append(f"S4 vanishing a={a} b={b}")
    if _interior(m, n, "S4") != s4_raw(m, n):
        bad.append("S4 inner sums")
    return bad
