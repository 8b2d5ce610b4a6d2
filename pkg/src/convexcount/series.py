"""Truncated bivariate power series with exact rational coefficients.

A :class:`BivariateSeries` of degree ``D`` stores the coefficients of
``x**i * y**j`` for ``i + j <= D`` and nothing else; all operations are exact
modulo terms of total degree above ``D``.

The second half of the module builds both sides of the generating-function
identities behind the evaluation of S3 and S4 and compares them
coefficient by coefficient.  ``*_sides`` functions return a list of
``(label, lhs, rhs)`` triples; the matching ``verify_*`` function is true iff
every pair agrees.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import counting
from .exactnum import binomial as C

__all__ = [
    "BivariateSeries",
    "from_polynomial",
    "from_coefficients",
    "zero",
    "one",
    "var_x",
    "var_y",
    "monomial",
    "reciprocal",
    "sqrt",
    "delta",
    "euler_plus2",
    "even_even_part",
    "jacobi_gf_lhs",
    "jacobi_gf_rhs",
    "first_mismatch",
    "jacobi_sides",
    "eq_delta_sides",
    "s3_gf_sides",
    "s4_gf_sides",
    "s4_decomposition_sides",
    "bisection_sides",
    "verify_jacobi_gf",
    "verify_eq_delta",
    "verify_s3_gf",
    "verify_s4_gf",
    "verify_s4_decomposition",
    "verify_bisection",
    "dump",
    "DEFAULT_DEGREE",
]

DEFAULT_DEGREE = 12


class BivariateSeries:
    """Coefficients ``c[i][j]`` for ``i + j <= degree``.

    Supports ``+``, ``-``, ``*`` (with series of the same degree or with
    rationals), unary minus and non-negative integer powers.
    """

    __slots__ = ("degree", "_c")

    def __init__(self, degree: int, rows: Sequence[Sequence[Fraction]] | None = None):
        if degree < 0:
            raise ValueError(f"degree must be non-negative, got {degree}")
        self.degree = degree
        if rows is None:
            self._c = tuple(tuple(Fraction(0) for _ in range(degree - i + 1)) for i in range(degree + 1))
        else:
            if len(rows) != degree + 1 or any(len(r) != degree - i + 1 for i, r in enumerate(rows)):
                raise ValueError("coefficient rows do not match the triangular shape")
            self._c = tuple(tuple(Fraction(v) for v in r) for r in rows)

    # -- access ---------------------------------------------------------

    def coeff(self, i: int, j: int) -> Fraction:
        """Coefficient of ``x**i y**j``; zero for negative exponents."""
        if i < 0 or j < 0:
            return Fraction(0)
        if i + j > self.degree:
            raise IndexError(f"({i}, {j}) is beyond truncation degree {self.degree}")
        return self._c[i][j]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.coeff(*ij)

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        """All stored ``(i, j, c)``, ordered by total degree then ``i``."""
        for d in range(self.degree + 1):
            for i in range(d + 1):
                yield i, d - i, self._c[i][d - i]

    def is_zero(self) -> bool:
        return all(v == 0 for _, _, v in self.terms())

    # -- ring operations ------------------------------------------------

    def _check(self, other: "BivariateSeries") -> None:
        if other.degree != self.degree:
            raise ValueError(f"truncation mismatch: {self.degree} vs {other.degree}")

    def _lift(self, other) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return monomial(0, 0, self.degree, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        return BivariateSeries(self.degree, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries(self.degree, [[-x for x in r] for r in self._c])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "BivariateSeries":
        s = Fraction(s)
        return BivariateSeries(self.degree, [[s * x for x in r] for r in self._c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        self._check(other)
        D = self.degree
        a, b = self._c, other._c
        out = [[Fraction(0)] * (D - i + 1) for i in range(D + 1)]
        nz_b = [(k, l, v) for k, r in enumerate(b) for l, v in enumerate(r) if v]
        for i, ra in enumerate(a):
            for j, u in enumerate(ra):
                if not u:
                    continue
                room = D - i - j
                for k, l, v in nz_b:
                    if k + l <= room:
                        out[i + k][j + l] += u * v
        return BivariateSeries(D, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivariateSeries":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = one(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, BivariateSeries):
            return self * reciprocal(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.degree == other.degree and self._c == other._c

    __hash__ = None  # type: ignore[assignment]

    # -- substitutions --------------------------------------------------

    def shift(self, p: int, q: int) -> "BivariateSeries":
        """Multiply by ``x**p y**q``, dropping what falls beyond the degree."""
        D = self.degree
        out = [[Fraction(0)] * (D - i + 1) for i in range(D + 1)]
        for i, j, v in self.terms():
            if i + j + p + q <= D:
                out[i + p][j + q] = v
        return BivariateSeries(D, out)

    def negate_x(self) -> "BivariateSeries":
        """``s(-x, y)``."""
        return BivariateSeries(self.degree, [[-v if i % 2 else v for v in r] for i, r in enumerate(self._c)])

    def negate_y(self) -> "BivariateSeries":
        """``s(x, -y)``."""
        return BivariateSeries(self.degree, [[-v if j % 2 else v for j, v in enumerate(r)] for r in self._c])

    def truncate(self, degree: int) -> "BivariateSeries":
        if degree > self.degree:
            raise ValueError("cannot raise the truncation degree")
        return BivariateSeries(degree, [r[: degree - i + 1] for i, r in enumerate(self._c[: degree + 1])])

    def __repr__(self) -> str:
        shown = [f"{v}*x^{i}y^{j}" for i, j, v in self.terms() if v][:8]
        more = " + ..." if sum(1 for *_, v in self.terms() if v) > 8 else ""
        return f"BivariateSeries(D={self.degree}: {' + '.join(shown) or '0'}{more})"


# --------------------------------------------------------------------------
# Constructors


def zero(D: int) -> BivariateSeries:
    return BivariateSeries(D)


def monomial(i: int, j: int, D: int, c=1) -> BivariateSeries:
    return from_polynomial([(i, j, c)], D)


def one(D: int) -> BivariateSeries:
    return monomial(0, 0, D)


def var_x(D: int) -> BivariateSeries:
    return monomial(1, 0, D) if D >= 1 else zero(D)


def var_y(D: int) -> BivariateSeries:
    return monomial(0, 1, D) if D >= 1 else zero(D)


def from_polynomial(terms: Iterable[tuple[int, int, object]], D: int) -> BivariateSeries:
    """Embed ``sum c x**i y**j``; repeated exponents are summed.

    Raises
    ------
    ValueError
        If some ``i + j`` exceeds ``D`` or an exponent is negative.
    """
    rows = [[Fraction(0)] * (D - i + 1) for i in range(D + 1)]
    for i, j, c in terms:
        if i < 0 or j < 0 or i + j > D:
            raise ValueError(f"term x^{i} y^{j} outside truncation degree {D}")
        rows[i][j] += Fraction(c)
    return BivariateSeries(D, rows)


def from_coefficients(fn, D: int) -> BivariateSeries:
    """Series whose ``(i, j)`` coefficient is ``fn(i, j)``."""
    return BivariateSeries(D, [[fn(i, j) for j in range(D - i + 1)] for i in range(D + 1)])


# --------------------------------------------------------------------------
# Analytic operations


def reciprocal(s: BivariateSeries) -> BivariateSeries:
    """``1 / s``, solved degree by degree.

    Raises
    ------
    ZeroDivisionError
        If the constant term is zero.
    """
    c00 = s.coeff(0, 0)
    if c00 == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    D = s.degree
    inv0 = 1 / c00
    sc = s._c
    nz = [(k, l, v) for k, r in enumerate(sc) for l, v in enumerate(r) if v and (k or l)]
    t = [[Fraction(0)] * (D - i + 1) for i in range(D + 1)]
    t[0][0] = inv0
    for d in range(1, D + 1):
        for i in range(d + 1):
            j = d - i
            acc = Fraction(0)
            for k, l, v in nz:
                if k <= i and l <= j:
                    acc += v * t[i - k][j - l]
            t[i][j] = -inv0 * acc
    return BivariateSeries(D, t)


def sqrt(s: BivariateSeries) -> BivariateSeries:
    """The square root with constant term 1.

    Coefficients follow order by order from ``t * t = s``: at each ``(i, j)``
    the only unknown in the convolution is ``2 t[i][j]``.

    Raises
    ------
    ValueError
        If the constant term of ``s`` is not 1.
    """
    if s.coeff(0, 0) != 1:
        raise ValueError("sqrt needs constant term 1")
    D = s.degree
    t = [[Fraction(0)] * (D - i + 1) for i in range(D + 1)]
    t[0][0] = Fraction(1)
    for d in range(1, D + 1):
        for i in range(d + 1):
            j = d - i
            acc = Fraction(0)
            for k in range(i + 1):
                for l in range(j + 1):
                    if (k, l) != (0, 0) and (k, l) != (i, j):
                        acc += t[k][l] * t[i - k][j - l]
            t[i][j] = (s._c[i][j] - acc) / 2
    return BivariateSeries(D, t)


def delta(D: int = DEFAULT_DEGREE) -> BivariateSeries:
    """``sqrt(1 - 2x - 2y - 2xy + x^2 + y^2)``."""
    poly = [(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, -2), (2, 0, 1), (0, 2, 1)]
    return sqrt(from_polynomial([t for t in poly if t[0] + t[1] <= D], D))


def euler_plus2(s: BivariateSeries) -> BivariateSeries:
    """Apply ``x d/dx + y d/dy + 2``: scales ``x^m y^n`` by ``m + n + 2``."""
    return BivariateSeries(s.degree, [[(i + j + 2) * v for j, v in enumerate(r)] for i, r in enumerate(s._c)])


def even_even_part(s: BivariateSeries) -> BivariateSeries:
    """Even-even part of ``s`` with ``x^2 -> x``, ``y^2 -> y``.

    The result has degree ``s.degree // 2`` and ``(m, n)`` coefficient
    ``s[2m, 2n]``.
    """
    avg = (s + s.negate_x() + s.negate_y() + s.negate_x().negate_y()).scale(Fraction(1, 4))
    D = s.degree // 2
    return from_coefficients(lambda m, n: avg.coeff(2 * m, 2 * n), D)


# --------------------------------------------------------------------------
# Jacobi-polynomial generating function


def jacobi_gf_lhs(alpha: int, beta: int, D: int = DEFAULT_DEGREE) -> BivariateSeries:
    """``sum C(m+n+alpha, m) C(m+n+beta, n) x^m y^n``."""
    return from_coefficients(lambda m, n: C(m + n + alpha, m) * C(m + n + beta, n), D)


def _check_params(alpha: int, beta: int) -> None:
    if not (isinstance(alpha, int) and isinstance(beta, int)) or alpha < 0 or beta < 0:
        raise ValueError(f"alpha and beta must be non-negative integers, got ({alpha}, {beta})")


class _Kernels:
    """Shared building blocks at one degree, computed once."""

    def __init__(self, D: int):
        self.D = D
        x, y = var_x(D), var_y(D)
        self.x, self.y = x, y
        self.delta = delta(D)
        self.inv_delta = reciprocal(self.delta)
        # 2 / (1 -+ (x - y) + Delta), each with constant term 1.
        self.p = reciprocal((1 - x + y + self.delta).scale(Fraction(1, 2)))
        self.q = reciprocal((1 + x - y + self.delta).scale(Fraction(1, 2)))
        # 2 / (1 - x - y + Delta)
        self.r = reciprocal((1 - x - y + self.delta).scale(Fraction(1, 2)))


_cache: dict[int, _Kernels] = {}


def _kernels(D: int) -> _Kernels:
    k = _cache.get(D)
    if k is None:
        k = _cache[D] = _Kernels(D)
    return k


def jacobi_gf_rhs(alpha: int, beta: int, D: int = DEFAULT_DEGREE) -> BivariateSeries:
    """``2^(alpha+beta) / (Delta (1-x+y+Delta)^alpha (1+x-y+Delta)^beta)``."""
    _check_params(alpha, beta)
    k = _kernels(D)
    return k.inv_delta * k.p**alpha * k.q**beta


# --------------------------------------------------------------------------
# Identity sides


Sides = list  # list of (label, lhs, rhs)


def first_mismatch(s: BivariateSeries, t: BivariateSeries) -> tuple[int, int] | None:
    """First ``(m, n)`` in (total degree, m) order where ``s`` and ``t`` differ."""
    if s.degree != t.degree:
        raise ValueError(f"truncation mismatch: {s.degree} vs {t.degree}")
    for (i, j, u), (_, _, v) in zip(s.terms(), t.terms()):
        if u != v:
            return i, j
    return None


def _all_equal(sides: Sides) -> bool:
    return all(first_mismatch(lhs, rhs) is None for _, lhs, rhs in sides)


def jacobi_sides(alpha: int, beta: int, D: int = DEFAULT_DEGREE) -> Sides:
    _check_params(alpha, beta)
    return [(f"jacobi({alpha},{beta})", jacobi_gf_lhs(alpha, beta, D), jacobi_gf_rhs(alpha, beta, D))]


def eq_delta_sides(D: int = DEFAULT_DEGREE) -> Sides:
    """``sum (m+n)/2 C(m+n-1,m) C(m+n-1,n) x^m y^n = x y / Delta^3``.

    Also compared: the operator route ``(x y / 2) E[rhs(1, 1)]`` with
    ``E = x d/dx + y d/dy + 2``, and the closed form of S3.
    """
    k = _kernels(D)
    lhs = from_coefficients(
        lambda m, n: Fraction(m + n, 2) * C(m + n - 1, m) * C(m + n - 1, n) if m and n else 0, D
    )
    xy_over_cube = k.inv_delta**3 * k.x * k.y
    operator = euler_plus2(jacobi_gf_rhs(1, 1, D)).shift(1, 1).scale(Fraction(1, 2))
    s3 = from_coefficients(lambda m, n: counting.s3_closed(m, n) if m and n else 0, D)
    return [
        ("eq-delta", lhs, xy_over_cube),
        ("eq-delta operator", operator, xy_over_cube),
        ("eq-delta vs S3 closed form", s3, xy_over_cube),
    ]


def _geometric(step: BivariateSeries, first: BivariateSeries) -> BivariateSeries:
    """``first + first*step + first*step^2 + ...`` for ``step`` without constant term.

    Stops at the first term that vanishes identically; since ``step`` raises
    the minimal total degree by at least one, that happens within
    ``degree + 1`` terms.
    """
    if step.coeff(0, 0) != 0:
        raise ValueError("geometric ratio must have zero constant term")
    total = zero(step.degree)
    term = first
    for _ in range(step.degree + 2):
        if term.is_zero():
            return total
        total = total + term
        term = term * step
    raise AssertionError("geometric series did not terminate within the truncation degree")


def s3_gf_sides(D: int = DEFAULT_DEGREE) -> Sides:
    """Generating function of S3: direct, kernel sum, and ``x y / Delta^3``."""
    k = _kernels(D)

    def summand_sum(m, n):
        return sum(
            C(m + n - a + b - 1, m - a) * C(m + n + a - b - 1, n - b)
            for a in range(1, m + 1)
            for b in range(1, n + 1)
        )

    direct = from_coefficients(summand_sum, D)
    # sum_a x^a q^(2a-1) and sum_b y^b p^(2b-1) with p, q = 2/(1 -+ (x-y) + Delta).
    a_sum = _geometric(k.x * k.q * k.q, k.x * k.q)
    b_sum = _geometric(k.y * k.p * k.p, k.y * k.p)
    kernel = k.inv_delta * a_sum * b_sum
    closed = k.inv_delta**3 * k.x * k.y
    return [
        ("s3-gf direct = kernel sum", direct, kernel),
        ("s3-gf kernel sum = xy/Delta^3", kernel, closed),
    ]


def s4_decomposition_sides(D: int = DEFAULT_DEGREE) -> Sides:
    """``16x^3y^3/(Delta^3 (1-x-y+Delta)^4)`` against its four-term split."""
    k = _kernels(D)
    g_closed = (k.inv_delta**3 * k.r**4).shift(3, 3)
    four_xy = (k.inv_delta * k.r * k.r).shift(1, 1)  # 4xy / (Delta (1-x-y+Delta)^2)
    split = k.inv_delta + four_xy + (k.inv_delta**3).shift(1, 1) - (1 - k.x - k.y) * k.inv_delta**2
    return [("s4 four-term decomposition", g_closed, split)]


def s4_gf_sides(D: int = DEFAULT_DEGREE) -> Sides:
    """Generating function of S4, its four-term split, and the alpha=beta=2 case."""
    k = _kernels(D)

    def summand_sum(m, n):
        return sum(
            C(m + n - a + b - 1, m - a - 2) * C(m + n + a - b - 1, n - b - 2)
            for a in range(1, m - 1)
            for b in range(1, n - 1)
        )

    direct = from_coefficients(summand_sum, D)
    # x^(a+2) y^(b+2) 2^(2a+2b+6) / (Delta p'^(2b+3) q'^(2a+3)) summed over a, b >= 1.
    a_sum = _geometric(k.x * k.q * k.q, k.x * k.q**5)
    b_sum = _geometric(k.y * k.p * k.p, k.y * k.p**5)
    kernel = (k.inv_delta * a_sum * b_sum).shift(2, 2)
    g_closed = (k.inv_delta**3 * k.r**4).shift(3, 3)
    shifted_22 = from_coefficients(
        lambda m, n: C(m + n, m - 1) * C(m + n, n - 1) if m and n else 0, D
    )
    four_xy = (k.inv_delta * k.r * k.r).shift(1, 1)
    s4 = from_coefficients(lambda m, n: counting.s4_closed(m, n) if m and n else 0, D)
    return [
        ("s4-gf direct = kernel sum", direct, kernel),
        ("s4-gf kernel sum = 16x^3y^3/(Delta^3(1-x-y+Delta)^4)", kernel, g_closed),
        ("s4-gf direct vs S4 closed form", direct, s4),
        ("jacobi(2,2) shifted = 4xy/(Delta(1-x-y+Delta)^2)", shifted_22, four_xy),
    ] + s4_decomposition_sides(D)


def bisection_sides(D: int = DEFAULT_DEGREE) -> Sides:
    """``sum C(2m+2n, 2m) x^m y^n = (1-x-y)/Delta^2``, also via bisecting ``1/(1-x-y)``."""
    k = _kernels(D)
    lhs = from_coefficients(lambda m, n: C(2 * m + 2 * n, 2 * m), D)
    rhs = (1 - k.x - k.y) * k.inv_delta**2
    big = 2 * D
    f = reciprocal(1 - var_x(big) - var_y(big))
    return [
        ("bisection", lhs, rhs),
        ("bisection of 1/(1-x-y)", even_even_part(f), lhs),
    ]


def verify_jacobi_gf(alpha: int, beta: int, D: int = DEFAULT_DEGREE) -> bool:
    return _all_equal(jacobi_sides(alpha, beta, D))


def verify_eq_delta(D: int = DEFAULT_DEGREE) -> bool:
    return _all_equal(eq_delta_sides(D))


def verify_s3_gf(D: int = DEFAULT_DEGREE) -> bool:
    return _all_equal(s3_gf_sides(D))


def verify_s4_gf(D: int = DEFAULT_DEGREE) -> bool:
    return _all_equal(s4_gf_sides(D))


def verify_s4_decomposition(D: int = DEFAULT_DEGREE) -> bool:
    return _all_equal(s4_decomposition_sides(D))


def verify_bisection(D: int = 14) -> bool:
    return _all_equal(bisection_sides(D))


def dump(s: BivariateSeries) -> str:
    """``m n p/q`` per coefficient, ordered by total degree then ``m``."""
    return "\n".join(f"{i} {j} {v.numerator}/{v.denominator}" for i, j, v in s.terms())
