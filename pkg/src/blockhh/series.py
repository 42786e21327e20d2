"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the first ``order`` coefficients of a power series
and nothing else; every operation states precisely to which order its result
is known (binary operations truncate to the smaller operand order).  All
arithmetic is exact: coefficients are Python ints or ``fractions.Fraction``,
never floats, so identity checks performed with these series are meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Coeff = Union[int, Fraction]


def _coeff(x) -> Coeff:
    """Validate and normalize a coefficient (Fraction with denominator 1 -> int)."""
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError("exact coefficient required, got %s" % type(x).__name__)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class Series:
    """A power series known modulo t^order.

    ``coeffs[n]`` is the coefficient of t^n; ``order`` equals the number of
    stored coefficients.  Instances are immutable value objects and safe to
    share between threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff]):
        self.coeffs: tuple[Coeff, ...] = tuple(_coeff(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Coeff:
        """Coefficient of t^n (raises IndexError beyond the known order)."""
        if n < 0:
            raise IndexError("negative exponent %d" % n)
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, -other)

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            raise ValueError("negative power; invert explicitly with series_inv")
        if self.order == 0:
            return Series([])
        out = one(self.order)
        for _ in range(k):
            out = series_mul(out, self)
        return out

    def __repr__(self) -> str:
        return "Series(%r)" % (list(self.coeffs),)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append("%s*t" % c if c != 1 else "t")
            else:
                terms.append("%s*t^%d" % (c, n) if c != 1 else "t^%d" % n)
        body = " + ".join(terms) if terms else "0"
        return "%s + O(t^%d)" % (body, self.order)


def series_add(a: Series, b: Series) -> Series:
    """Coefficientwise sum, truncated to the smaller operand order."""
    n = min(a.order, b.order)
    return Series(a.coeffs[i] + b.coeffs[i] for i in range(n))


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product, truncated to the smaller operand order."""
    n = min(a.order, b.order)
    out = [0] * n
    ac, bc = a.coeffs, b.coeffs
    for i in range(n):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * bc[j]
    return Series(out)


def series_inv(a: Series) -> Series:
    """Multiplicative inverse of a unit series, to ``a.order``.

    Requires a nonzero constant coefficient; the usual triangular recurrence
    b_n = -(sum_{k=1}^{n} a_k b_{n-k}) / a_0 is exact over the rationals.
    """
    if a.order == 0:
        raise ValueError("cannot invert a series with no known coefficients")
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ValueError("series is not a unit: constant coefficient is zero")
    inv0 = Fraction(1, 1) / a0
    out: list[Coeff] = [_coeff(inv0)]
    for n in range(1, a.order):
        acc = 0
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak != 0:
                acc += ak * out[n - k]
        out.append(_coeff(Fraction(-acc) / a0 if acc else 0))
    return Series(out)


def shift(a: Series, k: int) -> Series:
    """Multiply by t^k (k >= 0) or divide by t^(-k) (k < 0).

    Multiplication raises the order by k.  Division lowers exponents and the
    order, and requires the low coefficients to vanish: dividing a series that
    is not divisible by t^(-k) raises ValueError.
    """
    if k >= 0:
        return Series((0,) * k + a.coeffs)
    k = -k
    if k > a.order:
        raise ValueError("cannot divide by t^%d: only %d coefficients known" % (k, a.order))
    for i in range(k):
        if a.coeffs[i] != 0:
            raise ValueError(
                "series is not divisible by t^%d: coefficient of t^%d is %s"
                % (k, i, a.coeffs[i])
            )
    return Series(a.coeffs[k:])


def substitute_power(a: Series, m: int) -> Series:
    """The substitution t -> t^m; knowing a mod t^N gives the result mod t^(mN)."""
    if m < 1:
        raise ValueError("substitution power must be >= 1, got %d" % m)
    out = [0] * (m * a.order)
    for n, c in enumerate(a.coeffs):
        out[m * n] = c
    return Series(out)


def section(a: Series, m: int, s: int) -> Series:
    """The s-th m-section: coefficient n of the result is coefficient mn+s of a.

    Sections realize the decomposition a(t) = sum_{s=0}^{m-1} a_s(t^m) t^s.
    The result is known to order ceil((a.order - s) / m).
    """
    if m < 1:
        raise ValueError("section modulus must be >= 1, got %d" % m)
    if not 0 <= s < m:
        raise ValueError("section residue %d out of range 0..%d" % (s, m - 1))
    return Series(a.coeffs[s::m])


def truncate(a: Series, order: int) -> Series:
    """Forget coefficients at and beyond t^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > a.order:
        raise ValueError("cannot extend a series known only to order %d" % a.order)
    return Series(a.coeffs[:order])


def one(order: int) -> Series:
    """The constant series 1, known to the given order."""
    if order < 1:
        raise ValueError("order must be positive")
    return Series([1] + [0] * (order - 1))


def partition_gf(order: int) -> Series:
    """The partition-counting series prod_{n>=1} (1 - t^n)^(-1).

    Coefficient n is the number of partitions of n.  Computed by the Euler
    product, one factor at a time; each 1/(1 - t^n) factor is an in-place
    prefix-sum with stride n, so the whole thing is O(order^2) int additions.
    """
    if order < 1:
        raise ValueError("order must be positive")
    c = [0] * order
    c[0] = 1
    for n in range(1, order):
        for k in range(n, order):
            c[k] += c[k - n]
    return Series(c)


def pcore_count_gf(p: int, order: int) -> Series:
    """Counting series for p-core partitions: coefficient n is c(n).

    Uses the classical product prod_{n>=1} (1 - t^(pn))^p / (1 - t^n).
    The combinatorial definition (partitions equal to their own p-core) is
    what the test suite enumerates against; this product is the fast route.
    """
    _check_prime(p)
    if order < 1:
        raise ValueError("order must be positive")
    c = [0] * order
    c[0] = 1
    for n in range(1, order):
        for k in range(n, order):
            c[k] += c[k - n]
    for n in range(1, (order - 1) // p + 1):
        step = p * n
        for _ in range(p):
            for k in range(order - 1, step - 1, -1):
                c[k] -= c[k - step]
    return Series(c)


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError("p must be prime, got %d" % p)
