"""Rational functions as exact polynomial pairs.

Provides power-series expansion at 0, reconstruction of a rational function
from a series prefix (an exact Pade-style fit, solved over the rationals with
no tolerances), and the constructive descent g(t) from f(t) = g(t^m): the
m-sections of numerator and denominator already exhibit g, and a polynomial
cross-multiplication identity certifies the answer exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .series import Coeff, Series, _coeff


class Polynomial:
    """Dense polynomial with exact rational coefficients, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        c = [_coeff(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Coeff) -> Coeff:
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _coeff(acc) if isinstance(acc, Fraction) else acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c: Coeff) -> "Polynomial":
        return Polynomial(Fraction(x) * c for x in self.coeffs)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def substitute_power(self, m: int) -> "Polynomial":
        """The substitution t -> t^m."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if self.is_zero:
            return self
        out = [0] * (m * self.degree + 1)
        for n, c in enumerate(self.coeffs):
            out[m * n] = c
        return Polynomial(out)

    def section(self, m: int, s: int) -> "Polynomial":
        """The s-th m-section: coefficient n of the result is coefficient mn+s."""
        if not 0 <= s < m:
            raise ValueError("section residue %d out of range 0..%d" % (s, m - 1))
        return Polynomial(self.coeffs[s::m])

    def __repr__(self) -> str:
        return "Polynomial(%r)" % (list(self.coeffs),)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                t = "t" if n == 1 else "t^%d" % n
                if c == 1:
                    terms.append(t)
                elif c == -1:
                    terms.append("-" + t)
                else:
                    terms.append("%s*%s" % (c, t))
        out = terms[0]
        for term in terms[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out


def divmod_poly(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact polynomial division with remainder over the rationals."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(0, a.degree - b.degree + 1)
    r = list(a.coeffs)
    lead = Fraction(b.coeffs[-1])
    for k in range(a.degree - b.degree, -1, -1):
        c = Fraction(r[k + b.degree]) / lead
        if c != 0:
            q[k] = c
            for j, bj in enumerate(b.coeffs):
                r[k + j] -= c * bj
    return Polynomial(q), Polynomial(r[: b.degree] if b.degree > 0 else [])


def gcd_poly(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, divmod_poly(a, b)[1]
    if a.is_zero:
        return a
    return a.scale(Fraction(1) / a.coeffs[-1])


class RationalFunction:
    """A quotient of polynomials, kept in a canonical reduced form.

    Canonicalization divides out the polynomial gcd and then scales so the
    denominator has constant term 1 when it is nonzero at 0 (the expandable
    case), and leading coefficient 1 otherwise.  Equality of canonical forms
    therefore decides equality of the functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = Polynomial()
            self.den = Polynomial([1])
            return
        g = gcd_poly(num, den)
        num, _ = divmod_poly(num, g)
        den, _ = divmod_poly(den, g)
        pivot = den(0) if den(0) != 0 else den.coeffs[-1]
        inv = Fraction(1) / pivot
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def substitute_power(self, m: int) -> "RationalFunction":
        """The substitution t -> t^m on the whole function."""
        return RationalFunction(
            self.num.substitute_power(m), self.den.substitute_power(m)
        )

    def __repr__(self) -> str:
        return "RationalFunction(%r, %r)" % (self.num, self.den)

    def __str__(self) -> str:
        num = str(self.num)
        if self.den == Polynomial([1]):
            return num
        if self.num.degree > 0 or "/" in num:
            num = "(%s)" % num
        return "%s/(%s)" % (num, self.den)


def expand(f: RationalFunction, order: int) -> Series:
    """Power-series expansion of f at 0, to the given order.

    Requires the (canonical) denominator to be nonzero at 0; the coefficients
    satisfy the exact recurrence num_n = sum_k den_k * s_(n-k).
    """
    if order < 1:
        raise ValueError("order must be positive")
    d = f.den.coeffs
    if not d or d[0] == 0:
        raise ValueError("denominator vanishes at 0: no power-series expansion")
    n_coeffs = f.num.coeffs
    inv0 = Fraction(1) / d[0]
    out: list[Coeff] = []
    for n in range(order):
        acc = n_coeffs[n] if n < len(n_coeffs) else 0
        for k in range(1, min(n, len(d) - 1) + 1):
            acc -= d[k] * out[n - k]
        out.append(_coeff(Fraction(acc) * inv0 if acc else 0))
    return Series(out)


def rational_fit(
    s: Series, max_num_deg: int, max_den_deg: int
) -> Optional[RationalFunction]:
    """Reconstruct a rational function from a series prefix, or None.

    Solves the Pade-style linear system num = den * s (mod t^order) with
    den(0) = 1, exactly over the rationals, and accepts the solution only
    if its re-expansion reproduces every supplied coefficient.  Returns None
    when no function within the degree bounds matches.  The series must carry
    at least max_num_deg + max_den_deg + 2 coefficients, so the system is
    overdetermined; a shorter series is a usage error, not a failed fit.
    """
    if max_num_deg < 0 or max_den_deg < 0:
        raise ValueError("degree bounds must be nonnegative")
    needed = max_num_deg + max_den_deg + 2
    if s.order < needed:
        raise ValueError(
            "series order %d too small for a (%d, %d) fit: need at least %d"
            % (s.order, max_num_deg, max_den_deg, needed)
        )
    c = s.coeffs
    rows = []
    rhs = []
    for k in range(max_num_deg + 1, s.order):
        rows.append(
            [Fraction(c[k - j]) if k - j >= 0 else Fraction(0) for j in range(1, max_den_deg + 1)]
        )
        rhs.append(Fraction(-c[k]))
    q = _solve_exact(rows, rhs, max_den_deg)
    if q is None:
        return None
    qfull = [Fraction(1)] + q
    num = [
        sum((qfull[j] * c[k - j] for j in range(min(k, max_den_deg) + 1)), Fraction(0))
        for k in range(max_num_deg + 1)
    ]
    f = RationalFunction(Polynomial(num), Polynomial(qfull))
    if expand(f, s.order) != s:
        return None
    return f


def _solve_exact(
    rows: list[list[Fraction]], rhs: list[Fraction], ncols: int
) -> Optional[list[Fraction]]:
    """One exact solution of rows*x = rhs (free variables set to 0), or None."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    nrows = len(m)
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][ncols]
    return x


def descend(f: RationalFunction, m: int) -> RationalFunction:
    """Given f whose expansion is a series in t^m, return g with g(t^m) = f(t).

    Writes numerator and denominator in m-section form, picks the smallest
    residue s whose denominator section is nonzero, and returns the section
    quotient.  The candidate is certified by the exact polynomial identity
    num * den_s(t^m) == den * num_s(t^m), which holds if and only if f really
    is a series in t^m; on failure the offending exponent is located and
    reported.
    """
    if m < 1:
        raise ValueError("descent modulus must be >= 1, got %d" % m)
    if f.den(0) == 0:
        raise ValueError("denominator vanishes at 0: no power-series expansion")
    s = next(s for s in range(m) if not f.den.section(m, s).is_zero)
    g = _section_quotient(f.num, f.den, m, s)
    if g is None:
        e = _first_skew_exponent(f, m)
        raise ValueError(
            "expansion has nonzero coefficient at exponent %d, not divisible by %d"
            % (e, m)
        )
    return g


def _section_quotient(
    num: Polynomial, den: Polynomial, m: int, s: int
) -> Optional[RationalFunction]:
    """Certified section quotient of a raw polynomial pair at residue s.

    None when the denominator section vanishes or the cross-multiplication
    certificate fails.  Every residue whose denominator section is nonzero
    yields the same canonical quotient when num/den is a series in t^m.
    """
    den_s = den.section(m, s)
    if den_s.is_zero:
        return None
    num_s = num.section(m, s)
    if num * den_s.substitute_power(m) != den * num_s.substitute_power(m):
        return None
    return RationalFunction(num_s, den_s)


def _first_skew_exponent(f: RationalFunction, m: int) -> int:
    # A nonzero m-section of f shows a nonzero coefficient no later than
    # deg(num) + (m-1)*deg(den): the section's numerator over the common
    # denominator prod over m-th roots of unity has at most that degree.
    bound = max(f.num.degree, 0) + (m - 1) * max(f.den.degree, 0) + 1
    for n, c in enumerate(expand(f, bound).coeffs):
        if n % m != 0 and c != 0:
            return n
    raise RuntimeError("section certificate failed but no skew exponent found")
