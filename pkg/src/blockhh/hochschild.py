"""Generating functions for block dimension data, and machine identity checks.

Fix a prime p and write z_w and y_w for the center dimension and the first
Hochschild cohomology dimension of a weight-w block.  The series handled here
are

    Z(t) = sum z_w t^w,   Y(t) = sum y_w t^w,

the group-level series sum_n dim HH^1(kS_n) t^n, and for each residue s the
p-core counting sections C_s(t) = sum_n c(np + s) t^n.  The structural facts
being verified, each as an exact coefficientwise identity:

* grouping the symmetric groups by n mod p factors center and HH^1 data
  through the blocks:  sum_n dim Z(kS_{pn+s}) t^{pn+s} = t^s Z(t^p) C_s(t^p),
  and the same shape with Y for HH^1;
* Y(t) = t * phi(t) * Z(t) for a rational phi with phi(0) != 0, and the
  group-level series equals t^p phi(t^p) P(t) where P counts partitions;
* y_w is the partial-sum formula over smaller principal-block centers,
  doubled when p = 2.

phi is never assumed: the verifiers reconstruct it from series data by exact
rational fitting and only then compare against the closed form (2/(1-t) for
p = 2, 1/(1-t) for p >= 3), so a transcription error in either route fails.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .blocks import dim_center, dim_hh1, principal_block
from .partitions import EMPTY, rho, _check_prime
from .rational import Polynomial, RationalFunction, expand, rational_fit
from .series import (
    Coeff,
    Series,
    partition_gf,
    pcore_count_gf,
    section,
    series_inv,
    series_mul,
    shift,
    substitute_power,
    truncate,
)

Discrepancy = tuple[int, Coeff, Coeff]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check: all-or-nothing, first mismatch recorded."""

    identity_name: str
    p: int
    order: int
    holds: bool
    first_discrepancy: Optional[Discrepancy]

    def __post_init__(self):
        if self.holds != (self.first_discrepancy is None):
            raise ValueError("holds must mean exactly: no discrepancy recorded")

    def __str__(self) -> str:
        head = "%s (p=%d, order=%d): " % (self.identity_name, self.p, self.order)
        if self.holds:
            return head + "holds"
        e, lhs, rhs = self.first_discrepancy
        return head + "FAILS at t^%d (lhs=%s, rhs=%s)" % (e, lhs, rhs)


def Z_series(p: int, order: int) -> Series:
    """Center dimensions of principal blocks by weight: coefficient w is z_w.

    Computed by weight counting (rho of the empty core); a short prefix is
    cross-checked against the p-th power of the partition series, which the
    core/quotient bijection says must agree everywhere.
    """
    _check_prime(p)
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [rho(p * n, EMPTY, p) for n in range(order)]
    guard = min(order, 12)
    if (partition_gf(guard) ** p).coeffs != tuple(coeffs[:guard]):
        raise RuntimeError(
            "weight-count route and partition-power route disagree for p=%d" % p
        )
    return Series(coeffs)


def y1_formula(p: int, r: int) -> int:
    """Dimension of degree-r cohomology of a weight-1 block.

    2 when r is congruent to 0 or -1 modulo 2(p-1) (always, when p = 2),
    and 1 otherwise.
    """
    _check_prime(p)
    if r < 1:
        raise ValueError("degree r must be >= 1")
    modulus = 2 * (p - 1)
    return 2 if r % modulus in (0, modulus - 1) else 1


def phi_r1(p: int) -> RationalFunction:
    """The closed-form degree-one ratio: 2/(1-t) for p = 2, 1/(1-t) for p >= 3."""
    _check_prime(p)
    return RationalFunction(Polynomial([2 if p == 2 else 1]), Polynomial([1, -1]))


def hh1_block_series(p: int, order: int) -> Series:
    """Y(t): coefficient w is the HH^1 dimension of any weight-w block."""
    _check_prime(p)
    if order < 1:
        raise ValueError("order must be positive")
    y = shift(series_mul(expand(phi_r1(p), order), Z_series(p, order)), 1)
    return truncate(y, order)


def hh1_group_series(p: int, order: int) -> Series:
    """sum_n dim HH^1(kS_n) t^n, built twice and compared.

    Route one expands the closed-form factor 2t^2/(1-t^2) (p = 2) or
    t^p/(1-t^p) (p >= 3) against the partition series; route two composes
    t^p * phi(t^p) by power substitution.  They must agree coefficientwise.
    """
    _check_prime(p)
    if order < 1:
        raise ValueError("order must be positive")
    lead = 2 if p == 2 else 1
    factor = RationalFunction(
        Polynomial([0] * p + [lead]), Polynomial([1] + [0] * (p - 1) + [-1])
    )
    gf = partition_gf(order)
    closed = series_mul(expand(factor, order), gf)
    q = order // p + 2
    composed = truncate(
        series_mul(shift(substitute_power(expand(phi_r1(p), q), p), p), gf), order
    )
    if closed != composed:
        raise RuntimeError(
            "closed-form and substitution routes disagree for hh1_group_series(p=%d)" % p
        )
    return closed


def fit_phi(p: int, order: int) -> RationalFunction:
    """Reconstruct phi from series data alone: fit (Y(t)/t) * Z(t)^(-1).

    Uses degree bounds (p+2, p+2), generous for the true answer; needs
    order >= 2p + 7 so the fit is overdetermined.  Raises if no rational
    function within the bounds matches (which would falsify rationality).
    """
    _check_prime(p)
    if order < 2 * p + 7:
        raise ValueError(
            "order %d too small to overdetermine the (p+2, p+2) fit; need >= %d"
            % (order, 2 * p + 7)
        )
    y = hh1_block_series(p, order)
    z = Z_series(p, order)
    phi_series = series_mul(shift(y, -1), series_inv(z))
    fitted = rational_fit(phi_series, p + 2, p + 2)
    if fitted is None:
        raise RuntimeError(
            "no rational function of degree <= (%d, %d) matches the phi series"
            % (p + 2, p + 2)
        )
    return fitted


def verify_block_decomposition(
    p: int, s: int, order: int, inject_fault: bool = False
) -> VerificationReport:
    """Check the residue-s factorizations of the group center and HH^1 series.

    Left sides are computed without block theory (partition counts; the
    doubly-constructed group HH^1 series); right sides are t^s Z(t^p) C_s(t^p)
    and t^s Y(t^p) C_s(t^p).  ``inject_fault`` bumps one C_s coefficient, a
    self-test that the comparison actually bites.
    """
    _check_prime(p)
    if not 0 <= s < p:
        raise ValueError("residue %d out of range 0..%d" % (s, p - 1))
    if order < 1:
        raise ValueError("order must be positive")
    name = "eq12:s=%d" % s
    q = order // p + 2
    cs = section(pcore_count_gf(p, p * q + s), p, s)
    if inject_fault:
        cs = _bump(cs, min(1, cs.order - 1))
    cs_p = substitute_power(cs, p)

    lhs_z = _mask(partition_gf(order), p, s)
    rhs_z = truncate(shift(series_mul(substitute_power(Z_series(p, q), p), cs_p), s), order)
    diff = _first_diff(lhs_z, rhs_z)
    if diff is None:
        lhs_y = _mask(hh1_group_series(p, order), p, s)
        rhs_y = truncate(
            shift(series_mul(substitute_power(hh1_block_series(p, q), p), cs_p), s), order
        )
        diff = _first_diff(lhs_y, rhs_y)
    return _report(name, p, order, diff)


def verify_theorem3(p: int, order: int, inject_fault: bool = False) -> VerificationReport:
    """Check Y(t) = t phi(t) Z(t) and the group series = t^p phi(t^p) P(t),
    with phi reconstructed by rational fitting rather than assumed.

    Also checks that the fitted phi matches the closed form, has nonzero
    constant term, and that this constant term is the weight-1 dimension.
    Requires order >= max(20, 2p + 7) so the reconstruction is overdetermined
    and uniqueness against the closed form is forced.  ``inject_fault``
    corrupts one Y coefficient after fitting, as a harness self-test.
    """
    _check_prime(p)
    if order < max(20, 2 * p + 7):
        raise ValueError("order %d too small; need >= %d" % (order, max(20, 2 * p + 7)))
    y = hh1_block_series(p, order)
    z = Z_series(p, order)
    gf = partition_gf(order)
    y1 = y1_formula(p, 1)
    phi_hat = fit_phi(p, order)
    if inject_fault:
        y = _bump(y, order // 2)

    diff = None
    if y[0] != 0:
        diff = (0, y[0], 0)
    elif y[1] != y1:
        diff = (1, y[1], y1)
    if diff is None:
        diff = _first_diff(expand(phi_hat, order), expand(phi_r1(p), order))
        if diff is None:
            # agreement to this order pins the function within the degree bounds
            assert phi_hat == phi_r1(p)
    if diff is None:
        diff = _first_diff(y, truncate(shift(series_mul(expand(phi_hat, order), z), 1), order))
    if diff is None:
        q = order // p + 2
        composed = truncate(
            series_mul(shift(substitute_power(expand(phi_hat, q), p), p), gf), order
        )
        diff = _first_diff(hh1_group_series(p, order), composed)
    if diff is None:
        phi0 = phi_hat.num(0)
        if phi0 == 0 or phi0 != y1:
            diff = (0, phi0, y1)
    return _report("thm3", p, order, diff)


def verify_theorem2(
    p: int, max_weight: int, inject_fault: bool = False
) -> VerificationReport:
    """Check the weight-partial-sum formula for HH^1 dimensions, three ways.

    For every weight w <= max_weight the block value must equal the partial
    sums over rho(pj, empty) and over principal-block center dimensions
    (doubled when p = 2), and the coefficient of Y(t).  The report's order
    field records max_weight.
    """
    _check_prime(p)
    if max_weight < 1:
        raise ValueError("max_weight must be positive")
    y = hh1_block_series(p, max_weight + 1)
    if inject_fault:
        y = _bump(y, max(1, max_weight // 2))
    factor = 2 if p == 2 else 1
    rho_partial = 0
    center_partial = 0
    diff = None
    for w in range(max_weight + 1):
        value = dim_hh1(principal_block(p, w))
        for other in (factor * rho_partial, factor * center_partial, y[w]):
            if value != other:
                diff = (w, value, other)
                break
        if diff is not None:
            break
        rho_partial += rho(p * w, EMPTY, p)
        center_partial += dim_center(principal_block(p, w))
    return _report("thm2", p, max_weight, diff)


def _mask(a: Series, m: int, s: int) -> Series:
    return Series(c if n % m == s else 0 for n, c in enumerate(a.coeffs))


def _bump(a: Series, k: int) -> Series:
    return Series(c + 1 if n == k else c for n, c in enumerate(a.coeffs))


_log = logging.getLogger(__name__)


def _first_diff(lhs: Series, rhs: Series) -> Optional[Discrepancy]:
    # reports carry only the first mismatch; the full diff shows at DEBUG
    diffs = [
        (n, lhs[n], rhs[n])
        for n in range(min(lhs.order, rhs.order))
        if lhs[n] != rhs[n]
    ]
    if diffs and _log.isEnabledFor(logging.DEBUG):
        for n, a, b in diffs:
            _log.debug("coefficient mismatch at t^%d: lhs=%s rhs=%s", n, a, b)
    return diffs[0] if diffs else None


def _report(name: str, p: int, order: int, diff: Optional[Discrepancy]) -> VerificationReport:
    return VerificationReport(name, p, order, diff is None, diff)
