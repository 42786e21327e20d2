"""Blocks of symmetric group algebras over a field of characteristic p.

Blocks of kS_n are labeled by p-cores: two irreducible characters lie in the
same block exactly when their partitions have the same p-core, so a block is
the pair (core, weight) with |core| + p*weight = n.  The defect groups of a
weight-w block are Sylow p-subgroups of S_{pw}, which gives the defect order
exponent via the p-adic valuation of (pw)!.

Dimension counts here depend only on (p, weight), because same-weight blocks
of (possibly different) symmetric groups are derived equivalent.  The center
dimension of a block is taken to be the number of partitions of n with the
block's p-core, i.e. rho(n, core, p), for *all* blocks: for principal blocks
this is the character count directly, and the general case is forced from it
by weight-only dependence.  The first Hochschild cohomology dimension is the
weight-partial-sum formula: (2 if p == 2 else 1) * sum_{j<w} rho(pj, empty).
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import EMPTY, Partition, is_p_core, partitions_of, p_core, rho
from .partitions import count_pcores as _count_pcores
from .partitions import _check_prime


def sylow_exponent(p: int, m: int) -> int:
    """The p-adic valuation of m! (Legendre: sum of floor(m / p^i))."""
    _check_prime(p)
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return total


@dataclass(frozen=True)
class BlockDescriptor:
    """A block of kS_n: its p-core, weight, and defect-group order exponent.

    n and core are redundant given the weight, but carrying both makes
    equality cheap and serialization stable; the constructor enforces the
    tie |core| + p*weight = n and the Sylow defect exponent.
    """

    p: int
    n: int
    core: Partition
    weight: int
    defect_order_exp: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")
        if not is_p_core(self.core, self.p):
            raise ValueError("core %r is not its own %d-core" % (self.core, self.p))
        if self.core.size + self.p * self.weight != self.n:
            raise ValueError(
                "inconsistent block data: |core|=%d, p=%d, weight=%d, n=%d"
                % (self.core.size, self.p, self.weight, self.n)
            )
        expected = sylow_exponent(self.p, self.p * self.weight)
        if self.defect_order_exp != expected:
            raise ValueError(
                "defect order exponent %d does not match Sylow exponent %d"
                % (self.defect_order_exp, expected)
            )


def make_block(p: int, core: Partition, weight: int) -> BlockDescriptor:
    """Descriptor for the weight-w block of kS_(|core|+pw) with the given core."""
    return BlockDescriptor(
        p=p,
        n=core.size + p * weight,
        core=core,
        weight=weight,
        defect_order_exp=sylow_exponent(p, p * weight),
    )


def principal_block(p: int, weight: int) -> BlockDescriptor:
    """The principal block of kS_{p*weight}: empty core, the given weight."""
    return make_block(p, EMPTY, weight)


def blocks_of(p: int, n: int) -> list[BlockDescriptor]:
    """All blocks of kS_n: one per p-core of size n - pw, any weight w >= 0.

    Ordered by decreasing weight, then by the enumeration order of cores.
    Every partition of n lands in exactly one listed block via its p-core.
    """
    _check_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for w in range(n // p, -1, -1):
        for lam in partitions_of(n - p * w):
            if is_p_core(lam, p):
                out.append(make_block(p, lam, w))
    return out


def block_of_partition(lam: Partition, p: int) -> BlockDescriptor:
    """The block of kS_(|lam|) containing the character labeled by lam."""
    core = p_core(lam, p)
    return make_block(p, core, (lam.size - core.size) // p)


def dim_center(b: BlockDescriptor) -> int:
    """Dimension of the block's center: partitions of n with the block's core."""
    return rho(b.n, b.core, b.p)


def dim_hh1(b: BlockDescriptor) -> int:
    """Dimension of the block's first Hochschild cohomology.

    The weight-partial-sum formula: twice the sum of the principal-block
    center dimensions sum_{j=0}^{w-1} rho(pj, empty) when p = 2, and the
    plain sum for p >= 3.  Zero exactly at weight 0, strictly positive for
    every positive-weight (equivalently, positive-defect) block.
    """
    factor = 2 if b.p == 2 else 1
    return factor * sum(rho(b.p * j, EMPTY, b.p) for j in range(b.weight))


def count_weight_blocks(p: int, n: int, w: int) -> int:
    """Number of weight-w blocks of kS_n, i.e. the p-core count c(n - pw)."""
    _check_prime(p)
    if w < 0 or n - p * w < 0:
        return 0
    return _count_pcores(n - p * w, p)
