"""Ground-truth dimensions for symmetric group algebras, from first principles.

The Hochschild cohomology of a group algebra decomposes over conjugacy
classes: in degree one the summand for the class of an element g is
H^1(C(g), k) = Hom(C(g), F_p), where C(g) is the centralizer.  For a
permutation of cycle type (a^{m_a}), the centralizer is the direct product
over distinct cycle lengths a of wreath products C_a wr S_{m_a}.

A wreath product (C_a)^m : S_m abelianizes to C_a x S_m^{ab}: inside the base
(C_a)^m, coordinates are permuted by conjugation, so differences of
coordinates are commutators and only the diagonal C_a survives, while S_m
contributes its abelianization (C_2 for m >= 2, trivial otherwise).  Hence

    dim Hom(C_a wr S_m, F_p) = [p divides a] + [p = 2 and m >= 2],

and the degree-one dimension for kS_n is the sum of these over the cycle
types of all partitions of n.  None of this touches generating functions,
which is the point: it is the independent side of every end-to-end check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, partitions_of, _check_prime


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored as sorted (length, multiplicity) pairs."""

    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for a, m in self.multiplicities:
            if a < 1 or m < 1:
                raise ValueError("cycle lengths and multiplicities must be positive")
        lengths = [a for a, _ in self.multiplicities]
        if lengths != sorted(set(lengths)):
            raise ValueError("multiplicities must be sorted by distinct cycle length")

    @classmethod
    def from_partition(cls, lam: Partition) -> "CycleType":
        mult: dict[int, int] = {}
        for a in lam.parts:
            mult[a] = mult.get(a, 0) + 1
        return cls(tuple(sorted(mult.items())))

    def to_partition(self) -> Partition:
        parts = []
        for a, m in sorted(self.multiplicities, reverse=True):
            parts.extend([a] * m)
        return Partition(parts)

    @property
    def size(self) -> int:
        return sum(a * m for a, m in self.multiplicities)


def hom_to_Fp_dim(p: int, cycle_type: CycleType) -> int:
    """dim Hom(C(g), F_p) for g of the given cycle type, via the wreath formula."""
    _check_prime(p)
    return sum(
        (1 if a % p == 0 else 0) + (1 if p == 2 and m >= 2 else 0)
        for a, m in cycle_type.multiplicities
    )


def hh1_group_oracle(p: int, n: int) -> int:
    """dim HH^1(kS_n) as the sum of centralizer Hom-dimensions over classes."""
    _check_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        hom_to_Fp_dim(p, CycleType.from_partition(lam)) for lam in partitions_of(n)
    )


def dim_center_oracle(n: int) -> int:
    """dim Z(kS_n): the number of conjugacy classes, i.e. partitions of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return len(partitions_of(n))
