"""Integer partitions and the mod-p abacus: cores, quotients, block-label counts.

The abacus encoding drives everything here.  A partition with at most L parts
is stored as its beta-set {lambda_i + L - i : i = 1..L} (first-column hook
lengths), the beta numbers are laid out on p runners by residue mod p, and
then:

* pushing every bead as far up its runner as it will go and decoding gives
  the p-core;
* reading each runner's bead rows as a beta-set of its own gives the p-tuple
  of quotient partitions.

Runner convention (fixed so round trips are exact): the beta-set length is
always normalized to a multiple of p, runners are indexed by residue, and the
bead at abacus row r of runner i carries beta value r*p + i.  Other labeling
conventions permute the quotient tuple; all yield the same counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class Partition:
    """A weakly decreasing tuple of positive integers; the empty tuple is the
    unique partition of 0."""

    __slots__ = ("parts", "size")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for i, x in enumerate(parts):
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValueError("parts must be positive integers, got %r" % (x,))
            if i and parts[i - 1] < x:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        self.parts = parts
        self.size = sum(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self) -> str:
        return "Partition(%r)" % (self.parts,)


EMPTY = Partition(())


@dataclass(frozen=True)
class CoreQuotient:
    """A p-core together with the ordered p-tuple of runner partitions.

    The partition it came from has size |core| + p * (total quotient size).
    """

    core: Partition
    quotient: tuple[Partition, ...]
    p: int

    def __post_init__(self):
        if len(self.quotient) != self.p:
            raise ValueError(
                "quotient must have exactly %d components, got %d"
                % (self.p, len(self.quotient))
            )
        if p_core(self.core, self.p) != self.core:
            raise ValueError("core %r is not its own %d-core" % (self.core, self.p))

    @property
    def weight(self) -> int:
        return sum(q.size for q in self.quotient)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for k in range(min(remaining, max_part), 0, -1):
            prefix.append(k)
            rec(remaining - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def beta_set(lam: Partition, length: int) -> list[int]:
    """First-column hook lengths {lambda_i + length - i}, strictly decreasing.

    ``length`` must be at least the number of parts; parts beyond the last
    are taken as zero, so the tail of the beta-set is length-i for the
    padding rows.
    """
    if length < len(lam.parts):
        raise ValueError(
            "beta-set length %d shorter than partition with %d parts"
            % (length, len(lam.parts))
        )
    parts = lam.parts + (0,) * (length - len(lam.parts))
    return [parts[i] + (length - 1 - i) for i in range(length)]


def partition_from_beta(beta: Sequence[int]) -> Partition:
    """Decode a set of distinct nonnegative integers back into a partition."""
    b = sorted(beta, reverse=True)
    L = len(b)
    if any(x < 0 for x in b):
        raise ValueError("beta numbers must be nonnegative")
    if len(set(b)) != L:
        raise ValueError("beta numbers must be distinct")
    parts = [b[i] - (L - 1 - i) for i in range(L)]
    return Partition([x for x in parts if x > 0])


def _runner_counts(beta: Sequence[int], p: int) -> list[int]:
    counts = [0] * p
    for b in beta:
        counts[b % p] += 1
    return counts


def p_core(lam: Partition, p: int) -> Partition:
    """The p-core: push every abacus bead up its runner and decode.

    Equivalent to removing rim p-hooks until none remain; the abacus makes
    the independence of removal order obvious, since only the number of beads
    per runner survives.
    """
    _check_prime(p)
    L = _normalized_length(len(lam.parts), p)
    counts = _runner_counts(beta_set(lam, L), p)
    pushed = [r * p + i for i in range(p) for r in range(counts[i])]
    return partition_from_beta(pushed)


def p_quotient(lam: Partition, p: int) -> CoreQuotient:
    """Split a partition into its p-core and the p-tuple of runner partitions."""
    _check_prime(p)
    L = _normalized_length(len(lam.parts), p)
    beta = beta_set(lam, L)
    counts = _runner_counts(beta, p)
    quotient = []
    for i in range(p):
        rows = [(b - i) // p for b in beta if b % p == i]
        quotient.append(partition_from_beta(rows))
    pushed = [r * p + i for i in range(p) for r in range(counts[i])]
    return CoreQuotient(core=partition_from_beta(pushed), quotient=tuple(quotient), p=p)


def from_core_quotient(cq: CoreQuotient) -> Partition:
    """The unique partition with the given p-core and p-quotient."""
    p = cq.p
    max_rows = max((len(q.parts) for q in cq.quotient), default=0)
    L = _normalized_length(len(cq.core.parts), p) + p * max_rows
    counts = _runner_counts(beta_set(cq.core, L), p)
    beta = []
    for i in range(p):
        rows = beta_set(cq.quotient[i], counts[i])
        beta.extend(r * p + i for r in rows)
    return partition_from_beta(beta)


def is_p_core(lam: Partition, p: int) -> bool:
    """Whether the partition equals its own p-core."""
    return p_core(lam, p) == lam


def rho(n: int, core: Partition, p: int) -> int:
    """Number of partitions of n whose p-core is the given core.

    Zero unless n >= |core| and n == |core| (mod p); otherwise it equals the
    number of p-tuples of partitions of total size (n - |core|) / p, by the
    core/quotient bijection.
    """
    _check_prime(p)
    if p_core(core, p) != core:
        raise ValueError("core %r is not its own %d-core" % (core, p))
    if n < core.size or (n - core.size) % p != 0:
        return 0
    return _tuple_partition_count((n - core.size) // p, p)


def count_pcores(n: int, p: int) -> int:
    """Number of partitions of n equal to their own p-core, by enumeration."""
    _check_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for lam in partitions_of(n) if is_p_core(lam, p))


# number of p-tuples of partitions with given total size, cached per p
_tuple_count_cache: dict[int, list[int]] = {}


def _tuple_partition_count(w: int, p: int) -> int:
    if w < 0:
        raise ValueError("total size must be nonnegative")
    cache = _tuple_count_cache.get(p)
    if cache is None or len(cache) <= w:
        n = max(w + 1, 2 * len(cache) if cache else 16)
        single = [0] * n
        single[0] = 1
        for k in range(1, n):
            for m in range(k, n):
                single[m] += single[m - k]
        counts = [1] + [0] * (n - 1)
        for _ in range(p):
            counts = [
                sum(counts[j] * single[m - j] for j in range(m + 1)) for m in range(n)
            ]
        _tuple_count_cache[p] = cache = counts
    return cache[w]


def _normalized_length(nparts: int, p: int) -> int:
    """Smallest positive multiple of p that can hold nparts beta numbers."""
    return p * max(1, -(-nparts // p))


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError("p must be prime, got %d" % p)
