"""Independent brute-force ground truth for the test suite.

Everything here recomputes quantities from definitions, by routes deliberately
different from the package's: partitions are enumerated by the
ascending-composition algorithm (the package recurses on descending parts),
and p-cores are found by literally peeling border strips off Young diagrams
(the package pushes abacus beads).  Slow on purpose; sizes stay small.
"""

from __future__ import annotations

from functools import lru_cache


def asc_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n as descending tuples, via ascending compositions."""
    if n == 0:
        return [()]
    out = []
    a = [0] * (n + 1)
    k = 1
    a[1] = n
    while k != 0:
        x = a[k - 1] + 1
        y = a[k] - 1
        k -= 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        out.append(tuple(sorted(a[: k + 1], reverse=True)))
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return len(asc_partitions(n))


def cells(parts: tuple[int, ...]) -> set[tuple[int, int]]:
    return {(i, j) for i, row in enumerate(parts) for j in range(row)}


def is_border_strip(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """Whether outer/inner is a connected skew shape containing no 2x2 square."""
    skew = cells(outer) - cells(inner)
    if not skew or not cells(inner) <= cells(outer):
        return False
    if any((i + 1, j) in skew and (i, j + 1) in skew and (i + 1, j + 1) in skew
           for (i, j) in skew):
        return False
    seen = set()
    stack = [next(iter(skew))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        i, j = c
        stack.extend(
            nb for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)) if nb in skew
        )
    return seen == skew


def strip_removals(parts: tuple[int, ...], p: int) -> list[tuple[int, ...]]:
    """All partitions obtained from parts by removing one border strip of p cells."""
    n = sum(parts)
    if n < p:
        return []
    return [mu for mu in asc_partitions(n - p) if is_border_strip(parts, mu)]


def strip_core(parts: tuple[int, ...], p: int, pick_last: bool = False) -> tuple[int, ...]:
    """Peel border p-strips until none remain; pick_last varies the removal order."""
    while True:
        removals = strip_removals(parts, p)
        if not removals:
            return parts
        parts = removals[-1] if pick_last else removals[0]


def strip_weight(parts: tuple[int, ...], p: int) -> int:
    """Number of border p-strips removed on the way to the core."""
    count = 0
    while True:
        removals = strip_removals(parts, p)
        if not removals:
            return count
        parts = removals[0]
        count += 1


def core_count(n: int, p: int) -> int:
    """Number of partitions of n with no removable border p-strip."""
    return sum(1 for lam in asc_partitions(n) if not strip_removals(lam, p))


def partitions_with_core(n: int, core: tuple[int, ...], p: int) -> int:
    """Filter-and-count route to the block size rho(n, core, p)."""
    return sum(1 for lam in asc_partitions(n) if strip_core(lam, p) == core)


@lru_cache(maxsize=None)
def tuple_count(w: int, p: int) -> int:
    """Number of p-tuples of partitions of total size w, by direct recursion."""
    if p == 0:
        return 1 if w == 0 else 0
    return sum(partition_count(k) * tuple_count(w - k, p - 1) for k in range(w + 1))
