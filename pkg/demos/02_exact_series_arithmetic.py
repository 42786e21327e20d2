"""Exact truncated power series: the partition series and its relatives.

Everything is integer/rational arithmetic with explicit truncation orders,
so the identity checks later in the library are exact statements, not
numerical coincidences.
"""

from blockhh import (
    partition_gf,
    pcore_count_gf,
    section,
    series_inv,
    series_mul,
    shift,
    substitute_power,
)

P = partition_gf(16)
print("partition counts p(n):", list(P.coeffs))

E = series_inv(P)
print("its inverse (sparse, alternating):", list(E.coeffs))
assert series_mul(P, E).coeffs[0] == 1

print("\np-core counts c(n) for small p:")
for p in (2, 3, 5):
    print("  p=%d:" % p, list(pcore_count_gf(p, 16).coeffs))

print("\nSections split a series by residue class of the exponent;")
print("substitution t -> t^m stretches it back out.")
evens = section(P, 2, 0)
odds = section(P, 2, 1)
print("  even part of P:", list(evens.coeffs))
print("  odd part of P: ", list(odds.coeffs))

even_piece = substitute_power(evens, 2)
odd_piece = shift(substitute_power(odds, 2), 1)
total = even_piece + odd_piece
print("  reassembled:   ", list(total.coeffs[: P.order]))
assert list(total.coeffs[: P.order]) == list(P.coeffs)
