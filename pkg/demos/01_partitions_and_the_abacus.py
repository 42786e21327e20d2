"""Partitions, beta-sets, and the mod-p abacus.

Walks through the encoding that drives the whole library: a partition as a
set of first-column hook lengths, those laid out on p runners, and the
core/quotient decomposition read off the runners.
"""

from blockhh import (
    Partition,
    beta_set,
    from_core_quotient,
    p_core,
    p_quotient,
    partitions_of,
)


def show_abacus(lam, p, length):
    beta = beta_set(lam, length)
    print("  beta-set of %r with length %d: %s" % (lam.parts, length, beta))
    for i in range(p):
        rows = sorted((b - i) // p for b in beta if b % p == i)
        print("    runner %d beads at rows %s" % (i, rows))


lam = Partition((6, 4, 3, 1, 1))
p = 3
print("The partition %r has size %d." % (lam.parts, lam.size))
show_abacus(lam, p, 6)

cq = p_quotient(lam, p)
print("\n%d-core: %r" % (p, cq.core.parts))
print("%d-quotient: %s" % (p, [q.parts for q in cq.quotient]))
print("weight (number of removable %d-hooks): %d" % (p, cq.weight))
print("size bookkeeping: %d = %d + %d*%d" % (lam.size, cq.core.size, p, cq.weight))

back = from_core_quotient(cq)
print("reassembled from (core, quotient): %r" % (back.parts,))
assert back == lam

print("\nEvery partition of 5, with its 2-core and 2-weight:")
for mu in partitions_of(5):
    core = p_core(mu, 2)
    weight = (mu.size - core.size) // 2
    print("  %-15r core %-9r weight %d" % (mu.parts, core.parts, weight))
