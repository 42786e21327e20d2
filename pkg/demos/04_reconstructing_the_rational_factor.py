"""The rational factor linking block-level and group-level series.

The block-level series Y(t) factors as t * phi(t) * Z(t) for a rational phi,
and the group-level series is then t^p * phi(t^p) * P(t).  Here phi is not
assumed: it is reconstructed from raw series coefficients by exact rational
fitting, and the group-level factor is pulled back down with the descent
g(t^m) -> g(t).
"""

from blockhh import (
    Z_series,
    descend,
    fit_phi,
    hh1_block_series,
    hh1_group_series,
    partition_gf,
    rational_fit,
    series_inv,
    series_mul,
    shift,
)
from blockhh.rational import RationalFunction

for p in (2, 3, 5):
    order = 60
    y = hh1_block_series(p, order)
    z = Z_series(p, order)
    ratio = series_mul(shift(y, -1), series_inv(z))
    print("p = %d" % p)
    print("  first coefficients of Y/t * Z^(-1):", list(ratio.coeffs[:8]))

    phi = fit_phi(p, order)
    print("  fitted phi =", phi)

    group_ratio = series_mul(hh1_group_series(p, order), series_inv(partition_gf(order)))
    lifted = rational_fit(group_ratio, 2 * p + 2, 2 * p + 2)
    print("  fitted group-level factor =", lifted)

    recovered = descend(lifted, p)
    expected = RationalFunction(phi.num.shift(1), phi.den)
    print("  descending by p recovers t*phi(t):", recovered, "==", expected)
    assert recovered == expected
    print()
