"""Exact dimension data of symmetric-group blocks in characteristic p.

Everything is computed twice where it matters: generating-function routes
against combinatorial or group-theoretic routes, with all arithmetic exact.
"""

from .blocks import (
    BlockDescriptor,
    block_of_partition,
    blocks_of,
    count_weight_blocks,
    dim_center,
    dim_hh1,
    make_block,
    principal_block,
    sylow_exponent,
)
from .hochschild import (
    VerificationReport,
    Z_series,
    fit_phi,
    hh1_block_series,
    hh1_group_series,
    phi_r1,
    verify_block_decomposition,
    verify_theorem2,
    verify_theorem3,
    y1_formula,
)
from .oracle import CycleType, dim_center_oracle, hh1_group_oracle, hom_to_Fp_dim
from .partitions import (
    EMPTY,
    CoreQuotient,
    Partition,
    beta_set,
    count_pcores,
    from_core_quotient,
    is_p_core,
    p_core,
    p_quotient,
    partition_from_beta,
    partitions_of,
    rho,
)
from .rational import (
    Polynomial,
    RationalFunction,
    descend,
    expand,
    rational_fit,
)
from .series import (
    Series,
    partition_gf,
    pcore_count_gf,
    section,
    series_add,
    series_inv,
    series_mul,
    shift,
    substitute_power,
    truncate,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDescriptor",
    "CoreQuotient",
    "CycleType",
    "EMPTY",
    "Partition",
    "Polynomial",
    "RationalFunction",
    "Series",
    "VerificationReport",
    "Z_series",
    "beta_set",
    "block_of_partition",
    "blocks_of",
    "count_pcores",
    "count_weight_blocks",
    "descend",
    "dim_center",
    "dim_center_oracle",
    "dim_hh1",
    "expand",
    "fit_phi",
    "from_core_quotient",
    "hh1_block_series",
    "hh1_group_oracle",
    "hh1_group_series",
    "hom_to_Fp_dim",
    "is_p_core",
    "make_block",
    "p_core",
    "p_quotient",
    "partition_from_beta",
    "partition_gf",
    "partitions_of",
    "pcore_count_gf",
    "phi_r1",
    "principal_block",
    "rational_fit",
    "rho",
    "section",
    "series_add",
    "series_inv",
    "series_mul",
    "shift",
    "substitute_power",
    "sylow_exponent",
    "truncate",
    "verify_block_decomposition",
    "verify_theorem2",
    "verify_theorem3",
    "y1_formula",
]
