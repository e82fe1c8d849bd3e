"""Exact-arithmetic engine for dimension-zero Donaldson-Thomas series.

Couples a truncated power-series ring over exact rationals with the
MacMahon plane-partition function, Chern-number calculus for threefolds,
the rank-three cobordism decomposition, and the set-partition lattice
machinery (multiplicities, diagonal neighborhoods, discrepancy
recursion) that organizes the series coefficients.
"""

__version__ = "0.1.0"

from .series import OrderMismatchError, TruncatedSeries
from .macmahon import (
    DEFAULT_ORACLE_BOUND,
    PlanePartition,
    count_plane_partitions,
    iter_plane_partitions,
    log_macmahon_neg_coeffs,
    macmahon_neg,
    macmahon_series,
    sigma2,
)
from .chern import (
    BUILTIN_THREEFOLDS,
    ChernNumbers,
    ThreefoldSpec,
    catalog,
    chern_disjoint_union,
    chern_of_hypersurface,
    chern_of_projective_space_product,
    chern_scale,
    twist_class_monomials,
    twist_exponent,
)
from .cobordism import (
    CobordismDecomposition,
    ExponentIdentityReport,
    decompose,
    generator_chern_numbers,
    generator_determinant,
    generator_matrix,
    verify_exponent_identity,
)
from .lattice import (
    EpsilonSchedule,
    InadmissibleScheduleError,
    PointConfig,
    SetPartition,
    alpha_factorial,
    classify_q_set,
    delta_transform,
    fiber_multiplicity_sum,
    in_discrepancy_set,
    multiplicative_delta_property,
    multiplicity,
    partitions,
    strict_diagonal_distance_sq,
)
from .dt import (
    DEFAULT_ORDER,
    DTSeries,
    NonIntegralSpecError,
    discrepancy_degrees,
    dt_rational_power,
    dt_series,
    partition_product_sum,
    reconstructed_coefficient,
    verify_multiplicativity,
    verify_root_argument,
    verify_universality,
)

__all__ = [
    "__version__",
    "BUILTIN_THREEFOLDS",
    "ChernNumbers",
    "CobordismDecomposition",
    "DEFAULT_ORACLE_BOUND",
    "DEFAULT_ORDER",
    "DTSeries",
    "EpsilonSchedule",
    "ExponentIdentityReport",
    "InadmissibleScheduleError",
    "NonIntegralSpecError",
    "OrderMismatchError",
    "PlanePartition",
    "PointConfig",
    "SetPartition",
    "ThreefoldSpec",
    "TruncatedSeries",
    "alpha_factorial",
    "catalog",
    "chern_disjoint_union",
    "chern_of_hypersurface",
    "chern_of_projective_space_product",
    "chern_scale",
    "classify_q_set",
    "count_plane_partitions",
    "decompose",
    "delta_transform",
    "discrepancy_degrees",
    "dt_rational_power",
    "dt_series",
    "fiber_multiplicity_sum",
    "generator_chern_numbers",
    "generator_determinant",
    "generator_matrix",
    "in_discrepancy_set",
    "iter_plane_partitions",
    "log_macmahon_neg_coeffs",
    "macmahon_neg",
    "macmahon_series",
    "multiplicative_delta_property",
    "multiplicity",
    "partition_product_sum",
    "partitions",
    "reconstructed_coefficient",
    "sigma2",
    "strict_diagonal_distance_sq",
    "twist_class_monomials",
    "twist_exponent",
    "verify_exponent_identity",
    "verify_multiplicativity",
    "verify_root_argument",
    "verify_universality",
]
