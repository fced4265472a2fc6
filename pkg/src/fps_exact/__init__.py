"""Exact power-series powers, inverses and Toeplitz-Hessenberg determinants.

All arithmetic is over :class:`fractions.Fraction`. Hot loops run in a compiled
extension when it is built, and fall back to pure Python otherwise; see
:func:`active_backend`.
"""
from ._backend import active_backend, compiled_available, use_backend
from .errors import HypothesisViolation, NonInvertibleError, OrderMismatchError, UnknownIdentityError
from .hessenberg import (
    DeltaPolynomial,
    HessenbergSpec,
    WeightedPartition,
    delta_polynomial,
    det_composition,
    det_prefixes,
    det_recursive,
    det_trudi,
    enumerate_weighted_partitions,
)
from .identities import REGISTRY, verify_identity
from .numbers import (
    BernoulliTable,
    GenBernoulliTable,
    StirlingTable,
    bernoulli,
    bernoulli_table,
    gen_bernoulli,
    gen_bernoulli_table,
    power_sum,
    stirling2,
    stirling_table,
)
from .partitions import (
    PartitionTable,
    PentagonalSeries,
    partition_det,
    partition_det_table,
    partition_pentagonal,
    pentagonal_coeffs,
    pentagonal_det,
)
from .reports import IdentityReport
from .series import (
    PowerAlgorithm,
    TruncatedSeries,
    applicable_algorithms,
    derivative,
    inverse_recursive,
    inverse_wronski,
    mul,
    power,
    power_with_count,
)

__version__ = "0.1.0"

__all__ = [
    "BernoulliTable",
    "DeltaPolynomial",
    "GenBernoulliTable",
    "HessenbergSpec",
    "HypothesisViolation",
    "IdentityReport",
    "NonInvertibleError",
    "OrderMismatchError",
    "PartitionTable",
    "PentagonalSeries",
    "PowerAlgorithm",
    "REGISTRY",
    "StirlingTable",
    "TruncatedSeries",
    "UnknownIdentityError",
    "WeightedPartition",
    "active_backend",
    "applicable_algorithms",
    "bernoulli",
    "bernoulli_table",
    "compiled_available",
    "delta_polynomial",
    "derivative",
    "det_composition",
    "det_prefixes",
    "det_recursive",
    "det_trudi",
    "enumerate_weighted_partitions",
    "gen_bernoulli",
    "gen_bernoulli_table",
    "inverse_recursive",
    "inverse_wronski",
    "mul",
    "partition_det",
    "partition_det_table",
    "partition_pentagonal",
    "pentagonal_coeffs",
    "pentagonal_det",
    "power",
    "power_sum",
    "power_with_count",
    "stirling2",
    "stirling_table",
    "use_backend",
    "verify_identity",
]
