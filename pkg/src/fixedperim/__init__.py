"""Exact counts, enumeration and checks for fixed-perimeter partitions."""

from .core import (
    DomainError,
    Family,
    binomial,
    duality_inverse,
    duality_map,
    f_refined,
    f_total,
    f_total_parity_split,
    h_refined,
    h_total,
    l_ab_total,
    l_refined,
    l_total,
    refinement_table,
)
from .enumeration import Partition, enumerate_fixed_perimeter, oracle_count, oracle_refined

__all__ = [
    "DomainError",
    "Family",
    "Partition",
    "binomial",
    "duality_inverse",
    "duality_map",
    "enumerate_fixed_perimeter",
    "f_refined",
    "f_total",
    "f_total_parity_split",
    "h_refined",
    "h_total",
    "l_ab_total",
    "l_refined",
    "l_total",
    "oracle_count",
    "oracle_refined",
    "refinement_table",
]
