"""Exact arithmetic for rank and crank moments of overpartitions."""

from .errors import (
    EmptyPartition,
    InternalIdentityViolation,
    InvalidExponent,
    OplabError,
    ZeroConstantTerm,
)
from .series import TruncatedSeries
from .bivariate import LaurentQSeries
from .combinatorics import CountTable, Overpartition, Partition, build_tables
from .moments import MomentSeries
from .verify import VerificationReport

__version__ = "0.1.0"


def clear_caches():
    """Drop memoised tables and prefactors, e.g. before timing a computation."""
    from . import combinatorics, moments

    combinatorics._exhaustive.cache_clear()
    combinatorics._grouped.cache_clear()
    moments.overpartition_prefactor.cache_clear()

__all__ = [
    "TruncatedSeries",
    "LaurentQSeries",
    "Partition",
    "Overpartition",
    "CountTable",
    "MomentSeries",
    "VerificationReport",
    "build_tables",
    "clear_caches",
    "OplabError",
    "ZeroConstantTerm",
    "InvalidExponent",
    "EmptyPartition",
    "InternalIdentityViolation",
]
