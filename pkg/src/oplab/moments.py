"""Positive rank/crank moments, by enumeration and by closed-form series.

The overpartition first moments have product-times-Lambert closed forms, so
each of them can be computed two independent ways.  ``ospt_bar_series``
insists that both of its routes agree.
"""

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    CRANK_ORDINARY,
    CRANK_OVER,
    RANK_ORDINARY,
    RANK_OVER,
    build_tables,
)
from .errors import InternalIdentityViolation
from .series import (
    TruncatedSeries,
    euler_product,
    first_difference,
    invert,
    lambert_h,
    mul,
    neg_q_product,
    substitute_power,
)

__all__ = [
    "MomentSeries",
    "KINDS",
    "overpartition_prefactor",
    "positive_moment_from_table",
    "full_moment_from_table",
    "rank_moment_closed_form",
    "crank_moment_closed_form",
    "ospt_bar_series",
    "ospt_ordinary",
]

KINDS = (RANK_OVER, CRANK_OVER, RANK_ORDINARY, CRANK_ORDINARY)


@dataclass(frozen=True)
class MomentSeries:
    kind: str
    k: int
    series: TruncatedSeries

    def __getitem__(self, n):
        return self.series[n]


@lru_cache(maxsize=16)
def overpartition_prefactor(order):
    """(-q)_inf / (q)_inf, the overpartition generating function."""
    return mul(neg_q_product(order), invert(euler_product(order)))


def positive_moment_from_table(t, k):
    """sum_{m>=1} m^k * t(m, n) for each weight n <= t.n_max."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cs = [0] * (t.n_max + 1)
    for (m, n), c in t.entries.items():
        if m > 0:
            cs[n] += m**k * c
    return MomentSeries(t.statistic, k, TruncatedSeries(cs, t.n_max))


def full_moment_from_table(t, k):
    """sum over all m of m^k * t(m, n); k = 0 gives the row totals."""
    if k < 0:
        raise ValueError("k must be >= 0")
    cs = [0] * (t.n_max + 1)
    for (m, n), c in t.entries.items():
        cs[n] += m**k * c
    return TruncatedSeries(cs, t.n_max)


def rank_moment_closed_form(order):
    """2 (-q)_inf/(q)_inf * sum_{n>=1} (-1)^(n+1) q^(n(n+1)) / (1 - q^(2n))."""
    cs = [0] * (order + 1)
    n = 1
    while n * (n + 1) <= order:
        sign = 2 if n % 2 else -2
        for e in range(n * (n + 1), order + 1, 2 * n):
            cs[e] += sign
        n += 1
    return mul(overpartition_prefactor(order), TruncatedSeries(cs, order))


def crank_moment_closed_form(order):
    """(-q)_inf/(q)_inf * h(q)."""
    return mul(overpartition_prefactor(order), lambert_h(order))


def ospt_bar_series(order):
    """M1bar - R1bar, checked against (-q)_inf/(q)_inf * (h(q) - 2h(q^2))."""
    diff = crank_moment_closed_form(order) - rank_moment_closed_form(order)
    h = lambert_h(order)
    other = mul(overpartition_prefactor(order), h - 2 * substitute_power(h, 2))
    bad = first_difference(diff, other)
    if bad is not None:
        raise InternalIdentityViolation("ospt-bar", bad, diff[bad], other[bad])
    return diff


def ospt_ordinary(n):
    """M_1^+(n) - N_1^+(n) for ordinary partitions, from enumeration."""
    if n < 1:
        raise ValueError("n must be >= 1")
    N, M, _, _ = build_tables(n, method="grouped")
    return positive_moment_from_table(M, 1)[n] - positive_moment_from_table(N, 1)[n]
