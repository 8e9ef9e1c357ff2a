"""Two-variable generating functions: Laurent in z, truncated in q.

``rank_gf_over`` builds the overpartition rank generating function from its
q-hypergeometric form, ``crank_gf_partitions`` the ordinary crank product,
and ``crank_gf_over`` the first residual crank function (-q;q)_inf C(z,q).
Coefficient (m, n) of these series *defines* Nbar(m,n) and Mbar(m,n).

Internally rows are dense lists indexed by m + order; every series built
here satisfies |m| <= n, so that width always suffices.
"""

from fractions import Fraction

from .series import TruncatedSeries, euler_product, neg_q_product

__all__ = [
    "LaurentQSeries",
    "rank_gf_over",
    "crank_gf_partitions",
    "crank_gf_over",
    "positive_first_moment",
    "row_sums",
]


class LaurentQSeries:
    """sum_n sum_m c(m, n) z^m q^n for 0 <= n <= order.

    ``rows[n]`` maps z-exponents to nonzero coefficients.
    """

    __slots__ = ("_order", "_rows")

    def __init__(self, rows, order=None):
        rows = [dict(r) for r in rows]
        if order is None:
            order = len(rows) - 1
        if len(rows) != order + 1:
            raise ValueError(f"expected {order + 1} rows, got {len(rows)}")
        clean = []
        for n, row in enumerate(rows):
            r = {}
            for m, c in row.items():
                if c:
                    if abs(m) > n:
                        raise ValueError(f"z^{m} in row q^{n} violates |m| <= n")
                    r[int(m)] = c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
            clean.append(r)
        self._order = order
        self._rows = tuple(clean)

    @classmethod
    def _from_dense(cls, grid, order):
        rows = []
        for row in grid:
            rows.append({m - order: c for m, c in enumerate(row) if c})
        return cls(rows, order)

    @property
    def order(self):
        return self._order

    @property
    def rows(self):
        return self._rows

    def row(self, n):
        return dict(self._rows[n])

    def coeff(self, m, n):
        return self._rows[n].get(m, 0)

    def __eq__(self, other):
        if not isinstance(other, LaurentQSeries):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __repr__(self):
        return f"LaurentQSeries(order={self._order})"

    def to_json(self):
        return [{"n": n, "coeffs": {str(m): str(c) for m, c in sorted(r.items())}}
                for n, r in enumerate(self._rows)]


def _lift(series, order):
    w = 2 * order + 1
    grid = [[0] * w for _ in range(order + 1)]
    for n in range(order + 1):
        grid[n][order] = series[n]
    return grid


def _divide_z(grid, j, dz, order):
    # grid <- grid / (1 - z^dz q^j), in place, via g[n] = f[n] + shift(g[n-j])
    for n in range(j, order + 1):
        prev = grid[n - j]
        if dz > 0:
            shifted = [0] + prev[:-1]
        else:
            shifted = prev[1:] + [0]
        grid[n] = [a + b for a, b in zip(grid[n], shifted)]


def rank_gf_over(order):
    """Rbar(z,q) = sum_{n>=0} (-1;q)_n q^(n(n+1)/2) / ((zq;q)_n (q/z;q)_n)."""
    w = 2 * order + 1
    total = [[0] * w for _ in range(order + 1)]
    n = 0
    while n * (n + 1) // 2 <= order:
        # numerator (-1;q)_n q^(n(n+1)/2) as a one-variable polynomial
        num = [0] * (order + 1)
        num[n * (n + 1) // 2] = 1
        for k in range(1, n + 1):
            e = k - 1  # factor (1 + q^(k-1))
            if e == 0:
                num = [2 * c for c in num]
            else:
                num[e:] = [a + b for a, b in zip(num[e:], num[: order + 1 - e])]
        grid = _lift(num, order)
        for j in range(1, n + 1):
            _divide_z(grid, j, +1, order)
            _divide_z(grid, j, -1, order)
        for r in range(order + 1):
            total[r] = [a + b for a, b in zip(total[r], grid[r])]
        n += 1
    return LaurentQSeries._from_dense(total, order)


def _crank_grid(order):
    grid = _lift(euler_product(order), order)
    for j in range(1, order + 1):
        _divide_z(grid, j, +1, order)
        _divide_z(grid, j, -1, order)
    return grid


def crank_gf_partitions(order):
    """C(z,q) = (q;q)_inf / ((zq;q)_inf (q/z;q)_inf)."""
    return LaurentQSeries._from_dense(_crank_grid(order), order)


def crank_gf_over(order):
    """Cbar(z,q) = (-q;q)_inf C(z,q)."""
    grid = _crank_grid(order)
    pre = neg_q_product(order)
    w = 2 * order + 1
    out = [[0] * w for _ in range(order + 1)]
    for i, p in pre.terms():
        for n in range(i, order + 1):
            src = grid[n - i]
            out[n] = [a + p * b for a, b in zip(out[n], src)]
    return LaurentQSeries._from_dense(out, order)


def positive_first_moment(g):
    """One-variable series with q^n coefficient sum_{m>=1} m * c(m, n)."""
    return TruncatedSeries([sum(m * c for m, c in row.items() if m > 0) for row in g.rows], g.order)


def row_sums(g):
    """The z = 1 specialisation."""
    return TruncatedSeries([sum(row.values()) for row in g.rows], g.order)
