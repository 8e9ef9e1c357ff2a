"""Exact truncated power series in one variable q.

A :class:`TruncatedSeries` stores coefficients of q^0 .. q^order as Python
ints or :class:`fractions.Fraction` values; integral values are always kept
as ``int`` so the common (integer) case stays fast.  Floats are rejected.

Besides the ring operations this module builds the concrete q-series used
throughout the package: Pochhammer-type products, the alternating Lambert
series ``h(q)`` and its square-indexed closed form, the ``f_k`` theta-type
sums, and the four sums ``A1..A4`` that split ``h(q) - 2h(q^2)``.
"""

from fractions import Fraction
from math import lcm
from numbers import Rational

from .errors import InvalidExponent, ZeroConstantTerm

__all__ = [
    "TruncatedSeries",
    "add",
    "mul",
    "invert",
    "substitute_power",
    "zero",
    "one",
    "monomial",
    "euler_product",
    "neg_q_product",
    "odd_product",
    "lambert_h",
    "lambert_h_closed",
    "h_diff_closed",
    "f_k_series",
    "a_family",
    "a2_minus_a3_families",
    "first_difference",
]


def _exact(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _exact(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _exact(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _den(c):
    return c.denominator if isinstance(c, Fraction) else 1


class TruncatedSeries:
    """Power series in q known modulo q^(order+1).

    Instances are immutable.  Arithmetic between series of different
    orders truncates to the smaller order.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs, order=None):
        cs = [_exact(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("need at least one coefficient or an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) <= order:
            cs.extend([0] * (order + 1 - len(cs)))
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_coeffs", tuple(cs[: order + 1]))

    @classmethod
    def _raw(cls, coeffs, order):
        # trusted constructor: coeffs already normalised, len == order + 1
        self = object.__new__(cls)
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_coeffs", tuple(coeffs))
        return self

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self):
        return self._order

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._coeffs[n]
        if n < 0:
            return 0
        if n > self._order:
            raise IndexError(f"q^{n} lies beyond truncation order {self._order}")
        return self._coeffs[n]

    def __len__(self):
        return self._order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def terms(self):
        """Yield ``(exponent, coefficient)`` for the nonzero coefficients."""
        return ((i, c) for i, c in enumerate(self._coeffs) if c)

    def truncate(self, order):
        if order > self._order:
            raise ValueError(f"cannot raise order {self._order} to {order}")
        return TruncatedSeries._raw(self._coeffs[: order + 1], order)

    def shift(self, k):
        """Multiply by q^k (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        cs = ([0] * k + list(self._coeffs))[: self._order + 1]
        return TruncatedSeries._raw(cs, self._order)

    def is_zero(self):
        return not any(self._coeffs)

    # ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return add(self, other)
        other = _exact(other)
        return TruncatedSeries._raw((_exact(self._coeffs[0] + other),) + self._coeffs[1:], self._order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self._coeffs], self._order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        other = _exact(other)
        return TruncatedSeries._raw([_exact(c * other) for c in self._coeffs], self._order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __repr__(self):
        body = ""
        for count, (i, c) in enumerate(self.terms()):
            if count == 8:
                body += " + ..."
                break
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            term = mono if mono and mag == 1 else f"{mag}{'*' + mono if mono else ''}"
            if not body:
                body = ("-" if c < 0 else "") + term
            else:
                body += (" - " if c < 0 else " + ") + term
        return f"TruncatedSeries({body or '0'} + O(q^{self._order + 1}))"

    # serialisation ----------------------------------------------------

    def to_json(self):
        return {"order": self._order, "coeffs": [str(Fraction(c)) for c in self._coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls([Fraction(s) for s in obj["coeffs"]], obj["order"])


def zero(order):
    return TruncatedSeries._raw([0] * (order + 1), order)


def one(order):
    return monomial(0, order)


def monomial(exponent, order, coeff=1):
    """``coeff * q^exponent`` (the zero series if exponent > order)."""
    cs = [0] * (order + 1)
    if exponent <= order:
        cs[exponent] = _exact(coeff)
    return TruncatedSeries._raw(cs, order)


def add(f, g):
    order = min(f.order, g.order)
    cs = [_exact(a + b) for a, b in zip(f.coeffs[: order + 1], g.coeffs[: order + 1])]
    return TruncatedSeries._raw(cs, order)


def _scaled_ints(cs):
    d = lcm(*(_den(c) for c in cs)) if cs else 1
    if d == 1:
        return list(cs), 1
    return [int(c * d) for c in cs], d


def mul(f, g):
    """Cauchy product truncated to ``min(f.order, g.order)``.

    Coefficients are brought to a common denominator so the convolution
    runs on Python ints; the sparser operand drives the outer loop.
    """
    order = min(f.order, g.order)
    a, da = _scaled_ints(f.coeffs[: order + 1])
    b, db = _scaled_ints(g.coeffs[: order + 1])
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x:
            seg = out[i:]
            out[i:] = [o + x * y for o, y in zip(seg, b)]
    d = da * db
    if d != 1:
        out = [_exact(Fraction(c, d)) for c in out]
    return TruncatedSeries._raw(out, order)


def invert(f):
    """Multiplicative inverse modulo q^(order+1)."""
    c0 = f.coeffs[0]
    if c0 == 0:
        raise ZeroConstantTerm("constant term is zero; series is not invertible")
    order = f.order
    a, d = _scaled_ints(f.coeffs)
    # 1/f = d * (1/a) where a has integer coefficients
    nz = [(k, a[k]) for k in range(1, order + 1) if a[k]]
    a0 = a[0]
    g = [0] * (order + 1)
    if a0 in (1, -1):
        g[0] = a0
        for n in range(1, order + 1):
            s = 0
            for k, ak in nz:
                if k > n:
                    break
                s += ak * g[n - k]
            g[n] = -a0 * s
    else:
        inv0 = Fraction(1, a0)
        g[0] = inv0
        for n in range(1, order + 1):
            s = 0
            for k, ak in nz:
                if k > n:
                    break
                s += ak * g[n - k]
            g[n] = -inv0 * s
    if d != 1 or a0 not in (1, -1):
        g = [_exact(c * d) for c in g]
    return TruncatedSeries._raw(g, order)


def substitute_power(f, m):
    """Return f(q^m) at the same truncation order."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidExponent(f"substitution exponent must be a positive integer, got {m!r}")
    order = f.order
    cs = [0] * (order + 1)
    for i in range(order // m + 1):
        cs[i * m] = f.coeffs[i]
    return TruncatedSeries._raw(cs, order)


def first_difference(f, g):
    """Smallest exponent where f and g differ (compared up to the smaller order), else None."""
    order = min(f.order, g.order)
    for i in range(order + 1):
        if f.coeffs[i] != g.coeffs[i]:
            return i
    return None


# products ------------------------------------------------------------------


def _product(order, exponents, sign):
    # prod over e in exponents of (1 + sign*q^e); exponents > order are skipped
    cs = [1] + [0] * order
    for e in exponents:
        if e > order:
            break
        shifted = cs[: order + 1 - e]
        if sign > 0:
            cs[e:] = [x + y for x, y in zip(cs[e:], shifted)]
        else:
            cs[e:] = [x - y for x, y in zip(cs[e:], shifted)]
    return TruncatedSeries._raw(cs, order)


def euler_product(order):
    """(q;q)_inf = prod_{k>=1} (1 - q^k)."""
    return _product(order, range(1, order + 1), -1)


def neg_q_product(order):
    """(-q;q)_inf = prod_{k>=1} (1 + q^k)."""
    return _product(order, range(1, order + 1), +1)


def odd_product(order, sign):
    """prod_{k>=0} (1 + sign*q^(2k+1)).

    ``sign=-1`` gives (q;q^2)_inf and ``sign=+1`` gives (-q;q^2)_inf.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _product(order, range(1, order + 1, 2), sign)


# Lambert-type series -------------------------------------------------------


def lambert_h(order):
    """h(q) = sum_{n>=1} (-1)^(n+1) q^(n(n+1)/2) / (1 - q^n).

    Each denominator is expanded as a geometric series.
    """
    cs = [0] * (order + 1)
    n = 1
    while n * (n + 1) // 2 <= order:
        sign = 1 if n % 2 else -1
        for e in range(n * (n + 1) // 2, order + 1, n):
            cs[e] += sign
        n += 1
    return TruncatedSeries._raw(cs, order)


def lambert_h_closed(order):
    """sum_{j>=1} q^(j^2) (1 + 2q^j + ... + 2q^(j^2-j) + q^(j^2))."""
    cs = [0] * (order + 1)
    j = 1
    while j * j <= order:
        for i in range(j + 1):
            e = j * j + i * j
            if e > order:
                break
            cs[e] += 1 if i in (0, j) else 2
        j += 1
    return TruncatedSeries._raw(cs, order)


def h_diff_closed(order):
    """Square-indexed closed form of h(q) - 2h(q^2).

    sum_{n>=1} (-1)^(n+1) q^(n^2) (1 - 2q^n + 2q^(2n) - ... + (-1)^(n-1) 2q^(n^2-n) + (-1)^n q^(n^2))
    """
    cs = [0] * (order + 1)
    n = 1
    while n * n <= order:
        outer = 1 if n % 2 else -1
        for i in range(n + 1):
            e = n * n + i * n
            if e > order:
                break
            inner = (1 if i % 2 == 0 else -1) * (1 if i in (0, n) else 2)
            cs[e] += outer * inner
        n += 1
    return TruncatedSeries._raw(cs, order)


def f_k_series(k, order):
    """f_k(q) = sum_{n>=1} (-1)^(n+1) q^(n(n+1)/2 + n(k-1))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cs = [0] * (order + 1)
    n = 1
    while True:
        e = n * (n + 1) // 2 + n * (k - 1)
        if e > order:
            break
        cs[e] += 1 if n % 2 else -1
        n += 1
    return TruncatedSeries._raw(cs, order)


def a_family(order):
    """The four sums whose combination A1 + 2A2 - 2A3 - A4 is h(q) - 2h(q^2).

    A1 = sum_{n>=1} (-1)^(n+1) q^(n^2)
    A2 = sum_{n>=2} (-1)^n q^(n^2) (q^n - q^(2n) + ... + (-1)^(n-2) q^(n^2-n))
    A3 = sum_{n>=1} q^(8n^2)
    A4 = sum_{n>=1} (-1)^(n+1) q^(2n^2)
    """
    a1 = [0] * (order + 1)
    a2 = [0] * (order + 1)
    a3 = [0] * (order + 1)
    a4 = [0] * (order + 1)
    n = 1
    while n * n <= order:
        sign = 1 if n % 2 else -1
        a1[n * n] += sign
        if 2 * n * n <= order:
            a4[2 * n * n] += sign
        if 8 * n * n <= order:
            a3[8 * n * n] += 1
        for j in range(1, n):
            e = n * n + j * n
            if e > order:
                break
            a2[e] += (1 if n % 2 == 0 else -1) * (1 if j % 2 else -1)
        n += 1
    return tuple(TruncatedSeries._raw(c, order) for c in (a1, a2, a3, a4))


def a2_minus_a3_families(order):
    """The four manifestly signed families that regroup A2 - A3.

    Returns the families separately so callers can inspect each one; their
    sum should equal ``A2 - A3``.
    """
    fam = [[0] * (order + 1) for _ in range(4)]

    def put(which, base, factors):
        # base exponent times prod (1 - q^f), expanded
        if base > order:
            return False
        poly = {0: 1}
        for f in factors:
            nxt = dict(poly)
            for e, c in poly.items():
                nxt[e + f] = nxt.get(e + f, 0) - c
            poly = nxt
        for e, c in poly.items():
            if c and base + e <= order:
                fam[which][base + e] += c
        return True

    # q^(4n^2 + (4j+3)2n) (1 - q^(4j+2)) (1 - q^(4n+4j+4)),  j >= 0, n >= 2j+2
    j = 0
    while True:
        n = 2 * j + 2
        if 4 * n * n + (4 * j + 3) * 2 * n > order:
            break
        while put(0, 4 * n * n + (4 * j + 3) * 2 * n, (4 * j + 2, 4 * n + 4 * j + 4)):
            n += 1
        j += 1
    # q^((2n+1)^2 + (4j+4)(2n+1)) (1 - q^(4j+3)) (1 - q^(4n+4j+7)),  j >= 0, n >= 2j+2
    j = 0
    while True:
        n = 2 * j + 2
        if (2 * n + 1) ** 2 + (4 * j + 4) * (2 * n + 1) > order:
            break
        while put(1, (2 * n + 1) ** 2 + (4 * j + 4) * (2 * n + 1), (4 * j + 3, 4 * n + 4 * j + 7)):
            n += 1
        j += 1
    # q^((4n+2)^2 + (4n+1)(4n+2)) [ (1-q^(4n+2))(1-q^(8n+7))(1-q^(12n+6))
    #     + q^(12n+8)(1-q)(1-q^(4n)) + q^(8n+7)(1-q^(4n+1))(1-q^(12n+6)) ],  n >= 0
    n = 0
    while True:
        base = (4 * n + 2) ** 2 + (4 * n + 1) * (4 * n + 2)
        if base > order:
            break
        put(2, base, (4 * n + 2, 8 * n + 7, 12 * n + 6))
        if n > 0:  # (1 - q^0) vanishes at n = 0
            put(2, base + 12 * n + 8, (1, 4 * n))
        put(2, base + 8 * n + 7, (4 * n + 1, 12 * n + 6))
        n += 1
    # q^((4n+2)^2 + (4n+1)(4n+2) + 24n + 15) (1 - q^(4n+3)) (1 - q^(12n+11)),  n >= 0
    n = 0
    while put(3, (4 * n + 2) ** 2 + (4 * n + 1) * (4 * n + 2) + 24 * n + 15, (4 * n + 3, 12 * n + 11)):
        n += 1
    return tuple(TruncatedSeries._raw(c, order) for c in fam)
