"""Odd and even strings in partitions and overpartitions.

Overpartition strings are read off the non-overlined parts only: the
overlined parts are a free distinct-part factor and never take part in a
run or an exclusion.  For start parameter k and length parameter l:

* odd string: every size 2k-1 .. 2l+2k-3 occurs; sizes 2l^2-l and 4l+2k-2
  are excluded;
* even string: every size 2k-1 .. 2l+2k-2 occurs; sizes 2l^2+l and 4l+2k
  are excluded.

An excluded size lying inside the run must occur exactly once (only the
run's own copy), one lying outside must not occur at all.

When the two excluded sizes coincide (even strings with k=1, l=2 are the
first case, both sizes being 10) the generating-function factor is
(1 - q^s)^2.  That factor gives weight -1 to a string with exactly one
surplus copy of s, while the absent-part reading gives it weight 0, so the
string totals drift from the series from n=20 on.  ``double_exclusion_surplus``
counts exactly those strings.
"""

from collections import Counter
from dataclasses import dataclass

from .combinatorics import Overpartition, Partition, gen_overpartitions, gen_partitions
from .errors import InternalIdentityViolation
from .moments import overpartition_prefactor
from .series import TruncatedSeries, f_k_series, first_difference, mul, substitute_power

__all__ = [
    "StringOccurrence",
    "count_strings_partition",
    "strings_over",
    "count_odd_strings_over",
    "count_even_strings_over",
    "st_totals",
    "double_exclusion_surplus",
    "odd_even_string_series",
    "ODD",
    "EVEN",
]

ODD = "odd"
EVEN = "even"


@dataclass(frozen=True)
class StringOccurrence:
    parity: str
    k: int
    ell: int
    host: object

    @property
    def run(self):
        length = 2 * self.ell - 1 if self.parity == ODD else 2 * self.ell
        return range(2 * self.k - 1, 2 * self.k - 1 + length)

    def exclusions(self):
        l, k = self.ell, self.k
        if self.parity == ODD:
            return 2 * l * l - l, 4 * l + 2 * k - 2
        return 2 * l * l + l, 4 * l + 2 * k


def _run_length(mult, s):
    r = 0
    while mult.get(s + r):
        r += 1
    return r


def count_strings_partition(p):
    """ST(p): even strings plus odd strings of an ordinary partition.

    Even string: maximal run of consecutive sizes starting at an even size
    s whose predecessor s-1 is not a part, of odd length >= s-1.
    Odd string: run starting at an odd size s that occurs exactly once, of
    length >= s.  Repeated sizes inside a run are allowed.
    """
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    mult = Counter(parts)
    total = 0
    for s in mult:
        run = _run_length(mult, s)
        if s % 2 == 0:
            if (s - 1) not in mult and run % 2 == 1 and run >= s - 1:
                total += 1
        elif mult[s] == 1 and run >= s:
            total += 1
    return total


def _excluded(mult, size, run):
    return mult.get(size, 0) == (1 if size in run else 0)


def strings_over(o):
    """Every string of an overpartition, as StringOccurrence records."""
    free = Counter(o.non_overlined())
    out = []
    for s in sorted(free):
        if s % 2 == 0:
            continue
        k = (s + 1) // 2
        length = _run_length(free, s)
        for run_len in range(1, length + 1):
            parity = ODD if run_len % 2 else EVEN
            occ = StringOccurrence(parity, k, (run_len + 1) // 2, o)
            run = occ.run
            a, b = occ.exclusions()
            if _excluded(free, a, run) and _excluded(free, b, run):
                out.append(occ)
    return out


def count_odd_strings_over(o, k=None):
    return sum(1 for s in strings_over(o) if s.parity == ODD and (k is None or s.k == k))


def count_even_strings_over(o, k=None):
    return sum(1 for s in strings_over(o) if s.parity == EVEN and (k is None or s.k == k))


def st_totals(n):
    """(total odd strings, total even strings) over all overpartitions of n."""
    odd = even = 0
    for o in gen_overpartitions(n):
        for s in strings_over(o):
            if s.parity == ODD:
                odd += 1
            else:
                even += 1
    return odd, even


def _surplus_strings(o):
    free = Counter(o.non_overlined())
    out = []
    for s in sorted(free):
        if s % 2 == 0:
            continue
        length = _run_length(free, s)
        for run_len in range(1, length + 1):
            parity = ODD if run_len % 2 else EVEN
            occ = StringOccurrence(parity, (s + 1) // 2, (run_len + 1) // 2, o)
            a, b = occ.exclusions()
            if a == b and free.get(a, 0) == (1 if a in occ.run else 0) + 1:
                out.append(occ)
    return out


def double_exclusion_surplus(n):
    """(odd, even) strings over overpartitions of n whose two excluded sizes
    coincide and occur with exactly one surplus copy.

    The generating functions count these with weight -1, so
    ospt-bar(n) = (ST_o - odd surplus) - (ST_e - even surplus).
    """
    odd = even = 0
    for o in gen_overpartitions(n):
        for s in _surplus_strings(o):
            if s.parity == ODD:
                odd += 1
            else:
                even += 1
    return odd, even


def _expand_into(cs, base, sizes, sign):
    # cs += sign * q^base * prod_{s in sizes} (1 - q^s), truncated
    order = len(cs) - 1
    if base > order:
        return
    poly = {0: 1}
    for s in sizes:
        nxt = dict(poly)
        for e, c in poly.items():
            nxt[e + s] = nxt.get(e + s, 0) - c
        poly = nxt
    for e, c in poly.items():
        if base + e <= order:
            cs[base + e] += sign * c


def odd_even_string_series(k, order):
    """Generating functions (A_k, B_k) of odd and even strings starting at 2k-1.

    Raises InternalIdentityViolation unless
    A_k - B_k = (-q)_inf/(q)_inf * (f_{2k-1} + f_{2k} - 2 f_k(q^2)).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a = [0] * (order + 1)
    b = [0] * (order + 1)
    ell = 1
    while True:
        odd_base = 2 * ell * ell - 5 * ell + 4 * ell * k - 2 * k + 2
        even_base = 2 * ell * ell - 3 * ell + 4 * ell * k
        if odd_base > order and even_base > order:
            break
        _expand_into(a, odd_base, (2 * ell * ell - ell, 4 * ell + 2 * k - 2), 1)
        _expand_into(b, even_base, (2 * ell * ell + ell, 4 * ell + 2 * k), 1)
        ell += 1
    pre = overpartition_prefactor(order)
    ak = mul(pre, TruncatedSeries(a, order))
    bk = mul(pre, TruncatedSeries(b, order))
    theta = (f_k_series(2 * k - 1, order) + f_k_series(2 * k, order)
             - 2 * substitute_power(f_k_series(k, order), 2))
    rhs = mul(pre, theta)
    bad = first_difference(ak - bk, rhs)
    if bad is not None:
        raise InternalIdentityViolation(f"A_{k} - B_{k}", bad, (ak - bk)[bad], rhs[bad])
    return ak, bk
