"""Exhaustive enumeration of partitions and overpartitions.

This is the independent oracle for the generating-function routes: every
count here comes from listing objects and evaluating the combinatorial
rank and crank on them.

Conventions (forced by constant terms of the generating functions):

* the empty partition/overpartition has rank 0 and crank weight +1 at m=0;
* the partition ``1`` carries crank weights {-1: +1, 0: -1, +1: +1}, the
  q^1 row of C(z,q).  ``crank_weights`` applies this locally so tables are
  plain sums.
"""

from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType

from .errors import EmptyPartition

__all__ = [
    "Partition",
    "Overpartition",
    "CountTable",
    "gen_partitions",
    "gen_overpartitions",
    "rank",
    "crank",
    "crank_weights",
    "residual_crank_weights",
    "build_tables",
    "RANK_ORDINARY",
    "CRANK_ORDINARY",
    "RANK_OVER",
    "CRANK_OVER",
]

RANK_ORDINARY = "rank-ordinary"
CRANK_ORDINARY = "crank-ordinary"
RANK_OVER = "rank-over"
CRANK_OVER = "crank-over"

OVERLINE = "~"


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        ps = self.parts
        if any(not isinstance(x, int) or x < 1 for x in ps):
            raise ValueError(f"parts must be positive integers: {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be non-increasing: {ps}")

    @property
    def weight(self):
        return sum(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts)) or "0"


@dataclass(frozen=True, slots=True)
class Overpartition:
    """A partition where the first occurrence of some part sizes is overlined.

    ``overlined`` holds part *sizes*; each must occur among ``parts``.
    """

    parts: tuple = ()
    overlined: frozenset = frozenset()

    def __post_init__(self):
        Partition(self.parts)
        if not isinstance(self.overlined, frozenset):
            object.__setattr__(self, "overlined", frozenset(self.overlined))
        missing = self.overlined.difference(self.parts)
        if missing:
            raise ValueError(f"overlined sizes {sorted(missing)} are not parts of {self.parts}")

    @property
    def weight(self):
        return sum(self.parts)

    def non_overlined(self):
        """Parts left after removing one copy of each overlined size."""
        if not self.overlined:
            return self.parts
        out = []
        pending = set(self.overlined)
        for x in self.parts:
            if x in pending:
                pending.discard(x)
            else:
                out.append(x)
        return tuple(out)

    def __str__(self):
        if not self.parts:
            return "0"
        out = []
        seen = set()
        for x in self.parts:
            if x in self.overlined and x not in seen:
                out.append(f"{x}{OVERLINE}")
            else:
                out.append(str(x))
            seen.add(x)
        return "+".join(out)

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: ``"4~+1"`` is 4-overlined plus 1."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        parts, over = [], set()
        for tok in text.split("+"):
            tok = tok.strip()
            if tok.endswith(OVERLINE):
                tok = tok[:-1]
                if int(tok) in over:
                    raise ValueError(f"size {tok} overlined twice in {text!r}")
                over.add(int(tok))
            parts.append(int(tok))
        return cls(tuple(sorted(parts, reverse=True)), frozenset(over))


def _ascending(n):
    # Kelleher's accel_asc: every partition of n as an ascending list
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        ell = k + 1
        while x <= y:
            a[k] = x
            a[ell] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _trusted(cls, **fields):
    # generated objects are valid by construction; skip __post_init__
    obj = object.__new__(cls)
    for name, value in fields.items():
        object.__setattr__(obj, name, value)
    return obj


def gen_partitions(n):
    """All partitions of n, each exactly once (order unspecified)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for asc in _ascending(n):
        yield _trusted(Partition, parts=tuple(reversed(asc)))


def gen_overpartitions(n):
    """All overpartitions of n, each exactly once (order unspecified)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for asc in _ascending(n):
        parts = tuple(reversed(asc))
        sizes = sorted(set(parts))
        for r in range(len(sizes) + 1):
            for chosen in combinations(sizes, r):
                yield _trusted(Overpartition, parts=parts, overlined=frozenset(chosen))


def rank(obj):
    """Largest part minus number of parts; overlines are ignored."""
    parts = obj.parts
    return parts[0] - len(parts) if parts else 0


def _crank_desc(parts):
    ones = parts.count(1)
    if ones == 0:
        return parts[0]
    return sum(1 for x in parts if x > ones) - ones


def crank(p):
    """Andrews-Garvan crank of a nonempty partition."""
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    if not parts:
        raise EmptyPartition("crank of the empty partition is undefined")
    return _crank_desc(parts)


_ANOMALY = MappingProxyType({-1: 1, 0: -1, 1: 1})
_EMPTY = MappingProxyType({0: 1})


def crank_weights(p):
    """Contribution of a partition to M(., n) under the C(z,q) convention."""
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    if not parts:
        return dict(_EMPTY)
    if parts == (1,):
        return dict(_ANOMALY)
    return {_crank_desc(parts): 1}


def residual_crank_weights(o):
    """Contribution of an overpartition to Mbar(., n): crank weights of its non-overlined parts."""
    return crank_weights(o.non_overlined())


@dataclass(frozen=True)
class CountTable:
    """Exact counts ``entries[(m, n)]`` for weights 0..n_max."""

    statistic: str
    n_max: int
    entries: MappingProxyType

    def count(self, m, n):
        return self.entries.get((m, n), 0)

    def row(self, n):
        return {m: c for (m, k), c in self.entries.items() if k == n}

    def total(self, n):
        return sum(self.row(n).values())

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))


def _freeze(statistic, n_max, counts):
    return CountTable(statistic, n_max, MappingProxyType({k: v for k, v in counts.items() if v}))


def _asc_crank_items(asc):
    if not asc:
        return _EMPTY.items()
    if len(asc) == 1 and asc[0] == 1:
        return _ANOMALY.items()
    return ((_crank_desc(asc[::-1]), 1),)


@lru_cache(maxsize=8)
def _exhaustive(n_max):
    N, M, Nb, Mb = (defaultdict(int) for _ in range(4))
    for n in range(n_max + 1):
        for p in gen_partitions(n):
            N[rank(p), n] += 1
            for m, w in crank_weights(p).items():
                M[m, n] += w
        for o in gen_overpartitions(n):
            Nb[rank(o), n] += 1
            for m, w in residual_crank_weights(o).items():
                Mb[m, n] += w
    return N, M, Nb, Mb


@lru_cache(maxsize=8)
def _grouped(n_max):
    # Same statistics, enumerated one underlying partition at a time:
    # rank ignores overlines, so a partition with d distinct sizes stands for
    # 2^d overpartitions of equal rank; an overpartition is a pair
    # (distinct overlined parts, ordinary non-overlined parts), so Mbar is
    # M convolved with the distinct-part counts.
    N, M, Nb = (defaultdict(int) for _ in range(3))
    distinct = [0] * (n_max + 1)
    for n in range(n_max + 1):
        off = n
        rk = [0] * (2 * n + 1)
        rkb = [0] * (2 * n + 1)
        ck = [0] * (2 * n + 1)
        q = 0
        for asc in _ascending(n):
            k = len(asc)
            d = len(set(asc))
            r = asc[-1] - k if k else 0
            rk[r + off] += 1
            rkb[r + off] += 1 << d
            if d == k:
                q += 1
            ones = bisect_right(asc, 1)
            if ones == 0:
                ck[(asc[-1] if k else 0) + off] += 1
            elif k == 1:
                ck[off - 1] += 1
                ck[off] -= 1
                ck[off + 1] += 1
            else:
                ck[k - bisect_right(asc, ones) - ones + off] += 1
        distinct[n] = q
        for i in range(2 * n + 1):
            if rk[i]:
                N[i - off, n] = rk[i]
                Nb[i - off, n] = rkb[i]
            if ck[i]:
                M[i - off, n] = ck[i]
    Mb = defaultdict(int)
    for (m, j), c in M.items():
        for n in range(j, n_max + 1):
            Mb[m, n] += c * distinct[n - j]
    return N, M, Nb, Mb


def build_tables(n_max, method="exhaustive"):
    """Count tables (N, M, Nbar, Mbar) for weights 0..n_max.

    ``method="exhaustive"`` lists every overpartition individually.
    ``method="grouped"`` enumerates ordinary partitions only and weights
    them by the number of overpartitions they stand for; it reaches much
    larger n_max and is cross-checked against the exhaustive method.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if method == "exhaustive":
        raw = _exhaustive(n_max)
    elif method == "grouped":
        raw = _grouped(n_max)
    else:
        raise ValueError(f"unknown method {method!r}")
    names = (RANK_ORDINARY, CRANK_ORDINARY, RANK_OVER, CRANK_OVER)
    return tuple(_freeze(s, n_max, c) for s, c in zip(names, raw))
