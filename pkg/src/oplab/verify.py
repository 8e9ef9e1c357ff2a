"""Identity checks, positivity checks and conjecture scans.

Every check returns a :class:`VerificationReport`.  Proven statements end in
``pass`` or ``fail``; conjecture scans end in ``scanned-no-counterexample``
or ``fail`` and never claim ``pass``.

Each check accepts ``perturb``, a callable ``(label, value) -> value``
applied to one side of the comparison.  Tests use it to prove that a check
can actually fail.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import build_tables, gen_overpartitions
from .moments import (
    ospt_bar_series,
    overpartition_prefactor,
    positive_moment_from_table,
)
from .series import (
    a2_minus_a3_families,
    a_family,
    euler_product,
    first_difference,
    h_diff_closed,
    invert,
    lambert_h,
    lambert_h_closed,
    mul,
    odd_product,
    substitute_power,
)
from .strings import (
    odd_even_string_series,
    count_even_strings_over,
    count_odd_strings_over,
    double_exclusion_surplus,
    st_totals,
)

__all__ = [
    "PASS",
    "FAIL",
    "SCANNED",
    "VerificationReport",
    "verify_lambert_closed_form",
    "verify_h_difference",
    "verify_a_decomposition",
    "verify_positive_decomposition",
    "verify_ospt_bar_positive",
    "verify_h_difference_positive",
    "verify_string_totals",
    "scan_h_multiple",
    "scan_odd_even_strings",
    "scan_moment_inequality",
    "reproduce_string_table",
    "STRING_TABLE",
    "PROVEN_CHECKS",
    "CONJECTURE_SCANS",
]

PASS = "pass"
FAIL = "fail"
SCANNED = "scanned-no-counterexample"
_STATUSES = (PASS, FAIL, SCANNED)


@dataclass
class VerificationReport:
    check_id: str
    range: str
    status: str
    first_violation: tuple = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.first_violation is None:
            raise ValueError("a failing report needs first_violation")

    @property
    def failed(self):
        return self.status == FAIL

    def to_json(self):
        fv = None
        if self.first_violation is not None:
            fv = {"n": self.first_violation[0], "detail": self.first_violation[1]}
        return {
            "check_id": self.check_id,
            "range": self.range,
            "status": self.status,
            "first_violation": fv,
            "elapsed": round(self.elapsed, 6),
            "details": _jsonable(self.details),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def _same(label, value):
    return value


def _equality_report(check_id, rng, left, right, clock, details=None):
    bad = first_difference(left, right)
    if bad is None:
        return VerificationReport(check_id, rng, PASS, None, clock(), details or {})
    detail = f"{left[bad]} != {right[bad]}"
    return VerificationReport(check_id, rng, FAIL, (bad, detail), clock(), details or {})


def _first_nonpositive(s, lo, hi):
    for n in range(lo, hi + 1):
        if s[n] <= 0:
            return n
    return None


def _timer():
    t0 = time.perf_counter()
    return lambda: time.perf_counter() - t0


# identities ----------------------------------------------------------------


def verify_lambert_closed_form(order=500, perturb=None):
    """Alternating Lambert series h(q) against its square-indexed closed form."""
    perturb = perturb or _same
    clock = _timer()
    left = perturb("lambert_h", lambert_h(order))
    return _equality_report("lambert-closed-form", f"order {order}", left, lambert_h_closed(order), clock)


def verify_h_difference(order=400, perturb=None):
    """h(q) - 2h(q^2) from the Lambert definition against its closed form."""
    perturb = perturb or _same
    clock = _timer()
    h = lambert_h(order)
    left = perturb("h_diff", h - 2 * substitute_power(h, 2))
    return _equality_report("h-difference", f"order {order}", left, h_diff_closed(order), clock)


def verify_a_decomposition(order=300, perturb=None):
    """Four sub-checks on the A1..A4 split of h(q) - 2h(q^2).

    (i)   h - 2h(q^2) = A1 + 2A2 - 2A3 - A4
    (ii)  P (A1 - A4) = (-q;q^2)_inf / (2 (q;q^2)_inf) - 1/2, P = (-q)_inf/(q)_inf
    (iii) P (A2 - A3) has non-negative coefficients
    (iv)  the right side of (ii) is positive at every q^n, n >= 1
    """
    perturb = perturb or _same
    clock = _timer()
    a1, a2, a3, a4 = a_family(order)
    h = lambert_h(order)
    pre = overpartition_prefactor(order)
    sub = {}
    violation = None

    left = perturb("h_diff", h - 2 * substitute_power(h, 2))
    bad = first_difference(left, a1 + 2 * a2 - 2 * a3 - a4)
    sub["i"] = PASS if bad is None else FAIL
    if bad is not None and violation is None:
        violation = (bad, "(i) h - 2h(q^2) != A1 + 2A2 - 2A3 - A4")

    closed = mul(odd_product(order, +1), invert(odd_product(order, -1))) * Fraction(1, 2) - Fraction(1, 2)
    left = perturb("a1_minus_a4", mul(pre, a1 - a4))
    bad = first_difference(left, closed)
    sub["ii"] = PASS if bad is None else FAIL
    if bad is not None and violation is None:
        violation = (bad, "(ii) P (A1 - A4) != closed product form")

    pos = perturb("a2_minus_a3", mul(pre, a2 - a3))
    bad = next((n for n in range(order + 1) if pos[n] < 0), None)
    sub["iii"] = PASS if bad is None else FAIL
    if bad is not None and violation is None:
        violation = (bad, f"(iii) coefficient {pos[bad]} < 0")

    bad = _first_nonpositive(closed, 1, order)
    sub["iv"] = PASS if bad is None else FAIL
    if bad is not None and violation is None:
        violation = (bad, f"(iv) coefficient {closed[bad]} <= 0")

    status = FAIL if violation else PASS
    return VerificationReport("a-decomposition", f"order {order}", status, violation, clock(), {"subchecks": sub})


def verify_positive_decomposition(order=300, perturb=None):
    """A2 - A3 rebuilt from its four regrouped families."""
    perturb = perturb or _same
    clock = _timer()
    fams = a2_minus_a3_families(order)
    total = fams[0] + fams[1] + fams[2] + fams[3]
    _, a2, a3, _ = a_family(order)
    left = perturb("families", total)
    return _equality_report("positive-decomposition", f"order {order}", left, a2 - a3, clock)


# positivity ------------------------------------------------------------------


def verify_ospt_bar_positive(n_max=1000, perturb=None, enum_max=60):
    """ospt-bar(n) > 0 for 1 <= n <= n_max, plus an enumeration cross-check."""
    perturb = perturb or _same
    clock = _timer()
    s = perturb("ospt_bar", ospt_bar_series(n_max))
    rng = f"1 <= n <= {n_max}"
    bad = _first_nonpositive(s, 1, n_max)
    if bad is not None:
        return VerificationReport("ospt-bar-positive", rng, FAIL, (bad, f"ospt-bar = {s[bad]}"), clock())
    cap = min(n_max, enum_max)
    _, _, nb, mb = build_tables(cap, method="grouped")
    enum = positive_moment_from_table(mb, 1).series - positive_moment_from_table(nb, 1).series
    bad = first_difference(s.truncate(cap), enum)
    if bad is not None:
        return VerificationReport("ospt-bar-positive", rng, FAIL,
                                  (bad, f"series {s[bad]} != enumeration {enum[bad]}"), clock())
    details = {"enumeration_cross_check": f"n <= {cap}", "values": {1: s[1], 5: s[5] if n_max >= 5 else None}}
    return VerificationReport("ospt-bar-positive", rng, PASS, None, clock(), details)


def verify_h_difference_positive(n_max=1000, perturb=None):
    """(h(q) - 2h(q^2)) / (q)_inf positive at q^n for 6 <= n <= n_max.

    Coefficients for n <= 5 are reported only.
    """
    perturb = perturb or _same
    clock = _timer()
    h = lambert_h(n_max)
    s = perturb("series", mul(invert(euler_product(n_max)), h - 2 * substitute_power(h, 2)))
    small = {n: s[n] for n in range(1, min(5, n_max) + 1)}
    rng = f"6 <= n <= {n_max}"
    bad = _first_nonpositive(s, 6, n_max)
    if bad is not None:
        return VerificationReport("h-difference-positive", rng, FAIL, (bad, f"coefficient {s[bad]}"), clock(),
                                  {"reported_n_le_5": small})
    return VerificationReport("h-difference-positive", rng, PASS, None, clock(), {"reported_n_le_5": small})


def verify_string_totals(n_max=25, perturb=None):
    """ST_o(n) - ST_e(n) against ospt-bar(n) for 0 <= n <= n_max.

    String totals use the absent-part reading of the exclusion conditions.
    Details also record the surplus-corrected comparison (see
    ``double_exclusion_surplus``), which matches the series exactly.
    """
    perturb = perturb or _same
    clock = _timer()
    s = ospt_bar_series(n_max)
    violation = None
    corrected_ok = True
    rows = {}
    for n in range(n_max + 1):
        o, e = perturb("totals", st_totals(n))
        so, se = double_exclusion_surplus(n)
        rows[n] = [o, e, s[n]]
        if o - e != s[n] and violation is None:
            violation = (n, f"ST_o - ST_e = {o} - {e} = {o - e} != ospt-bar = {s[n]}")
        if (o - so) - (e - se) != s[n]:
            corrected_ok = False
    status = FAIL if violation else PASS
    return VerificationReport("string-totals", f"0 <= n <= {n_max}", status, violation, clock(),
                              {"rows": rows, "surplus_corrected_agrees": corrected_ok})


# conjectures ---------------------------------------------------------------


def scan_h_multiple(m_max=10, order=500, perturb=None):
    """(h(q) - m h(q^m)) / (q)_inf strictly positive at q^n, 1 <= n <= order, 3 <= m <= m_max."""
    perturb = perturb or _same
    clock = _timer()
    h = lambert_h(order)
    inv = invert(euler_product(order))
    violation = None
    nonpositive = {}
    for m in range(3, m_max + 1):
        s = perturb(("h-multiple", m), mul(inv, h - m * substitute_power(h, m)))
        bad = [n for n in range(1, order + 1) if s[n] <= 0]
        if bad:
            nonpositive[m] = [[n, s[n]] for n in bad[:10]]
            if violation is None:
                violation = (bad[0], f"m={m}: coefficient {s[bad[0]]}")
    rng = f"3 <= m <= {m_max}, 1 <= n <= {order}"
    status = FAIL if violation else SCANNED
    return VerificationReport("h-multiple", rng, status, violation, clock(), {"nonpositive": nonpositive})


def scan_odd_even_strings(k_max=5, n_max=200, perturb=None):
    """A_k(n) >= B_k(n) from the generating functions, 1 <= k <= k_max, 1 <= n <= n_max."""
    perturb = perturb or _same
    clock = _timer()
    violation = None
    for k in range(1, k_max + 1):
        a, b = odd_even_string_series(k, n_max)
        diff = perturb(("odd-even-strings", k), a - b)
        bad = next((n for n in range(1, n_max + 1) if diff[n] < 0), None)
        if bad is not None:
            violation = (bad, f"k={k}: A={a[bad]} < B={b[bad]}")
            break
    rng = f"1 <= k <= {k_max}, 1 <= n <= {n_max}"
    return VerificationReport("odd-even-strings", rng, FAIL if violation else SCANNED, violation, clock())


def scan_moment_inequality(k_max=4, n_max=40, perturb=None):
    """Mbar_k^+(n) > Nbar_k^+(n) from enumeration tables, 1 <= k <= k_max, 1 <= n <= n_max."""
    perturb = perturb or _same
    clock = _timer()
    _, _, nb, mb = build_tables(n_max, method="grouped")
    violation = None
    for k in range(1, k_max + 1):
        diff = perturb(("moment-inequality", k), positive_moment_from_table(mb, k).series
                       - positive_moment_from_table(nb, k).series)
        bad = _first_nonpositive(diff, 1, n_max)
        if bad is not None:
            violation = (bad, f"k={k}: difference {diff[bad]}")
            break
    rng = f"1 <= k <= {k_max}, 1 <= n <= {n_max}"
    return VerificationReport("moment-inequality", rng, FAIL if violation else SCANNED, violation, clock())


# string table for n = 5 ------------------------------------------------------

STRING_TABLE = {
    "5": (1, 0),
    "4~+1": (1, 0),
    "3+2": (1, 0),
    "3+2~": (1, 0),
    "3~+1~+1": (1, 0),
    "3+1~+1": (1, 0),
    "2+2+1": (1, 1),
    "2~+2+1": (1, 1),
    "2+1+1+1": (0, 1),
    "2+1~+1+1": (0, 1),
}


def reproduce_string_table(perturb=None):
    """String counts of every overpartition of 5 against the published table."""
    perturb = perturb or _same
    clock = _timer()
    from .combinatorics import Overpartition

    expected = {Overpartition.parse(t): c for t, c in STRING_TABLE.items()}
    violation = None
    rows = []
    for o in sorted(gen_overpartitions(5), key=lambda o: (o.parts, sorted(o.overlined)), reverse=True):
        got = perturb(str(o), (count_odd_strings_over(o), count_even_strings_over(o)))
        want = expected.get(o, (0, 0))
        rows.append([str(o), got[0], got[1]])
        if got != want and violation is None:
            violation = (5, f"{o}: got {got}, expected {want}")
    totals = (sum(r[1] for r in rows), sum(r[2] for r in rows))
    if totals != (8, 4) and violation is None:
        violation = (5, f"totals {totals} != (8, 4)")
    status = FAIL if violation else PASS
    return VerificationReport("string-table", "overpartitions of 5", status, violation, clock(),
                              {"rows": rows, "totals": list(totals)})


# registries used by the CLI: id -> (function, name of its size argument, default)
PROVEN_CHECKS = {
    "lambert-closed-form": (verify_lambert_closed_form, "order", 500),
    "h-difference": (verify_h_difference, "order", 400),
    "a-decomposition": (verify_a_decomposition, "order", 300),
    "positive-decomposition": (verify_positive_decomposition, "order", 300),
    "ospt-bar-positive": (verify_ospt_bar_positive, "n_max", 1000),
    "h-difference-positive": (verify_h_difference_positive, "n_max", 1000),
    "string-totals": (verify_string_totals, "n_max", 25),
    "string-table": (reproduce_string_table, None, None),
}

CONJECTURE_SCANS = {
    "h-multiple": scan_h_multiple,
    "odd-even-strings": scan_odd_even_strings,
    "moment-inequality": scan_moment_inequality,
}
