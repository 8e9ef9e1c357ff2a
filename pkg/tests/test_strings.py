import pytest

from oplab.combinatorics import Overpartition, Partition, gen_overpartitions, gen_partitions
from oplab.errors import InternalIdentityViolation
from oplab.moments import ospt_bar_series, ospt_ordinary
from oplab.strings import (
    EVEN,
    ODD,
    odd_even_string_series,
    count_even_strings_over,
    count_odd_strings_over,
    count_strings_partition,
    double_exclusion_surplus,
    st_totals,
    strings_over,
)
import oplab.strings as strings

P = Overpartition.parse


def counts(text):
    o = P(text)
    return count_odd_strings_over(o), count_even_strings_over(o)


# ordinary partitions ------------------------------------------------------------


def test_empty_partition_has_no_strings():
    assert count_strings_partition(Partition()) == 0


def test_weight_one():
    assert sum(count_strings_partition(p) for p in gen_partitions(1)) == 1


@pytest.mark.parametrize("parts, expected", [
    ((1,), 1),          # odd string at 1
    ((1, 1), 0),        # 1 repeated
    ((2, 1, 1), 0),     # even start 2 preceded by 1
    ((2,), 1),          # even string of length 1 at 2
    ((3, 2), 0),        # run 2,3 has even length; 3 alone is too short
    ((4, 3, 2), 1),     # run 2,3,4 has odd length >= 1
])
def test_partition_string_examples(parts, expected):
    assert count_strings_partition(Partition(parts)) == expected


def test_partition_strings_sum_to_ospt():
    for n in range(1, 21):
        assert sum(count_strings_partition(p) for p in gen_partitions(n)) == ospt_ordinary(n), n


# overpartitions: published table -------------------------------------------------------

TABLE = {
    "5": (1, 0), "4~+1": (1, 0), "3+2": (1, 0), "3+2~": (1, 0),
    "3~+1~+1": (1, 0), "3+1~+1": (1, 0), "2+2+1": (1, 1), "2~+2+1": (1, 1),
    "2+1+1+1": (0, 1), "2+1~+1+1": (0, 1),
}


@pytest.mark.parametrize("text", sorted(TABLE))
def test_table_rows(text):
    assert counts(text) == TABLE[text]


def test_unlisted_rows_empty():
    listed = {P(t) for t in TABLE}
    for o in gen_overpartitions(5):
        if o not in listed:
            assert counts(str(o)) == (0, 0), str(o)


def test_overline_matters():
    assert counts("4~+1") == (1, 0)
    assert counts("4+1") == (0, 0)


def test_totals_small():
    assert st_totals(0) == (0, 0)
    assert st_totals(1) == (1, 0)
    assert st_totals(5) == (8, 4)


def test_occurrence_records():
    occ = strings_over(P("2+2+1"))
    assert {(s.parity, s.k, s.ell) for s in occ} == {(ODD, 1, 1), (EVEN, 1, 1)}
    even = next(s for s in occ if s.parity == EVEN)
    assert list(even.run) == [1, 2]
    assert even.exclusions() == (3, 6)


def test_restricted_by_start():
    o = P("5+2+1")
    assert count_odd_strings_over(o, k=3) == count_odd_strings_over(o) - count_odd_strings_over(o, k=1)


def test_string_difference_matches_series_below_20():
    s = ospt_bar_series(19)
    for n in range(20):
        odd, even = st_totals(n)
        assert odd - even == s[n], n


def test_surplus_corrected_totals_match_series():
    s = ospt_bar_series(25)
    for n in range(26):
        odd, even = st_totals(n)
        so, se = double_exclusion_surplus(n)
        assert (odd - so) - (even - se) == s[n], n


def test_first_surplus_object():
    # non-overlined parts 10+4+3+2+1: the k=1, l=2 even string with one copy of 10
    assert double_exclusion_surplus(19) == (0, 0)
    assert double_exclusion_surplus(20) == (0, 1)
    assert count_even_strings_over(P("10+4+3+2+1")) == 1


# generating functions -----------------------------------------------------------------


def test_string_series_sum_at_five():
    total = 0
    for k in range(1, 4):
        a, b = odd_even_string_series(k, 10)
        total += a[5] - b[5]
    assert total == 4


def test_string_series_matches_enumeration():
    for k in (1, 2, 3):
        a, b = odd_even_string_series(k, 15)
        for n in range(16):
            ov = list(gen_overpartitions(n))
            assert a[n] == sum(count_odd_strings_over(o, k) for o in ov), (k, n)
            assert b[n] == sum(count_even_strings_over(o, k) for o in ov), (k, n)


def test_string_series_sum_over_k_is_ospt_bar():
    order = 100
    total = None
    for k in range(1, order // 2 + 2):
        a, b = odd_even_string_series(k, order)
        total = a - b if total is None else total + (a - b)
    assert total == ospt_bar_series(order)


def test_string_series_inequality_scanned_range():
    for k in range(1, 6):
        a, b = odd_even_string_series(k, 100)
        assert all(a[n] >= b[n] for n in range(1, 101))


def test_string_series_bad_k():
    with pytest.raises(ValueError):
        odd_even_string_series(0, 5)


def test_string_series_identity_guard(monkeypatch):
    real = strings.f_k_series
    monkeypatch.setattr(strings, "f_k_series", lambda k, order: real(k + 1, order))
    with pytest.raises(InternalIdentityViolation):
        strings.odd_even_string_series(1, 30)
