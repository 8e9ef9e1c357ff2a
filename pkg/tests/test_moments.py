import pytest

from oplab.combinatorics import build_tables
from oplab.errors import InternalIdentityViolation
from oplab.moments import (
    MomentSeries,
    full_moment_from_table,
    crank_moment_closed_form,
    ospt_bar_series,
    ospt_ordinary,
    positive_moment_from_table,
    rank_moment_closed_form,
)
from oplab.strings import count_strings_partition
from oplab.combinatorics import gen_partitions
import oplab.moments as moments


@pytest.fixture(scope="module")
def tables():
    return build_tables(40, method="grouped")


def test_spot_values_enumeration(tables):
    _, _, nb, mb = tables
    assert positive_moment_from_table(nb, 1)[5] == 20
    assert positive_moment_from_table(mb, 1)[5] == 24


def test_weight_zero_moments(tables):
    for t in tables:
        assert positive_moment_from_table(t, 1)[0] == 0


def test_moment_series_fields(tables):
    ms = positive_moment_from_table(tables[2], 3)
    assert isinstance(ms, MomentSeries)
    assert ms.kind == "rank-over" and ms.k == 3
    assert all(isinstance(c, int) and c >= 0 for c in ms.series.coeffs)


def test_bad_k(tables):
    with pytest.raises(ValueError):
        positive_moment_from_table(tables[0], 0)


def test_closed_form_spot_values():
    r1, m1 = rank_moment_closed_form(10), crank_moment_closed_form(10)
    assert r1[1] == 0 and r1[5] == 20
    assert m1[1] == 1 and m1[5] == 24


def test_closed_forms_match_enumeration(tables):
    _, _, nb, mb = tables
    assert positive_moment_from_table(nb, 1).series == rank_moment_closed_form(40)
    assert positive_moment_from_table(mb, 1).series == crank_moment_closed_form(40)


def test_ospt_bar_values():
    s = ospt_bar_series(20)
    assert s[1] == 1
    assert s[5] == 4
    assert s[0] == 0


def test_ospt_bar_positive_to_1000():
    s = ospt_bar_series(1000)
    assert all(c > 0 for c in s.coeffs[1:])


def test_ospt_bar_detects_broken_route(monkeypatch):
    real = moments.rank_moment_closed_form

    def broken(order):
        s = real(order)
        return s + s.truncate(order).shift(7) if order >= 7 else s

    monkeypatch.setattr(moments, "rank_moment_closed_form", broken)
    with pytest.raises(InternalIdentityViolation) as err:
        moments.ospt_bar_series(20)
    assert err.value.index >= 7


def test_even_moment_folding(tables):
    for t in tables:
        for j in (1, 2):
            full = full_moment_from_table(t, 2 * j)
            half = positive_moment_from_table(t, 2 * j).series
            assert full == 2 * half, (t.statistic, j)


def test_full_moment_zero_is_total(tables):
    nb = tables[2]
    assert full_moment_from_table(nb, 0)[4] == 14


def test_ospt_ordinary():
    assert ospt_ordinary(1) == 1
    with pytest.raises(ValueError):
        ospt_ordinary(0)


def test_ospt_ordinary_positive():
    N, M, _, _ = build_tables(40, method="grouped")
    diff = positive_moment_from_table(M, 1).series - positive_moment_from_table(N, 1).series
    assert all(diff[n] >= 1 for n in range(1, 41))
    assert ospt_ordinary(12) == diff[12]


def test_ospt_is_string_total():
    for n in range(1, 21):
        assert ospt_ordinary(n) == sum(count_strings_partition(p) for p in gen_partitions(n))
