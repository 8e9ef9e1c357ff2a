import pytest

from oplab.bivariate import (
    LaurentQSeries,
    crank_gf_over,
    crank_gf_partitions,
    positive_first_moment,
    rank_gf_over,
    row_sums,
)
from oplab.moments import crank_moment_closed_form, overpartition_prefactor, rank_moment_closed_form
from oplab.series import TruncatedSeries, euler_product, invert


@pytest.fixture(scope="module")
def rbar():
    return rank_gf_over(60)


@pytest.fixture(scope="module")
def cbar():
    return crank_gf_over(60)


def test_rank_constant_term(rbar):
    assert rbar.row(0) == {0: 1}


def test_rank_row_four(rbar):
    assert sum(rbar.row(4).values()) == 14
    assert rbar.row(4) == {-3: 2, -1: 4, 0: 2, 1: 4, 3: 2}


def test_crank_rows():
    c = crank_gf_partitions(10)
    assert c.row(0) == {0: 1}
    assert c.row(1) == {1: 1, 0: -1, -1: 1}
    assert sum(c.row(4).values()) == 5


def test_crank_over_row_four(cbar):
    assert sum(cbar.row(4).values()) == 14


def test_positive_first_moments(rbar, cbar):
    assert positive_first_moment(rbar)[5] == 20
    assert positive_first_moment(cbar)[5] == 24


def test_positive_first_moment_symmetric_row():
    g = LaurentQSeries([{0: 1}, {-1: 1, 0: 3, 1: 1}])
    assert positive_first_moment(g)[1] == 1


def test_symmetry(rbar, cbar):
    for g in (rbar, cbar):
        for n in range(g.order + 1):
            row = g.row(n)
            assert all(row.get(-m, 0) == c for m, c in row.items())


def test_row_sums(rbar, cbar):
    pre = overpartition_prefactor(60)
    assert row_sums(rbar) == pre
    assert row_sums(cbar) == pre
    assert row_sums(crank_gf_partitions(40)) == invert(euler_product(40))


def test_moments_match_closed_forms(rbar, cbar):
    assert positive_first_moment(rbar) == rank_moment_closed_form(60)
    assert positive_first_moment(cbar) == crank_moment_closed_form(60)


def test_bound_on_z_degree():
    with pytest.raises(ValueError):
        LaurentQSeries([{0: 1}, {2: 1}])


def test_row_count_checked():
    with pytest.raises(ValueError):
        LaurentQSeries([{0: 1}], order=3)


def test_order_zero():
    assert rank_gf_over(0).row(0) == {0: 1}
    assert crank_gf_over(0).row(0) == {0: 1}


def test_json_rows():
    rows = crank_gf_partitions(1).to_json()
    assert rows[1] == {"n": 1, "coeffs": {"-1": "1", "0": "-1", "1": "1"}}


def test_positive_moment_type(rbar):
    assert isinstance(positive_first_moment(rbar), TruncatedSeries)
