import json

import pytest

from oplab.series import TruncatedSeries
from oplab.verify import (
    FAIL,
    PASS,
    SCANNED,
    VerificationReport,
    reproduce_string_table,
    scan_odd_even_strings,
    scan_h_multiple,
    scan_moment_inequality,
    verify_a_decomposition,
    verify_h_difference_positive,
    verify_h_difference,
    verify_lambert_closed_form,
    verify_positive_decomposition,
    verify_string_totals,
    verify_ospt_bar_positive,
)


def bump_at(n):
    """Perturbation that pushes the q^n coefficient of any series far negative."""

    def perturb(label, value):
        if isinstance(value, TruncatedSeries) and value.order >= n:
            cs = list(value.coeffs)
            cs[n] = -abs(cs[n]) - 1
            return TruncatedSeries(cs, value.order)
        return value

    return perturb


# report type ---------------------------------------------------------------------


def test_report_requires_violation_on_fail():
    with pytest.raises(ValueError):
        VerificationReport("x", "r", FAIL)
    with pytest.raises(ValueError):
        VerificationReport("x", "r", "maybe")


def test_report_json():
    r = VerificationReport("x", "order 3", FAIL, (2, "bad"), 0.5, {"a": (1, 2)})
    obj = json.loads(json.dumps(r.to_json()))
    assert obj["first_violation"] == {"n": 2, "detail": "bad"}
    assert obj["details"] == {"a": [1, 2]}


# identities -------------------------------------------------------------------------


@pytest.mark.parametrize("check, order", [
    (verify_lambert_closed_form, 500), (verify_lambert_closed_form, 0),
    (verify_h_difference, 400), (verify_h_difference, 0),
    (verify_a_decomposition, 300), (verify_a_decomposition, 1),
    (verify_positive_decomposition, 300), (verify_positive_decomposition, 30),
])
def test_identity_checks_pass(check, order):
    r = check(order)
    assert r.status == PASS
    assert r.first_violation is None


@pytest.mark.parametrize("check", [
    verify_lambert_closed_form, verify_h_difference, verify_a_decomposition, verify_positive_decomposition,
])
def test_identity_checks_can_fail(check):
    r = check(50, perturb=bump_at(17))
    assert r.status == FAIL
    assert r.first_violation[0] == 17


def test_a_decomposition_subchecks():
    r = verify_a_decomposition(100)
    assert r.details["subchecks"] == {"i": PASS, "ii": PASS, "iii": PASS, "iv": PASS}
    only_iii = lambda label, v: bump_at(9)(label, v) if label == "a2_minus_a3" else v
    r = verify_a_decomposition(100, perturb=only_iii)
    assert r.details["subchecks"]["iii"] == FAIL
    assert r.details["subchecks"]["i"] == PASS


# positivity -------------------------------------------------------------------------------


def test_ospt_bar_positive_small():
    r = verify_ospt_bar_positive(80)
    assert r.status == PASS


def test_ospt_bar_positive_can_fail():
    r = verify_ospt_bar_positive(30, perturb=bump_at(11))
    assert r.status == FAIL
    assert r.first_violation[0] == 11


def test_h_difference_positive_reports_small_values():
    r = verify_h_difference_positive(200)
    assert r.status == PASS
    assert r.details["reported_n_le_5"] == {1: 1, 2: 0, 3: 1, 4: 0, 5: 1}


def test_h_difference_positive_minimal_range():
    assert verify_h_difference_positive(6).status == PASS


def test_h_difference_positive_can_fail():
    r = verify_h_difference_positive(40, perturb=bump_at(8))
    assert r.status == FAIL and r.first_violation[0] == 8


def test_string_totals_small_range():
    r = verify_string_totals(19)
    assert r.status == PASS
    assert r.details["rows"][5] == [8, 4, 4]
    assert r.details["rows"][1] == [1, 0, 1]
    assert r.details["rows"][0] == [0, 0, 0]


def test_string_totals_first_violation_is_twenty():
    r = verify_string_totals(22)
    assert r.status == FAIL
    assert r.first_violation[0] == 20
    assert r.details["surplus_corrected_agrees"] is True


def test_string_totals_can_fail():
    r = verify_string_totals(6, perturb=lambda label, v: (v[0] + 1, v[1]))
    assert r.status == FAIL and r.first_violation[0] == 0


def test_string_table_passes():
    r = reproduce_string_table()
    assert r.status == PASS
    assert r.details["totals"] == [8, 4]
    assert len([row for row in r.details["rows"] if row[1] or row[2]]) == 10


def test_string_table_can_fail():
    r = reproduce_string_table(perturb=lambda label, v: (0, 0) if label == "5" else v)
    assert r.status == FAIL


# conjectures ---------------------------------------------------------------------------------


def test_scans_never_claim_pass():
    for r in (scan_odd_even_strings(2, 30), scan_moment_inequality(2, 10), scan_h_multiple(4, 2)):
        assert r.status in (SCANNED, FAIL)


def test_h_multiple_tiny_range():
    assert scan_h_multiple(3, 1).status == SCANNED


def test_h_multiple_zero_at_q_cubed():
    r = scan_h_multiple(10, 500)
    assert r.status == FAIL
    assert r.first_violation[0] == 3
    # the only non-positive coefficient in the whole scanned range
    assert r.details["nonpositive"] == {3: [[3, 0]]}


def _lift_q3(s):
    cs = [0] * (s.order + 1)
    if s.order >= 3 and s[3] == 0:
        cs[3] = 1
    return TruncatedSeries(cs, s.order)


def test_h_multiple_positive_apart_from_q_cubed():
    r = scan_h_multiple(10, 300, perturb=lambda label, s: s + _lift_q3(s))
    assert r.status == SCANNED


def test_h_multiple_can_fail_elsewhere():
    r = scan_h_multiple(4, 60, perturb=lambda label, s: bump_at(40)(label, s + _lift_q3(s)))
    assert r.status == FAIL and r.first_violation[0] == 40


def test_odd_even_scan():
    assert scan_odd_even_strings(5, 200).status == SCANNED
    assert scan_odd_even_strings(1, 1).status == SCANNED


def test_odd_even_scan_can_fail():
    r = scan_odd_even_strings(2, 20, perturb=bump_at(9))
    assert r.status == FAIL and r.first_violation[0] == 9


def test_moment_inequality_scan():
    assert scan_moment_inequality(4, 40).status == SCANNED
    assert scan_moment_inequality(1, 1).status == SCANNED


def test_moment_inequality_can_fail():
    r = scan_moment_inequality(2, 12, perturb=bump_at(4))
    assert r.status == FAIL and r.first_violation[0] == 4


def test_reports_deterministic():
    a, b = scan_odd_even_strings(3, 50), scan_odd_even_strings(3, 50)
    ja, jb = a.to_json(), b.to_json()
    ja.pop("elapsed")
    jb.pop("elapsed")
    assert ja == jb
