import json
from fractions import Fraction

import pytest

from curvedim.bounds import castelnuovo_pi, sing_locus_bound_ci_p4
from curvedim.exceptions import NoCertificate, NoThreshold, OutOfRange, PreconditionFailed
from curvedim.rigidity import (
    PGL5_DIMENSION,
    certificate_document,
    default_cap,
    deformation_bound,
    find_first_threefold,
    find_second_threefold,
    rigidity_certificate,
    rigidity_threshold,
    second_M,
    veronese_N,
    verify_certificate,
    verify_certificate_document,
)


@pytest.mark.parametrize("k, expected", [(1, 4), (2, 14), (3, 34), (4, 69)])
def test_veronese_N(k, expected):
    assert veronese_N(k) == expected


@pytest.mark.parametrize(
    "l, a, expected",
    [
        (1, 1, 3),
        (2, 1, 9),
        (2, 2, 13),
        (3, 2, 29),
    ],
)
def test_second_M(l, a, expected):
    assert second_M(l, a) == expected


def test_embedding_dimensions_increase():
    for k in range(1, 50):
        assert veronese_N(k) < veronese_N(k + 1)
        for l in range(k, 50):
            assert second_M(l, k) < second_M(l + 1, k)


@pytest.mark.parametrize(
    "d, expected",
    [
        (5, 200),
        (100, 200),
        (10 ** 16, 40016),
        (10 ** 16 + 1, 40020),
    ],
)
def test_default_cap(d, expected):
    assert default_cap(d) == expected


def test_find_first_threefold():
    assert find_first_threefold(100, 1500, k_cap=200) == 2
    assert find_first_threefold(100, 0, k_cap=50) == 11


def test_find_first_threefold_respects_cap():
    with pytest.raises(NoCertificate) as exc_info:
        find_first_threefold(100, 0, k_cap=10)

    assert exc_info.value.failed_check == "first_threefold"


@pytest.mark.parametrize(
    "d, g, k_cap",
    [
        (4, 0, 10),
        (100, -1, 10),
        (100, 0, 0),
    ],
)
def test_find_first_threefold_preconditions(d, g, k_cap):
    with pytest.raises(PreconditionFailed):
        find_first_threefold(d, g, k_cap)


def test_find_second_threefold():
    assert find_second_threefold(100, 1500, a=2, l_cap=10) == 3


def test_find_second_threefold_respects_cap():
    with pytest.raises(NoCertificate) as exc_info:
        find_second_threefold(100, 1500, a=2, l_cap=2)

    assert exc_info.value.failed_check == "second_threefold"
    assert exc_info.value.k == 2


@pytest.mark.parametrize("a, l_cap", [(0, 5), (3, 2)])
def test_find_second_threefold_preconditions(a, l_cap):
    with pytest.raises(PreconditionFailed):
        find_second_threefold(100, 1500, a=a, l_cap=l_cap)


def test_deformation_bound():
    assert deformation_bound(100, 1500, 2, 3) == 1499


def test_rigidity_certificate():
    cert = rigidity_certificate(100, 1500)

    assert (cert.k, cert.l) == (2, 3)
    assert (cert.N, cert.M) == (14, 29)
    assert (cert.worst_case_a, cert.worst_case_b) == (2, 3)
    assert cert.bezout_lhs == 100
    assert cert.bezout_rhs == 9
    assert cert.deformation_bound == 1499
    assert cert.checks.all_passed
    assert not cert.k_from_veronese_degeneracy
    assert not cert.l_from_veronese_degeneracy


def test_rigidity_certificate_for_large_degree():
    cert = rigidity_certificate(10 ** 6, 3 * 10 ** 9)
    assert cert.k == cert.l == 58
    assert verify_certificate(cert).all_passed


def test_rigidity_certificate_out_of_range():
    with pytest.raises(OutOfRange) as exc_info:
        rigidity_certificate(100, 1585)

    assert exc_info.value.pi == castelnuovo_pi(100, 4) == 1584


@pytest.mark.parametrize("d, g", [(4, 0), (100, -1)])
def test_rigidity_certificate_preconditions(d, g):
    with pytest.raises(PreconditionFailed):
        rigidity_certificate(d, g)


def test_low_genus_curve_has_no_certificate():
    with pytest.raises(NoCertificate) as exc_info:
        rigidity_certificate(100, 0)

    assert exc_info.value.failed_check in ("bezout", "deformation")


def test_rigidity_certificate_with_l_cap_below_k():
    with pytest.raises(NoCertificate) as exc_info:
        rigidity_certificate(100, 1500, l_cap=1)

    assert exc_info.value.failed_check == "second_threefold"


def test_certificate_document_key_order():
    doc = certificate_document(rigidity_certificate(100, 1500))
    assert list(doc) == [
        "d", "g", "k", "l", "N", "M",
        "worst_case_a", "worst_case_b",
        "bezout_lhs", "bezout_rhs",
        "deformation_bound", "pgl5", "verdict",
        "k_from_veronese_degeneracy", "l_from_veronese_degeneracy",
    ]
    assert doc["verdict"] == "not rigid"
    assert doc["pgl5"] == PGL5_DIMENSION


def test_certificate_survives_json():
    doc = certificate_document(rigidity_certificate(100, 1500))
    reloaded = json.loads(json.dumps(doc))
    assert verify_certificate_document(reloaded).all_passed


def test_tampered_deformation_bound_is_caught():
    doc = certificate_document(rigidity_certificate(100, 1500))
    doc["deformation_bound"] += 1

    checks = verify_certificate_document(doc)
    assert checks.first_threefold
    assert checks.second_threefold
    assert checks.bezout
    assert not checks.deformation


def test_tampered_genus_is_caught():
    doc = certificate_document(rigidity_certificate(100, 1500))
    doc["g"] = 1400

    checks = verify_certificate_document(doc)
    assert not checks.first_threefold
    assert not checks.deformation


def test_swapped_degrees_fail_every_check():
    doc = certificate_document(rigidity_certificate(100, 1500))
    doc["k"], doc["l"] = doc["l"], doc["k"]

    checks = verify_certificate_document(doc)
    assert not any([checks.first_threefold, checks.second_threefold, checks.bezout, checks.deformation])


@pytest.mark.parametrize("d, g", [(100, 1500), (100, 1584), (500, 20000)])
def test_worst_case_covers_smaller_degrees(d, g):
    cert = rigidity_certificate(d, g)
    for a in range(1, cert.k + 1):
        for b in range(1, cert.l + 1):
            assert sing_locus_bound_ci_p4(a, b) <= cert.bezout_rhs
            assert deformation_bound(d, g, a, b) >= cert.deformation_bound


def test_rigidity_threshold():
    g_star = rigidity_threshold(100)
    assert g_star == 976

    rigidity_certificate(100, 976)
    with pytest.raises(NoCertificate):
        rigidity_certificate(100, 975)


def test_rigidity_threshold_with_tiny_caps():
    with pytest.raises(NoThreshold):
        rigidity_threshold(100, k_cap=1, l_cap=1)


def test_rigidity_threshold_preconditions():
    with pytest.raises(PreconditionFailed):
        rigidity_threshold(4)


@pytest.mark.parametrize(
    "d, expected",
    [
        (10 ** 4, 1639857),
        (10 ** 5, 43643362),
        (10 ** 6, 1037833567),
    ],
)
def test_rigidity_threshold_scales_like_d_to_three_halves(d, expected):
    g_star = rigidity_threshold(d)
    assert g_star == expected
    assert 1 <= Fraction(g_star * g_star, d ** 3) <= 9
