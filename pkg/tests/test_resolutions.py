import itertools

import pytest
from hypothesis import given, strategies as st

from curvedim.bounds import ci_curve_genus
from curvedim.exactpoly import binomial_poly
from curvedim.exceptions import NotACurve, ResolutionFormatError
from curvedim.models import Ambient, CurveClass, GradedResolution
from curvedim.resolutions import (
    P3,
    P4,
    Q,
    ambient_chi,
    complete_intersection_resolution,
    curve_class_from_resolution,
    format_resolution,
    hilbert_summary,
    ideal_hilbert_poly,
    linear_determinantal_resolution,
    mixed_determinantal_resolution,
    parse_resolution,
    quadric_determinantal_resolution,
    read_resolution,
    uniform_determinantal_resolution,
)


def test_ambient_chi():
    assert ambient_chi(P3) == binomial_poly(3, 3)
    assert ambient_chi(Q)(1) == 5
    assert ambient_chi(P4)(2) == 15


def test_quadric_has_one_quadric_in_degree_two():
    # 15 quadrics on P^4, one of which vanishes on Q
    assert ambient_chi(Q)(2) == 14


def test_ideal_hilbert_poly_of_twisted_cubic():
    assert ideal_hilbert_poly(linear_determinantal_resolution(2)) == (
        3 * binomial_poly(1, 3) - 2 * binomial_poly(0, 3)
    )


def test_ideal_hilbert_poly_of_quadric_surface():
    res = GradedResolution(P3, [[(1, -2)]])
    assert ideal_hilbert_poly(res) == binomial_poly(1, 3)


def test_ideal_hilbert_poly_of_pencil_of_quadrics():
    assert ideal_hilbert_poly(uniform_determinantal_resolution(1, 2))(2) == 2


@pytest.mark.parametrize(
    "res, expected",
    [
        (linear_determinantal_resolution(2), CurveClass(d=3, g=0, r=3)),
        (uniform_determinantal_resolution(1, 2), CurveClass(d=4, g=1, r=3)),
        (quadric_determinantal_resolution(2), CurveClass(d=6, g=2, r=4)),
        (quadric_determinantal_resolution(1), CurveClass(d=2, g=0, r=4)),
        (complete_intersection_resolution(P3, [2, 3]), CurveClass(d=6, g=4, r=3)),
        (complete_intersection_resolution(P4, [2, 2, 2]), CurveClass(d=8, g=5, r=4)),
        (complete_intersection_resolution(Q, [1, 1]), CurveClass(d=2, g=0, r=4)),
    ],
)
def test_curve_class_from_resolution(res, expected):
    assert curve_class_from_resolution(res) == expected


@pytest.mark.parametrize("t", range(1, 11))
def test_complete_intersections_satisfy_adjunction(t):
    curve = curve_class_from_resolution(uniform_determinantal_resolution(1, t))
    assert curve.d == t * t
    assert curve.g == 1 + t ** 3 - 2 * t ** 2


def test_plane_is_not_a_curve():
    with pytest.raises(NotACurve):
        curve_class_from_resolution(GradedResolution(P3, [[(1, -1)]]))


def test_whole_space_is_not_a_curve():
    with pytest.raises(NotACurve):
        curve_class_from_resolution(GradedResolution(P3, [[(1, 0)]]))


def test_koszul_resolution_collects_equal_twists():
    res = complete_intersection_resolution(P4, [2, 2, 2])
    assert res.terms == (((3, -2),), ((3, -4),), ((1, -6),))


def test_mixed_resolution_collects_equal_row_degrees():
    res = mixed_determinantal_resolution([2, 1, 2])
    assert res.terms == (((4, -5),), ((1, -6), (2, -7)))


def test_mixed_resolution_specialises_to_linear():
    for s in range(1, 8):
        assert mixed_determinantal_resolution([1] * s) == linear_determinantal_resolution(s)


@given(
    first=st.integers(min_value=1, max_value=10),
    second=st.integers(min_value=1, max_value=10),
    twist=st.integers(min_value=-10, max_value=10),
    level=st.integers(min_value=0, max_value=2),
)
def test_splitting_a_term_leaves_ideal_hilbert_poly_unchanged(first, second, twist, level):
    padding = [[(1, -1)]] * level
    merged = GradedResolution(P3, padding + [[(first + second, twist)]])
    split = GradedResolution(P3, padding + [[(first, twist), (second, twist)]])
    assert ideal_hilbert_poly(merged) == ideal_hilbert_poly(split)


def test_koszul_genus_agrees_with_closed_form():
    for a, b in itertools.combinations_with_replacement(range(1, 7), 2):
        curve = curve_class_from_resolution(complete_intersection_resolution(P3, [a, b]))
        assert curve.d == a * b
        assert curve.g == ci_curve_genus(a, b)


twisted_cubic_text = """
# the twisted cubic
ambient P3
level 0: 3 x -2
level 1: 2 x -3
"""


def test_parse_resolution():
    assert parse_resolution(twisted_cubic_text) == linear_determinantal_resolution(2)


def test_parse_resolution_with_several_terms_and_comments():
    res = parse_resolution(
        "ambient P4   # complete intersection of three quadrics\n"
        "level 0: 3 x -2\n"
        "level 1: 3x-4\n"
        "\n"
        "level 2: 1 x -6\n"
    )
    assert res == complete_intersection_resolution(P4, [2, 2, 2])


def test_format_resolution_is_read_back():
    res = mixed_determinantal_resolution([1, 2, 2])
    text = format_resolution(res)
    assert text == "ambient P3\nlevel 0: 4 x -5\nlevel 1: 1 x -6, 2 x -7\n"
    assert parse_resolution(text) == res


def test_read_resolution(twisted_cubic_path):
    assert read_resolution(twisted_cubic_path) == linear_determinantal_resolution(2)


@pytest.mark.parametrize(
    "text, message",
    [
        ("level 0: 1 x -2\n", "level before the ambient"),
        ("ambient P3\n", "at least one level"),
        ("", "Missing 'ambient'"),
        ("ambient P5\nlevel 0: 1 x -2\n", "unknown ambient"),
        ("ambient P3\nambient P4\nlevel 0: 1 x -2\n", "ambient given twice"),
        ("ambient P3\nlevel 0: 0 x -2\n", "rank must be positive"),
        ("ambient P3\nlevel 0: -1 x -2\n", "rank must be positive"),
        ("ambient P3\nlevel 1: 1 x -2\n", "expected level 0"),
        ("ambient P3\nlevel 0: 1 x -2\nlevel 2: 1 x -3\n", "expected level 1"),
        ("ambient P3\nlevel 0: 1 by -2\n", "cannot parse term"),
        ("ambient P3\nhello\n", "cannot parse"),
    ],
)
def test_parse_resolution_rejects_malformed_input(text, message):
    with pytest.raises(ResolutionFormatError, match=message):
        parse_resolution(text)


def test_resolution_needs_positive_ranks():
    with pytest.raises(ValueError):
        GradedResolution(P3, [[(0, -2)]])

    with pytest.raises(ValueError):
        GradedResolution(P3, [])


def test_hilbert_summary():
    summary = hilbert_summary(linear_determinantal_resolution(2))
    assert list(summary) == ["ambient", "ideal_hilbert_poly", "hilbert_poly", "d", "g", "r"]
    assert summary["hilbert_poly"] == "3*k + 1"
    assert (summary["d"], summary["g"], summary["r"]) == (3, 0, 3)


def test_ambient_from_name():
    assert Ambient.from_name("P3") == P3
    assert Ambient.from_name("Q") == Q
    assert Q.r == 4 and P4.r == 4
    assert Q.name == "Q"

    with pytest.raises(ValueError):
        Ambient.from_name("X")
