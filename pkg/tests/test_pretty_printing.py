from fractions import Fraction

import pytest

from curvedim.pretty_printing import (
    pprint_decimal,
    pprint_duration,
    pprint_interval,
    pprint_rational,
    pprint_sqrt_decimal,
)


@pytest.mark.parametrize(
    "value, expected_str",
    [
        (Fraction(256, 243), "256/243"),
        (Fraction(6, 3), "2"),
        (Fraction(-1, 4), "-1/4"),
        (0, "0"),
    ],
)
def test_pprint_rational(value, expected_str):
    assert pprint_rational(value) == expected_str


@pytest.mark.parametrize(
    "value, expected_str",
    [
        (Fraction(1, 3), "0.333333333333"),
        (Fraction(256, 243), "1.05349794239"),
        (Fraction(1, 2), "0.5"),
    ],
)
def test_pprint_decimal(value, expected_str):
    assert pprint_decimal(value) == expected_str


def test_pprint_sqrt_decimal():
    assert pprint_sqrt_decimal(Fraction(1, 4)) == "0.5"
    assert pprint_sqrt_decimal(Fraction(1, 2)) == "0.707106781187"


@pytest.mark.parametrize(
    "interval, expected_str",
    [
        ((2, 8), "[2, 8]"),
        ((11, 11), "{11}"),
        ((11, 9), "∅"),
    ],
)
def test_pprint_interval(interval, expected_str):
    assert pprint_interval(interval) == expected_str


@pytest.mark.parametrize(
    "seconds, expected_str",
    [
        (1, "1s"),
        (59, "59s"),
        (60, "1m"),
        (62, "1m 2s"),
        (180, "3m"),
    ],
)
def test_pprint_duration(seconds, expected_str):
    assert pprint_duration(seconds) == expected_str
