from fractions import Fraction

import pytest

from curvedim.exceptions import ConfigError
from curvedim.models import (
    Ambient,
    BoundCertificate,
    CoverageReport,
    CurveClass,
    FamilySearchSettings,
    Provenance,
    RatioAnalysis,
    RigidityChecks,
    RigiditySettings,
    ScanSettings,
    Settings,
    render_rational,
    unstructure,
)

sample_settings = """
rigidity:
  k_cap: 50
family_search:
  max_s: 4
  max_k: 12
scan:
  workers: 4
  chunk_size: 256
"""


def test_from_path(tmpdir):
    settings_path = tmpdir.join("curvedim.yml")
    settings_path.write(sample_settings)

    assert Settings.from_path(str(settings_path)) == Settings(
        rigidity=RigiditySettings(k_cap=50, l_cap=None),
        family_search=FamilySearchSettings(max_s=4, max_k=12),
        scan=ScanSettings(workers=4, chunk_size=256),
    )


@pytest.mark.parametrize("yaml_text", ["", "{}", "# nothing to see here\n"])
def test_empty_settings_use_defaults(yaml_text):
    settings = Settings.from_text(yaml_text)
    assert settings == Settings()
    assert settings.family_search.max_s == 8
    assert settings.rigidity.k_cap is None


def test_partial_settings_keep_other_defaults():
    settings = Settings.from_text("scan:\n  workers: 3\n")
    assert settings.scan == ScanSettings(workers=3, chunk_size=64)
    assert settings.family_search == FamilySearchSettings()


@pytest.mark.parametrize(
    "yaml_text, message",
    [
        ("nonsense: 1\n", "Unknown keys at settings: nonsense"),
        ("scan:\n  workers: 2\n  threads: 4\n", "Unknown keys at settings.scan: threads"),
        ("- a\n- b\n", "Expected a mapping at settings"),
        ("rigidity: 5\n", "Expected a mapping at settings.rigidity"),
        ("family_search:\n  max_s: 0\n", "Invalid settings"),
        ("scan:\n  workers: many\n", "Invalid settings"),
    ],
)
def test_bad_settings(yaml_text, message):
    with pytest.raises(ConfigError, match=message):
        Settings.from_text(yaml_text)


def test_ambient_names():
    assert Ambient.projective_space(3).name == "P3"
    assert Ambient.projective_space(7).r == 7
    assert Ambient.quadric_threefold().name == "Q"
    assert Ambient.quadric_threefold().is_quadric


def test_ambient_needs_n_at_least_two():
    with pytest.raises(ValueError):
        Ambient.projective_space(1)


def test_curve_class_needs_positive_degree():
    with pytest.raises(ValueError):
        CurveClass(d=0, g=0, r=3)


@pytest.mark.parametrize(
    "d, r, expected",
    [(1, 3, True), (2, 3, True), (3, 3, False), (3, 4, True), (4, 4, False)],
)
def test_is_degenerate(d, r, expected):
    assert CurveClass(d=d, g=0, r=r).is_degenerate == expected


def test_provenance_branch_aliases():
    assert Provenance.BRANCH_A is Provenance.LOW_GENUS
    assert Provenance.BRANCH_B is Provenance.HIGH_GENUS
    assert Provenance("high-genus") is Provenance.HIGH_GENUS
    assert len(list(Provenance)) == 5


def test_rigidity_checks():
    assert RigidityChecks(True, True, True, True).all_passed
    assert not RigidityChecks(True, True, False, True).all_passed


def test_closure_max_contiguous_g():
    report = CoverageReport(d=12, per_t=[], paper_max_g=6, closure_intervals=[(2, 8), (11, 11)])
    assert report.closure_max_contiguous_g == 8

    empty = CoverageReport(d=4, per_t=[], paper_max_g=None, closure_intervals=[])
    assert empty.closure_max_contiguous_g is None


@pytest.mark.parametrize(
    "value, expected",
    [
        (Fraction(3, 4), "3/4"),
        (Fraction(-1, 2), "-1/2"),
        (Fraction(6, 3), 2),
        (5, 5),
        (0, 0),
    ],
)
def test_render_rational(value, expected):
    assert render_rational(value) == expected


def test_unstructure_renders_enums_and_rationals():
    cert = BoundCertificate(
        value=1099, provenance=Provenance.HIGH_GENUS, d=100, g=1100, r=3, s=4,
    )
    assert unstructure(cert) == {
        "value": 1099,
        "provenance": "high-genus",
        "d": 100,
        "g": 1100,
        "r": 3,
        "s": 4,
        "degrees": (),
    }

    analysis = RatioAnalysis(
        ratio=Fraction(641601, 1000000), alpha=Fraction(1), mixed_bound=Fraction(1),
    )
    assert unstructure(analysis) == {
        "ratio": "641601/1000000",
        "alpha": 1,
        "mixed_bound": 1,
        "uniform_bound": None,
    }
