import enum
import typing
from fractions import Fraction

import attr
import cattr
import yaml

from .exceptions import ConfigError


def _positive(instance, attribute, value):
    if value < 1:
        raise ValueError(f"{attribute.name} must be >= 1, got {value}")


def _optional_positive(instance, attribute, value):
    if value is not None:
        _positive(instance, attribute, value)


@attr.s(frozen=True)
class Ambient:
    """
    Either projective space P^n or the smooth quadric threefold Q in P^4.
    """
    kind = attr.ib(validator=attr.validators.in_(["projective", "quadric"]))
    n = attr.ib()

    @classmethod
    def projective_space(cls, n):
        if n < 2:
            raise ValueError(f"Projective space needs n >= 2, got {n}")
        return cls(kind="projective", n=n)

    @classmethod
    def quadric_threefold(cls):
        return cls(kind="quadric", n=3)

    @classmethod
    def from_name(cls, name):
        name = name.strip()
        if name == "Q":
            return cls.quadric_threefold()
        if name.startswith("P") and name[1:].isdigit():
            return cls.projective_space(int(name[1:]))
        raise ValueError(f"Unknown ambient {name!r}; expected P<n> or Q")

    @property
    def is_quadric(self):
        return self.kind == "quadric"

    @property
    def r(self):
        """
        Dimension of the projective space the ambient lives in.
        """
        return 4 if self.is_quadric else self.n

    @property
    def name(self):
        return "Q" if self.is_quadric else f"P{self.n}"


@attr.s(frozen=True)
class CurveClass:
    d = attr.ib(validator=_positive)
    g = attr.ib()
    r = attr.ib()

    @property
    def is_degenerate(self):
        # A nondegenerate curve in P^r has degree at least r.
        return self.d < self.r


def _freeze_terms(terms):
    return tuple(
        tuple((int(rank), int(twist)) for rank, twist in level)
        for level in terms
    )


def _check_terms(instance, attribute, value):
    if not value:
        raise ValueError("A resolution needs at least one term")
    for i, level in enumerate(value):
        if not level:
            raise ValueError(f"Level {i} of the resolution is empty")
        for rank, _ in level:
            if rank < 1:
                raise ValueError(f"Level {i} has a non-positive rank {rank}")


@attr.s(frozen=True)
class GradedResolution:
    """
    The ranks and twists of a free resolution

        0 -> E_m -> ... -> E_1 -> E_0 -> I -> 0

    of an ideal sheaf.  ``terms[i]`` lists E_i as (rank, twist) pairs, so
    ``((3, -2),)`` is O(-2)^3.  No maps are stored: everything we compute
    from a resolution is an Euler characteristic.
    """
    ambient = attr.ib()
    terms = attr.ib(converter=_freeze_terms, validator=_check_terms)


class Provenance(enum.Enum):
    """
    Which formula produced a bound.  The two branches of the P^3 bound are
    also reachable as BRANCH_A (low genus) and BRANCH_B (high genus).
    """

    # (r+1)d - (r-3)(g-1), the Euler characteristic of the normal sheaf
    EXPECTED_DIMENSION = "expected-dimension"

    # r = 3 and g^2 < d^3: the expected dimension 4d is the bound
    LOW_GENUS = "low-genus"

    # r = 3 and g^2 >= d^3: restrict to a surface of degree <= mu(d, g)
    HIGH_GENUS = "high-genus"

    BRANCH_A = "low-genus"
    BRANCH_B = "high-genus"

    SURFACE_RESTRICTION = "surface-restriction"
    CI_DEFORMATION = "ci-deformation"


@attr.s(frozen=True)
class BoundCertificate:
    value = attr.ib()
    provenance = attr.ib(validator=attr.validators.instance_of(Provenance))
    d = attr.ib()
    g = attr.ib()
    r = attr.ib(default=3)
    s = attr.ib(default=None)
    degrees = attr.ib(default=(), converter=tuple)


@attr.s(frozen=True)
class CastelnuovoParams:
    """
    d - 1 = m(r - 1) + epsilon with 0 <= epsilon < r - 1.
    """
    m = attr.ib()
    epsilon = attr.ib()


def _canonical_rows(row_degrees):
    return tuple(sorted(int(k) for k in row_degrees))


def _check_rows(instance, attribute, value):
    if not value:
        raise ValueError("A determinantal family needs at least one row")
    if any(k < 1 for k in value):
        raise ValueError(f"Row degrees must be positive, got {value}")


@attr.s(frozen=True)
class FamilyP3:
    """
    Curves in P^3 cut out by the maximal minors of an s x (s+1) matrix
    whose i-th row has entries of degree k_i.

    Row degrees are kept in non-decreasing order; the invariants only
    depend on the multiset.
    """
    row_degrees = attr.ib(converter=_canonical_rows, validator=_check_rows)

    @classmethod
    def uniform(cls, s, t):
        return cls([t] * s)

    @classmethod
    def linear(cls, s):
        return cls.uniform(s, 1)

    @property
    def s(self):
        return len(self.row_degrees)

    @property
    def t(self):
        return sum(self.row_degrees)

    @property
    def u(self):
        return sum(k * k for k in self.row_degrees)

    @property
    def alpha(self):
        return Fraction(self.u, self.t ** 2)

    @property
    def is_uniform(self):
        return len(set(self.row_degrees)) == 1

    @property
    def is_linear(self):
        return set(self.row_degrees) == {1}


@attr.s(frozen=True)
class RatioAnalysis:
    """
    g^2/d^3 for a determinantal family in P^3, next to the bounds it is
    known to satisfy.  ``uniform_bound`` is None unless all rows have the
    same degree.
    """
    ratio = attr.ib()
    alpha = attr.ib()
    mixed_bound = attr.ib()
    uniform_bound = attr.ib(default=None)


@attr.s(frozen=True)
class FamilyQ:
    """
    Curves on the quadric threefold cut out by the t x t minors of a
    t x (t+1) matrix of linear forms.
    """
    t = attr.ib(validator=_positive)


@attr.s(frozen=True)
class RigidityChecks:
    first_threefold = attr.ib()
    second_threefold = attr.ib()
    bezout = attr.ib()
    deformation = attr.ib()

    @property
    def all_passed(self):
        return all(attr.astuple(self))


@attr.s(frozen=True)
class RigidityCertificate:
    d = attr.ib()
    g = attr.ib()
    k = attr.ib()
    l = attr.ib()
    N = attr.ib()
    M = attr.ib()
    worst_case_a = attr.ib()
    worst_case_b = attr.ib()
    bezout_rhs = attr.ib()
    deformation_bound = attr.ib()
    checks = attr.ib()

    # True if the hypersurface came from the image of C being too small to
    # span P^N (resp. P^M), rather than from a Castelnuovo comparison.
    k_from_veronese_degeneracy = attr.ib(default=False)
    l_from_veronese_degeneracy = attr.ib(default=False)

    @property
    def bezout_lhs(self):
        return self.d


@attr.s(frozen=True)
class GBWitness:
    d = attr.ib()
    g = attr.ib()
    k = attr.ib()
    bound = attr.ib()


@attr.s(frozen=True)
class CoverageRow:
    t = attr.ib()
    L = attr.ib()
    R = attr.ib()
    stitched = attr.ib()


@attr.s(frozen=True)
class CoverageReport:
    d = attr.ib()
    per_t: typing.Tuple[CoverageRow, ...] = attr.ib(converter=tuple)
    # top of the stitched chain, None when there is no base curve
    paper_max_g: typing.Optional[int] = attr.ib()
    closure_intervals: typing.Tuple[typing.Tuple[int, int], ...] = attr.ib(converter=tuple)
    chain_start_t: typing.Optional[int] = attr.ib(default=None)
    chain_end_t: typing.Optional[int] = attr.ib(default=None)

    @property
    def closure_max_contiguous_g(self):
        """
        Top of the closure interval that starts at the smallest genus reached.
        """
        if not self.closure_intervals:
            return None
        return self.closure_intervals[0][1]


SCAN_TARGETS = ("p3_bound", "mu", "pi", "rigidity", "quadric")

OUTPUT_FORMATS = ("csv", "json")


@attr.s(frozen=True)
class ScanSpec:
    d_values: typing.Tuple[int, ...] = attr.ib(converter=tuple)
    g_values: typing.Tuple[int, ...] = attr.ib(converter=tuple)
    target = attr.ib(validator=attr.validators.in_(SCAN_TARGETS))
    output_format = attr.ib(default="csv", validator=attr.validators.in_(OUTPUT_FORMATS))
    workers = attr.ib(default=1, validator=_positive)
    r = attr.ib(default=3)
    chunk_size = attr.ib(default=64, validator=_positive)
    k_cap: typing.Optional[int] = attr.ib(default=None, validator=_optional_positive)
    l_cap: typing.Optional[int] = attr.ib(default=None, validator=_optional_positive)


@attr.s
class RigiditySettings:
    k_cap: typing.Optional[int] = attr.ib(default=None, validator=_optional_positive)
    l_cap: typing.Optional[int] = attr.ib(default=None, validator=_optional_positive)


@attr.s
class FamilySearchSettings:
    max_s: int = attr.ib(default=8, validator=_positive)
    max_k: int = attr.ib(default=8, validator=_positive)


@attr.s
class ScanSettings:
    workers: int = attr.ib(default=1, validator=_positive)
    chunk_size: int = attr.ib(default=64, validator=_positive)


@attr.s
class Settings:
    rigidity: RigiditySettings = attr.ib(factory=RigiditySettings)
    family_search: FamilySearchSettings = attr.ib(factory=FamilySearchSettings)
    scan: ScanSettings = attr.ib(factory=ScanSettings)

    @classmethod
    def from_text(cls, yaml_text):
        data = yaml.safe_load(yaml_text) or {}
        _reject_unknown_keys(data, cls, path="settings")
        try:
            return cattr.structure(data, cls)
        except (TypeError, ValueError) as err:
            raise ConfigError(f"Invalid settings: {err}") from None

    @classmethod
    def from_path(cls, path):
        with open(path) as infile:
            yaml_text = infile.read()
        return Settings.from_text(yaml_text=yaml_text)


def _reject_unknown_keys(data, cls, *, path):
    if not isinstance(data, dict):
        raise ConfigError(f"Expected a mapping at {path}, got {data!r}")

    fields = {f.name: f for f in attr.fields(cls)}
    unknown = sorted(set(data) - set(fields))
    if unknown:
        raise ConfigError("Unknown keys at %s: %s" % (path, ", ".join(map(str, unknown))))

    for name, value in data.items():
        field_type = fields[name].type
        if attr.has(field_type) and value is not None:
            _reject_unknown_keys(value, field_type, path=f"{path}.{name}")


def render_rational(value):
    """
    Integers stay integers; anything else becomes the string "p/q".
    """
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


converter = cattr.Converter()
converter.register_unstructure_hook(Fraction, render_rational)


def unstructure(obj):
    return converter.unstructure(obj)
