"""
Scalar bounds on the dimension of Hilbert scheme components.

Every inequality of the form "g > threshold" is strict and decided with
denominators cleared, so a bound never moves because of rounding.
"""

from fractions import Fraction

from .exactpoly import floor_sqrt_expr
from .exceptions import DomainError, NoSuchS, OutOfRange, PreconditionFailed
from .models import BoundCertificate, CastelnuovoParams, CurveClass, Provenance


def chi_normal(curve):
    """
    The expected dimension (r+1)d - (r-3)(g-1) of curves in the class.
    This may be negative.
    """
    d, g, r = curve.d, curve.g, curve.r
    if r < 3:
        raise PreconditionFailed(f"chi_normal needs r >= 3, got r={r}")
    return (r + 1) * d - (r - 3) * (g - 1)


def chi_normal_quadric(d):
    return 3 * d


def castelnuovo_params(d, r):
    if d < 1:
        raise DomainError(f"Castelnuovo bound needs d >= 1, got d={d}")
    if r < 2:
        raise DomainError(f"Castelnuovo bound needs r >= 2, got r={r}")
    m, epsilon = divmod(d - 1, r - 1)
    return CastelnuovoParams(m=m, epsilon=epsilon)


def castelnuovo_pi(d, r):
    """
    The maximal genus of a reduced irreducible nondegenerate curve of
    degree d in P^r:

        pi(d, r) = C(m, 2)(r - 1) + m * epsilon,   d - 1 = m(r - 1) + epsilon

    This is 0 when d <= r.
    """
    params = castelnuovo_params(d, r)
    m = params.m
    return m * (m - 1) // 2 * (r - 1) + m * params.epsilon


def _check_out_of_range(d, g, r):
    pi = castelnuovo_pi(d, r)
    if g > pi:
        raise OutOfRange(d=d, g=g, r=r, pi=pi)
    return pi


def gp_simplified_predicate(d, g, s):
    """
    True if s(s+1) < d and g > (d/2)(s + d/(s+1) - 3), in which case a
    curve of degree d and genus g in P^3 lies on a surface of degree <= s.
    """
    if s * (s + 1) >= d:
        return False
    return 2 * (s + 1) * g > d * (s * (s + 1) + d - 3 * (s + 1))


def gp_simplified_threshold(d, s):
    return Fraction(d, 2) * (s + Fraction(d, s + 1) - 3)


def gp_original_threshold(d, s):
    """
    The Gruson-Peskine threshold

        (d/2)(s + d/s - 4) - r(s - r)(s - 1) / (2s),   0 <= r < s,  d + r = 0 mod s

    as an exact rational.  Exposed for reference; the certified bounds use
    ``gp_simplified_predicate`` instead.
    """
    if s < 1:
        raise PreconditionFailed(f"gp_original_threshold needs s >= 1, got s={s}")
    if s * (s - 1) >= d:
        raise PreconditionFailed(
            f"gp_original_threshold needs s(s-1) < d, got s={s}, d={d}"
        )

    r = (-d) % s
    return Fraction(d, 2) * (s + Fraction(d, s) - 4) - Fraction(r * (s - r) * (s - 1), 2 * s)


def _check_mu_domain(d, g):
    if d < 3:
        raise DomainError(f"mu needs d >= 3, got d={d}")
    if g * g < d ** 3:
        raise DomainError(f"mu needs g^2 >= d^3, got d={d}, g={g}")


def mu_closed_form(d, g):
    """
    mu(d, g) = 1 + floor((d^2 - 3d - 2g) / (g + d + sqrt(g^2 - d^3 + 4dg + 4d^2)))
    """
    _check_mu_domain(d, g)
    return 1 + floor_sqrt_expr(
        d * d - 3 * d - 2 * g,
        g + d,
        g * g - d ** 3 + 4 * d * g + 4 * d * d,
    )


def mu_minimal_s(d, g):
    """
    The smallest s >= 1 for which ``gp_simplified_predicate`` holds, found
    by trying s = 1, 2, ... while s(s+1) < d.
    """
    _check_mu_domain(d, g)

    s = 1
    while s * (s + 1) < d:
        if gp_simplified_predicate(d, g, s):
            return s
        s += 1

    raise NoSuchS(f"No s with s(s+1) < {d} puts a curve of genus {g} on a surface")


def surface_restriction_bound(d, g, s):
    return 4 * d + g - 1 - s * d


def ci_deformation_bound(n, degrees, d, g):
    """
    The lower bound (n + 1 - sum d_i)d + (k - n + 3)(g - 1) for curves on a
    complete intersection of k hypersurfaces of the given degrees in P^n.
    """
    degrees = list(degrees)
    k = len(degrees)
    if n < 3:
        raise PreconditionFailed(f"ci_deformation_bound needs n >= 3, got n={n}")
    if not 1 <= k <= n - 2:
        raise PreconditionFailed(
            f"ci_deformation_bound needs between 1 and {n - 2} hypersurfaces in P^{n}, got {k}"
        )
    return (n + 1 - sum(degrees)) * d + (k - n + 3) * (g - 1)


def sing_locus_bound_p3(k):
    return k * (k - 1)


def sing_locus_bound_ci_p4(a, b):
    """
    Degree bound ab(a+b-2)/2 on the singular locus of a complete
    intersection surface of type (a, b) in P^4.
    """
    twice = a * b * (a + b - 2)
    assert twice % 2 == 0, f"ab(a+b-2) should be even, got {twice} for a={a}, b={b}"
    return twice // 2


def ci_curve_genus(a, b):
    """
    Arithmetic genus ab(a+b-4)/2 + 1 of a complete intersection of type
    (a, b) in P^3, e.g. a general hyperplane section of a (a, b) surface
    in P^4.
    """
    twice = a * b * (a + b - 4)
    assert twice % 2 == 0, f"ab(a+b-4) should be even, got {twice} for a={a}, b={b}"
    return twice // 2 + 1


def lower_bound_p3(d, g):
    """
    Lower bound for the dimension of every component of the Hilbert scheme
    of smooth irreducible nondegenerate curves of degree d and genus g in P^3.

    If g^2 < d^3 this is the expected dimension 4d; otherwise the curve
    lies on a surface of degree at most s = mu(d, g) and the bound is
    4d + g - 1 - sd.
    """
    if d < 3:
        raise PreconditionFailed(f"A nondegenerate curve in P^3 has d >= 3, got d={d}")
    if g < 0:
        raise PreconditionFailed(f"Genus must be non-negative, got g={g}")
    _check_out_of_range(d, g, r=3)

    if g * g < d ** 3:
        return BoundCertificate(
            value=chi_normal(CurveClass(d=d, g=g, r=3)),
            provenance=Provenance.LOW_GENUS,
            d=d, g=g, r=3,
        )

    s = mu_closed_form(d, g)
    return BoundCertificate(
        value=surface_restriction_bound(d, g, s),
        provenance=Provenance.HIGH_GENUS,
        d=d, g=g, r=3, s=s,
    )


def lower_bound(d, g, r):
    """
    Dispatches on the ambient dimension: the two-branch bound in P^3, the
    expected dimension everywhere else.
    """
    if r == 3:
        return lower_bound_p3(d, g)

    if r < 3:
        raise PreconditionFailed(f"Bounds are for curves in P^r with r >= 3, got r={r}")
    if d < r:
        raise PreconditionFailed(f"A nondegenerate curve in P^{r} has d >= {r}, got d={d}")
    if g < 0:
        raise PreconditionFailed(f"Genus must be non-negative, got g={g}")
    _check_out_of_range(d, g, r=r)

    return BoundCertificate(
        value=chi_normal(CurveClass(d=d, g=g, r=r)),
        provenance=Provenance.EXPECTED_DIMENSION,
        d=d, g=g, r=r,
    )


def certify_surface_restriction(d, g, s):
    """
    The bound 4d + g - 1 - sd for an explicitly chosen s, accepted only
    if s is large enough to force the curve onto a surface of degree <= s.
    """
    _check_out_of_range(d, g, r=3)
    if not gp_simplified_predicate(d, g, s):
        raise PreconditionFailed(
            f"s={s} does not force a curve of degree {d} and genus {g} onto a surface of degree <= {s}"
        )
    return BoundCertificate(
        value=surface_restriction_bound(d, g, s),
        provenance=Provenance.SURFACE_RESTRICTION,
        d=d, g=g, r=3, s=s,
    )


def certify_ci_deformation(n, degrees, d, g):
    return BoundCertificate(
        value=ci_deformation_bound(n, degrees, d, g),
        provenance=Provenance.CI_DEFORMATION,
        d=d, g=g, r=n, degrees=degrees,
    )


def recompute_value(cert):
    """
    Recomputes the value of a certificate from its witnesses alone.
    """
    if cert.provenance in (Provenance.EXPECTED_DIMENSION, Provenance.LOW_GENUS):
        return chi_normal(CurveClass(d=cert.d, g=cert.g, r=cert.r))
    elif cert.provenance in (Provenance.HIGH_GENUS, Provenance.SURFACE_RESTRICTION):
        return surface_restriction_bound(cert.d, cert.g, cert.s)
    elif cert.provenance == Provenance.CI_DEFORMATION:
        return ci_deformation_bound(cert.r, cert.degrees, cert.d, cert.g)
    else:  # pragma: no cover
        raise ValueError(f"Unrecognised provenance: {cert.provenance}")


def explain(cert):
    """
    Returns the chain of facts that justify ``cert.value``, in order.
    """
    d, g, r = cert.d, cert.g, cert.r
    steps = []

    if cert.provenance != Provenance.CI_DEFORMATION:
        steps.append(
            f"Castelnuovo: g = {g} <= pi({d},{r}) = {castelnuovo_pi(d, r)}, "
            f"so smooth nondegenerate curves of this degree and genus can exist"
        )

    if cert.provenance == Provenance.EXPECTED_DIMENSION:
        steps.append(
            f"Every component has dimension >= chi(N) = (r+1)d - (r-3)(g-1) = {cert.value}"
        )

    elif cert.provenance == Provenance.LOW_GENUS:
        steps.append(f"g^2 = {g * g} < d^3 = {d ** 3}")
        steps.append(
            f"Every component has dimension >= chi(N) = 4d = {cert.value}"
        )

    elif cert.provenance in (Provenance.HIGH_GENUS, Provenance.SURFACE_RESTRICTION):
        s = cert.s
        if cert.provenance == Provenance.HIGH_GENUS:
            steps.append(f"g^2 = {g * g} >= d^3 = {d ** 3}")
            steps.append(
                f"mu(d,g) = {s} is the smallest s with s(s+1) < d "
                f"and g > (d/2)(s + d/(s+1) - 3)"
            )
        threshold = gp_simplified_threshold(d, s)
        steps.append(
            f"s(s+1) = {s * (s + 1)} < d = {d} and g = {g} > (d/2)(s + d/(s+1) - 3) = {threshold}, "
            f"so C lies on a surface S of degree <= {s}"
        )
        steps.append(
            f"Deforming C on S and moving S: dimension >= 4d + g - 1 - sd = {cert.value}"
        )

    elif cert.provenance == Provenance.CI_DEFORMATION:
        degrees = ", ".join(str(a) for a in cert.degrees)
        k = len(cert.degrees)
        steps.append(
            f"C lies on a complete intersection of type ({degrees}) in P^{r}"
        )
        steps.append(
            f"Dimension >= (n+1-sum d_i)d + (k-n+3)(g-1) = "
            f"({r + 1 - sum(cert.degrees)})*{d} + ({k - r + 3})*{g - 1} = {cert.value}"
        )

    return steps
