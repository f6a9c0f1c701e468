"""
Closed-form invariants of determinantal curves.

A family in P^3 is cut out by the maximal minors of an s x (s+1) matrix
whose i-th row has entries of degree k_i; with t = sum k_i and
u = sum k_i^2 its curves have

    d = (t^2 + u) / 2
    g = 1 + (2t^3 - 6t^2 + 3ut + sum(k_i^3 - 6k_i^2)) / 6

Every formula here is checked against ``resolutions`` in the tests.
"""

import itertools
from fractions import Fraction

from .exceptions import PreconditionFailed
from .models import CurveClass, FamilyP3, RatioAnalysis


def _exact_quotient(numerator, denominator, *, what):
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"{what}: {numerator} is not divisible by {denominator}"
    return quotient


def family_p3_invariants(family):
    t = family.t
    u = family.u
    d = _exact_quotient(t * t + u, 2, what="degree")
    g = 1 + _exact_quotient(
        2 * t ** 3 - 6 * t ** 2 + 3 * u * t + sum(k ** 3 - 6 * k ** 2 for k in family.row_degrees),
        6,
        what="genus",
    )
    return d, g


def family_p3_curve_class(family):
    """
    The invariants as a CurveClass in P^3, so callers can check
    ``is_degenerate`` (the line s = t = 1 is the only case that arises).
    """
    d, g = family_p3_invariants(family)
    return CurveClass(d=d, g=g, r=3)


def linear_family_invariants(s):
    d = _exact_quotient(s * (s + 1), 2, what="degree")
    g = 1 + _exact_quotient(2 * s ** 3 - 3 * s ** 2 - 5 * s, 6, what="genus")
    return d, g


def uniform_family_invariants(s, t):
    d = _exact_quotient(s * (s + 1) * t * t, 2, what="degree")
    g = (
        1
        + _exact_quotient(s * (s + 1) * (2 * s + 1), 6, what="genus") * t ** 3
        - s * (s + 1) * t * t
    )
    return d, g


def family_p3_uniform_dimension(s, t):
    """
    Dimension s(s+1)(t^3 + 6t^2 + 11t - 6)/6 of the component of the
    Hilbert scheme containing the uniform family.  It equals 4d exactly
    when t <= 3.
    """
    if s < 1 or t < 1:
        raise PreconditionFailed(f"Uniform family needs s, t >= 1, got s={s}, t={t}")
    return _exact_quotient(
        s * (s + 1) * (t ** 3 + 6 * t ** 2 + 11 * t - 6), 6, what="dimension"
    )


def family_q_invariants(family):
    """
    Returns (d, g, dim) for the t x (t+1) linear determinantal family on
    the quadric threefold; the family has the expected dimension 3d.
    """
    t = family.t
    d = t * (t + 1)
    g = _exact_quotient(4 * t ** 3 - 3 * t ** 2 - 7 * t + 6, 6, what="genus")
    return d, g, 3 * d


def uniform_ratio_bound(s):
    return Fraction(2, 9) * (4 + Fraction(1, s * s + s))


def mixed_ratio_bound(alpha):
    """
    (8/9)(1 + 2 alpha)^2 / (1 + alpha)^3, where alpha = u / t^2.
    """
    alpha = Fraction(alpha)
    return Fraction(8, 9) * (1 + 2 * alpha) ** 2 / (1 + alpha) ** 3


MIXED_RATIO_SUPREMUM = mixed_ratio_bound(Fraction(1, 2))


def mixed_genus_inequality(family):
    """
    6(g - 1) < 2t^3 + 4ut, the genus estimate that feeds the mixed ratio bound.
    """
    _, g = family_p3_invariants(family)
    return 6 * (g - 1) < 2 * family.t ** 3 + 4 * family.u * family.t


def ratio_analysis(family):
    d, g = family_p3_invariants(family)
    if g < 0:
        raise PreconditionFailed(f"Ratio analysis needs g >= 0, got g={g}")

    alpha = family.alpha
    return RatioAnalysis(
        ratio=Fraction(g * g, d ** 3),
        alpha=alpha,
        mixed_bound=mixed_ratio_bound(alpha),
        uniform_bound=uniform_ratio_bound(family.s) if family.is_uniform else None,
    )


def search_family_p3(d, g, *, max_s=8, max_k=8):
    """
    Every row-degree multiset with at most ``max_s`` rows, each of degree at
    most ``max_k``, whose family has degree d and genus g.

    Results are in order of s, then lexicographic in the (sorted) rows.
    """
    if max_s < 1 or max_k < 1:
        raise PreconditionFailed(
            f"Search bounds must be >= 1, got max_s={max_s}, max_k={max_k}"
        )

    matches = []
    for s in range(1, max_s + 1):
        # The all-ones rows give the smallest degree for this s.
        if s * (s + 1) // 2 > d:
            break

        for rows in itertools.combinations_with_replacement(range(1, max_k + 1), s):
            t = sum(rows)
            if (t * t + sum(k * k for k in rows)) != 2 * d:
                continue

            family = FamilyP3(rows)
            if family_p3_invariants(family) == (d, g):
                matches.append(family)

    return matches
