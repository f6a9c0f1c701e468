"""
Hilbert polynomials, degree and genus from graded free resolutions.

This is the independent check on every closed-form family formula: we
only ever add up Euler characteristics of twisted structure sheaves, so
a wrong closed form cannot hide behind the same algebra that produced it.
"""

import itertools
import re

from .exactpoly import RationalPolynomial, binomial_poly
from .exceptions import NonIntegralInvariants, NotACurve, ResolutionFormatError
from .models import Ambient, CurveClass, GradedResolution

P3 = Ambient.projective_space(3)
P4 = Ambient.projective_space(4)
Q = Ambient.quadric_threefold()


def ambient_chi(ambient):
    """
    Returns chi(O(k)) as a polynomial in k.

    For P^n this is C(k+n, n).  For the quadric threefold Q, the sequence
    0 -> O_P4(k-2) -> O_P4(k) -> O_Q(k) -> 0 gives C(k+4, 4) - C(k+2, 4).
    """
    if ambient.is_quadric:
        return binomial_poly(4, 4) - binomial_poly(2, 4)
    return binomial_poly(ambient.n, ambient.n)


def ideal_hilbert_poly(res):
    """
    chi(I(k)) = sum_i (-1)^i sum_{(rank, twist) in E_i} rank * chi(O(k + twist))
    """
    chi = ambient_chi(res.ambient)
    total = RationalPolynomial()
    for i, level in enumerate(res.terms):
        sign = (-1) ** i
        for rank, twist in level:
            total = total + chi.shift(twist) * (sign * rank)
    return total


def curve_hilbert_poly(res):
    return ambient_chi(res.ambient) - ideal_hilbert_poly(res)


def curve_class_from_resolution(res):
    """
    Reads (d, g) off the Hilbert polynomial dk + 1 - g of the resolved curve.
    """
    hilbert = curve_hilbert_poly(res)

    if hilbert.degree != 1:
        raise NotACurve(
            f"Hilbert polynomial {hilbert} has degree {hilbert.degree}, expected 1"
        )

    d = hilbert.leading_coefficient
    g = 1 - hilbert.coefficient(0)

    if d.denominator != 1 or g.denominator != 1:
        raise NonIntegralInvariants(
            f"Hilbert polynomial {hilbert} gives d={d}, g={g}"
        )
    if d < 1:
        raise NotACurve(f"Hilbert polynomial {hilbert} has non-positive degree {d}")

    return CurveClass(d=int(d), g=int(g), r=res.ambient.r)


def linear_determinantal_resolution(s):
    """
    0 -> O(-s-1)^s -> O(-s)^(s+1) -> I_C -> 0 on P^3.
    """
    return GradedResolution(P3, [[(s + 1, -s)], [(s, -s - 1)]])


def uniform_determinantal_resolution(s, t):
    """
    0 -> O(-t-ts)^s -> O(-ts)^(s+1) -> I_C -> 0 on P^3.
    """
    return GradedResolution(P3, [[(s + 1, -t * s)], [(s, -t - t * s)]])


def mixed_determinantal_resolution(row_degrees):
    """
    0 -> sum_i O(-t-k_i) -> O(-t)^(s+1) -> I_C -> 0 on P^3, t = sum k_i.

    Equal twists are collected into a single (rank, twist) pair.
    """
    row_degrees = sorted(row_degrees)
    s = len(row_degrees)
    t = sum(row_degrees)
    syzygies = [
        (len(list(group)), -t - k)
        for k, group in itertools.groupby(row_degrees)
    ]
    return GradedResolution(P3, [[(s + 1, -t)], syzygies])


def quadric_determinantal_resolution(t):
    """
    0 -> O_Q(-t-1)^t -> O_Q(-t)^(t+1) -> I_{C/Q} -> 0.
    """
    return GradedResolution(Q, [[(t + 1, -t)], [(t, -t - 1)]])


def complete_intersection_resolution(ambient, degrees):
    """
    The Koszul resolution of a complete intersection of hypersurfaces of
    the given degrees: E_i is the sum of O(-(d_j0 + ... + d_ji)) over all
    (i+1)-element subsets of the degrees.
    """
    degrees = list(degrees)
    terms = []
    for size in range(1, len(degrees) + 1):
        twists = sorted(
            (-sum(subset) for subset in itertools.combinations(degrees, size)),
            reverse=True,
        )
        terms.append([
            (len(list(group)), twist)
            for twist, group in itertools.groupby(twists)
        ])
    return GradedResolution(ambient, terms)


# -- Text format ------------------------------------------------------------
#
#     # a twisted cubic
#     ambient P3
#     level 0: 3 x -2
#     level 1: 2 x -3
#
# The ambient line comes first; levels are numbered 0, 1, 2, ... in order.

_AMBIENT_RE = re.compile(r"^ambient\s+(?P<name>\S+)$")
_LEVEL_RE = re.compile(r"^level\s+(?P<index>\d+)\s*:\s*(?P<terms>.+)$")
_TERM_RE = re.compile(r"^(?P<rank>[+-]?\d+)\s*x\s*(?P<twist>[+-]?\d+)$")

ALLOWED_AMBIENTS = ("P3", "P4", "Q")


def _parse_terms(text, *, lineno):
    terms = []
    for chunk in text.split(","):
        match = _TERM_RE.match(chunk.strip())
        if match is None:
            raise ResolutionFormatError(
                f"Line {lineno}: cannot parse term {chunk.strip()!r}; expected 'rank x twist'"
            )
        rank = int(match.group("rank"))
        if rank <= 0:
            raise ResolutionFormatError(
                f"Line {lineno}: rank must be positive, got {rank}"
            )
        terms.append((rank, int(match.group("twist"))))
    return terms


def parse_resolution(text):
    ambient = None
    levels = []

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue

        ambient_match = _AMBIENT_RE.match(line)
        if ambient_match is not None:
            if ambient is not None:
                raise ResolutionFormatError(f"Line {lineno}: ambient given twice")
            name = ambient_match.group("name")
            if name not in ALLOWED_AMBIENTS:
                raise ResolutionFormatError(
                    f"Line {lineno}: unknown ambient {name!r}; expected one of {', '.join(ALLOWED_AMBIENTS)}"
                )
            ambient = Ambient.from_name(name)
            continue

        level_match = _LEVEL_RE.match(line)
        if level_match is None:
            raise ResolutionFormatError(f"Line {lineno}: cannot parse {line!r}")
        if ambient is None:
            raise ResolutionFormatError(f"Line {lineno}: level before the ambient line")

        index = int(level_match.group("index"))
        if index != len(levels):
            raise ResolutionFormatError(
                f"Line {lineno}: expected level {len(levels)}, got level {index}"
            )
        levels.append(_parse_terms(level_match.group("terms"), lineno=lineno))

    if ambient is None:
        raise ResolutionFormatError("Missing 'ambient' line")
    if not levels:
        raise ResolutionFormatError("A resolution needs at least one level")

    return GradedResolution(ambient, levels)


def format_resolution(res):
    lines = [f"ambient {res.ambient.name}"]
    for i, level in enumerate(res.terms):
        rendered = ", ".join(f"{rank} x {twist}" for rank, twist in level)
        lines.append(f"level {i}: {rendered}")
    return "\n".join(lines) + "\n"


def read_resolution(path):
    with open(path) as infile:
        return parse_resolution(infile.read())


def hilbert_summary(res):
    """
    The figures the ``resolve`` command reports, keyed in display order.
    """
    hilbert = curve_hilbert_poly(res)
    curve = curve_class_from_resolution(res)
    return {
        "ambient": res.ambient.name,
        "ideal_hilbert_poly": str(ideal_hilbert_poly(res)),
        "hilbert_poly": str(hilbert),
        "d": curve.d,
        "g": curve.g,
        "r": curve.r,
    }
