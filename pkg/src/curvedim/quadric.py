"""
Curves on the smooth quadric threefold Q in P^4.

Two questions, from opposite ends of the genus range:

*   For large g, a curve lies on a surface cut out by Q and a hypersurface
    of degree k, and moving it there gives a family of dimension
    3d + g - kd - 1 > 3d.  ``gb_witness`` finds such a k.

*   For small g, start from the determinantal curves of degree t(t+1) and
    genus L(t), then add rational normal cubics (genus +0..+3) and lines
    (genus +0) and smooth.  ``coverage_report`` tracks which genera this
    reaches with a component of the expected dimension 3d.
"""

from .bounds import chi_normal_quadric
from .exceptions import NoWitness, PreconditionFailed
from .iterators import merge_intervals
from .models import CoverageReport, CoverageRow, GBWitness

# (degree step, genus step) of each smoothing move.  Attaching a rational
# normal cubic at delta <= 4 points adds delta - 1 to the genus.
CUBIC_MOVES = tuple((3, delta - 1) for delta in range(1, 5))
LINE_MOVE = (1, 0)


def _check_witness_domain(d, g=0):
    if d < 3:
        raise PreconditionFailed(f"Quadric bounds need d >= 3, got d={d}")
    if g < 0:
        raise PreconditionFailed(f"Genus must be non-negative, got g={g}")


def _k_range(d):
    # All k >= 1 with d > 2k(k-1).
    k = 1
    while d > 2 * k * (k - 1):
        yield k
        k += 1


def gb_bound(d, g, k):
    return 3 * d + g - k * d - 1


def gb_is_valid(d, g, k):
    return (
        d > 2 * k * (k - 1)
        and 4 * k * g > d * d + 2 * k * k * d
        and gb_bound(d, g, k) > chi_normal_quadric(d)
    )


def gb_witness(d, g):
    """
    The valid k giving the largest bound 3d + g - kd - 1.  The bound falls
    as k grows, so this is the smallest valid k.
    """
    _check_witness_domain(d, g)

    for k in _k_range(d):
        if gb_is_valid(d, g, k):
            return GBWitness(d=d, g=g, k=k, bound=gb_bound(d, g, k))

    raise NoWitness(f"No k gives a curve of degree {d} and genus {g} on Q more than 3d moduli")


def gb_threshold(d):
    """
    The smallest g for which ``gb_witness(d, g)`` succeeds.

    For each k that is allowed at all, the genus conditions are
    g > (d^2 + 2k^2 d) / 4k and g >= kd + 2.
    """
    _check_witness_domain(d)

    return min(
        max((d * d + 2 * k * k * d) // (4 * k) + 1, k * d + 2)
        for k in _k_range(d)
    )


def L(t):
    """
    Genus (4t^3 - 3t^2 - 7t + 6)/6 of the t x (t+1) determinantal curve on Q.
    """
    numerator = 4 * t ** 3 - 3 * t ** 2 - 7 * t + 6
    assert numerator % 6 == 0, f"L({t}) is not an integer: {numerator}/6"
    return numerator // 6


def R(d, t):
    """
    Largest genus claimed from the base curve of type t, keeping two
    degrees back for line moves.
    """
    return L(t) + d - t * (t + 1) - 2


def stitches(d, t):
    return L(t + 2) <= R(d, t)


def stitches_closed_form(d, t):
    # L(t+2) - L(t) = 4t^2 + 6t + 1
    return d >= 5 * t * t + 7 * t + 3


def smoothing_reach(base_d, base_g, target_d):
    """
    The genera reachable at degree ``target_d`` from (base_d, base_g), as
    a closed interval (lo, hi).  Each cubic move adds up to 3 to the genus,
    so the most cubic moves wins.
    """
    if target_d < base_d:
        raise PreconditionFailed(
            f"Smoothing moves only raise the degree: {base_d} -> {target_d}"
        )
    cubic_moves = (target_d - base_d) // 3
    return base_g, base_g + 3 * cubic_moves


def reachable_genera(base_d, base_g, target_d):
    """
    Every genus reachable at ``target_d`` by applying CUBIC_MOVES and
    LINE_MOVE one at a time.  Slow; this is the check on ``smoothing_reach``.
    """
    if target_d < base_d:
        raise PreconditionFailed(
            f"Smoothing moves only raise the degree: {base_d} -> {target_d}"
        )

    moves = CUBIC_MOVES + (LINE_MOVE,)
    reached = {base_d: {base_g}}
    for degree in range(base_d, target_d):
        for genus in reached.get(degree, ()):
            for degree_step, genus_step in moves:
                if degree + degree_step <= target_d:
                    reached.setdefault(degree + degree_step, set()).add(genus + genus_step)

    return sorted(reached.get(target_d, ()))


def admissible_ts(d):
    """
    The t >= 2 with t(t+1) divisible by 3 and t(t+1) <= d.
    """
    ts = []
    t = 2
    while t * (t + 1) <= d:
        if t % 3 in (0, 2):
            ts.append(t)
        t += 1
    return ts


def coverage_report(d):
    if d < 2:
        raise PreconditionFailed(f"Coverage needs d >= 2, got d={d}")

    ts = admissible_ts(d)
    rows = [CoverageRow(t=t, L=L(t), R=R(d, t), stitched=stitches(d, t)) for t in ts]

    closure = merge_intervals(
        smoothing_reach(t * (t + 1), L(t), d) for t in ts
    )

    if not rows:
        return CoverageReport(d=d, per_t=[], paper_max_g=None, closure_intervals=closure)

    # Walk the chain t = 2, 3, 5, 6, ... until the first t whose interval
    # does not reach L(t + 2).
    chain_end = rows[-1]
    for row in rows:
        if not row.stitched:
            chain_end = row
            break

    return CoverageReport(
        d=d,
        per_t=rows,
        paper_max_g=chain_end.R,
        closure_intervals=closure,
        chain_start_t=rows[0].t,
        chain_end_t=chain_end.t,
    )


def coverage_document(report):
    return {
        "d": report.d,
        "chain_start_t": report.chain_start_t,
        "chain_end_t": report.chain_end_t,
        "paper_max_g": report.paper_max_g,
        "closure_max_contiguous_g": report.closure_max_contiguous_g,
        "closure_intervals": [list(interval) for interval in report.closure_intervals],
        "per_t": [
            {"t": row.t, "L": row.L, "R": row.R, "stitched": row.stitched}
            for row in report.per_t
        ],
    }
