"""
Non-rigidity certificates for curves in P^4.

A smooth curve C of degree d and genus g in P^4 is not rigid once we find
integers k <= l such that

    1.  C lies on a threefold F of degree a <= k, because its image under
        the k-th Veronese embedding in P^N, N = C(k+4, 4) - 1, is either
        degenerate (dk < N) or has genus above pi(dk, N);
    2.  C lies on a second threefold G of degree b <= l, not containing F,
        by the same argument in P^M, M = C(l+4, 4) - C(l-a+4, 4) - 1;
    3.  d > kl(k+l-2)/2, so C avoids the singular locus of S = F n G;
    4.  5d + g - 1 - (k+l)d > 24 = dim PGL(5), so C moves on S in a family
        bigger than the projective linear group.

The worst case a = k, b = l is used for the last two checks.
"""

import math

from .bounds import castelnuovo_pi, sing_locus_bound_ci_p4
from .exactpoly import binomial
from .exceptions import NoCertificate, NoThreshold, OutOfRange, PreconditionFailed
from .models import RigidityCertificate, RigidityChecks

PGL5_DIMENSION = 24

DEFAULT_MIN_CAP = 200


def veronese_N(k):
    return binomial(k + 4, 4) - 1


def second_M(l, a):
    return binomial(l + 4, 4) - binomial(l - a + 4, 4) - 1


def default_cap(d):
    """
    max(200, 4 * ceil(d^(1/4)) + 16), computed with integer roots.
    """
    root = math.isqrt(math.isqrt(d))
    if root ** 4 < d:
        root += 1
    return max(DEFAULT_MIN_CAP, 4 * root + 16)


def _forces_containment(d, g, degree, ambient_dim):
    # The image of C has degree d * degree in P^ambient_dim.
    image_degree = d * degree
    if image_degree < ambient_dim:
        return True
    return g > castelnuovo_pi(image_degree, ambient_dim)


def find_first_threefold(d, g, k_cap):
    """
    The smallest k <= k_cap that forces C onto a threefold of degree <= k.
    """
    if d < 5:
        raise PreconditionFailed(f"Rigidity search needs d >= 5, got d={d}")
    if g < 0:
        raise PreconditionFailed(f"Genus must be non-negative, got g={g}")
    if k_cap < 1:
        raise PreconditionFailed(f"k_cap must be >= 1, got {k_cap}")

    for k in range(1, k_cap + 1):
        if _forces_containment(d, g, k, veronese_N(k)):
            return k

    raise NoCertificate(
        f"No k <= {k_cap} puts a curve of degree {d} and genus {g} on a threefold",
        failed_check="first_threefold",
    )


def find_second_threefold(d, g, a, l_cap):
    """
    The smallest l with a <= l <= l_cap that forces C onto a second
    threefold, given the first has degree a.
    """
    if a < 1:
        raise PreconditionFailed(f"The first threefold has degree >= 1, got a={a}")
    if l_cap < a:
        raise PreconditionFailed(f"l_cap must be >= a, got l_cap={l_cap}, a={a}")

    for l in range(a, l_cap + 1):
        if _forces_containment(d, g, l, second_M(l, a)):
            return l

    raise NoCertificate(
        f"No l in [{a}, {l_cap}] puts a curve of degree {d} and genus {g} on a second threefold",
        failed_check="second_threefold",
        k=a,
    )


def deformation_bound(d, g, k, l):
    return 5 * d + g - 1 - (k + l) * d


def rigidity_certificate(d, g, *, k_cap=None, l_cap=None):
    if d < 5:
        raise PreconditionFailed(f"Rigidity search needs d >= 5, got d={d}")
    if g < 0:
        raise PreconditionFailed(f"Genus must be non-negative, got g={g}")

    pi = castelnuovo_pi(d, 4)
    if g > pi:
        raise OutOfRange(d=d, g=g, r=4, pi=pi)

    if k_cap is None:
        k_cap = default_cap(d)
    if l_cap is None:
        l_cap = default_cap(d)

    k = find_first_threefold(d, g, k_cap)
    if l_cap < k:
        raise NoCertificate(
            f"l_cap={l_cap} is below k={k}", failed_check="second_threefold", k=k
        )
    l = find_second_threefold(d, g, a=k, l_cap=l_cap)

    N = veronese_N(k)
    M = second_M(l, k)
    bezout_rhs = sing_locus_bound_ci_p4(k, l)
    bound = deformation_bound(d, g, k, l)

    if not d > bezout_rhs:
        raise NoCertificate(
            f"Bezout check fails at k={k}, l={l}: d={d} <= {bezout_rhs}",
            failed_check="bezout", k=k, l=l,
        )
    if not bound > PGL5_DIMENSION:
        raise NoCertificate(
            f"Deformation check fails at k={k}, l={l}: 5d+g-1-(k+l)d = {bound} <= {PGL5_DIMENSION}",
            failed_check="deformation", k=k, l=l,
        )

    cert = RigidityCertificate(
        d=d, g=g, k=k, l=l, N=N, M=M,
        worst_case_a=k,
        worst_case_b=l,
        bezout_rhs=bezout_rhs,
        deformation_bound=bound,
        checks=RigidityChecks(
            first_threefold=True,
            second_threefold=True,
            bezout=True,
            deformation=True,
        ),
        k_from_veronese_degeneracy=d * k < N,
        l_from_veronese_degeneracy=d * l < M,
    )

    checks = verify_certificate(cert)
    assert checks.all_passed, f"Certificate for d={d}, g={g} failed re-verification: {checks}"

    return cert


def certificate_document(cert):
    """
    The certificate as a dict with a stable key order, ready for JSON.
    """
    return {
        "d": cert.d,
        "g": cert.g,
        "k": cert.k,
        "l": cert.l,
        "N": cert.N,
        "M": cert.M,
        "worst_case_a": cert.worst_case_a,
        "worst_case_b": cert.worst_case_b,
        "bezout_lhs": cert.bezout_lhs,
        "bezout_rhs": cert.bezout_rhs,
        "deformation_bound": cert.deformation_bound,
        "pgl5": PGL5_DIMENSION,
        "verdict": "not rigid" if cert.checks.all_passed else "unverified",
        "k_from_veronese_degeneracy": cert.k_from_veronese_degeneracy,
        "l_from_veronese_degeneracy": cert.l_from_veronese_degeneracy,
    }


def _castelnuovo_by_sum(d, r):
    # pi(d, r) = sum over i >= 1 of max(0, d - 1 - i(r - 1)), summed in closed form.
    m = (d - 1) // (r - 1)
    return m * (d - 1) - (r - 1) * m * (m + 1) // 2


def _contains(d, g, degree, ambient_dim):
    image_degree = d * degree
    return image_degree < ambient_dim or g > _castelnuovo_by_sum(image_degree, ambient_dim)


def verify_certificate_document(doc):
    """
    Recomputes all four checks from the integers d, g, k, l in ``doc``.
    A check also fails if a derived value stored in ``doc`` disagrees with
    the recomputed one.
    """
    d, g, k, l = (int(doc[key]) for key in ("d", "g", "k", "l"))

    N = math.comb(k + 4, 4) - 1
    if k > l:
        return RigidityChecks(first_threefold=False, second_threefold=False, bezout=False, deformation=False)

    M = math.comb(l + 4, 4) - math.comb(l - k + 4, 4) - 1
    twice_bezout_rhs = k * l * (k + l - 2)
    bound = (5 - k - l) * d + g - 1

    return RigidityChecks(
        first_threefold=doc.get("N") == N and _contains(d, g, k, N),
        second_threefold=(
            doc.get("M") == M and _contains(d, g, l, M)
        ),
        bezout=(
            doc.get("bezout_lhs", d) == d
            and 2 * doc.get("bezout_rhs", -1) == twice_bezout_rhs
            and 2 * d > twice_bezout_rhs
        ),
        deformation=(
            doc.get("deformation_bound") == bound
            and doc.get("pgl5", PGL5_DIMENSION) == PGL5_DIMENSION
            and bound > PGL5_DIMENSION
        ),
    )


def verify_certificate(cert):
    return verify_certificate_document(certificate_document(cert))


def _is_certified(d, g, *, k_cap, l_cap):
    try:
        rigidity_certificate(d, g, k_cap=k_cap, l_cap=l_cap)
    except NoCertificate:
        return False
    else:
        return True


MONOTONICITY_SAMPLES = 8


def rigidity_threshold(d, *, k_cap=None, l_cap=None):
    """
    The smallest genus g <= pi(d, 4) for which ``rigidity_certificate``
    succeeds, found by binary search over g.

    Every check in the chain gets easier as g grows, so success is monotone
    in g; we check this on a sample of genera either side of the answer.
    """
    if d < 5:
        raise PreconditionFailed(f"Rigidity search needs d >= 5, got d={d}")

    def certified(g):
        return _is_certified(d, g, k_cap=k_cap, l_cap=l_cap)

    pi = castelnuovo_pi(d, 4)
    if not certified(pi):
        raise NoThreshold(f"No genus g <= pi({d},4)={pi} has a non-rigidity certificate")

    # Invariant: certified(hi) and (lo < 0 or not certified(lo)).
    lo, hi = -1, pi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if certified(mid):
            hi = mid
        else:
            lo = mid

    g_star = hi
    assert g_star == 0 or not certified(g_star - 1), (
        f"Threshold {g_star} for d={d} is not minimal"
    )

    for i in range(1, MONOTONICITY_SAMPLES + 1):
        above = g_star + (pi - g_star) * i // MONOTONICITY_SAMPLES
        below = g_star - 1 - (g_star - 1) * (i - 1) // MONOTONICITY_SAMPLES
        assert certified(above), f"Certificates not monotone in g for d={d}: {above} fails"
        if below >= 0:
            assert not certified(below), f"Certificates not monotone in g for d={d}: {below} passes"

    return g_star
