"""
Exact arithmetic underneath every other module.

Polynomial arithmetic is done by sympy over QQ; coefficients come back
out as ``fractions.Fraction`` values.  Every comparison that involves a
square root is decided by squaring integers, so nothing that ends up in
a certified bound ever passes through a float.
"""

import functools
import math
from fractions import Fraction

import attr
import sympy
from sympy import QQ

from .exceptions import DomainError

VARIABLE = "k"

_K = sympy.symbols(VARIABLE)


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _to_rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _normalise_coefficients(values):
    coefficients = [Fraction(v) for v in values]
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@attr.s(frozen=True, repr=False)
class RationalPolynomial:
    """
    A polynomial in one variable with exact rational coefficients.

    ``coefficients[i]`` is the coefficient of k^i.  Trailing zeros are
    stripped on construction, so two polynomials are equal exactly when
    they have the same coefficients.
    """
    coefficients = attr.ib(factory=tuple, converter=_normalise_coefficients)

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def monomial(cls, power, coefficient=1):
        return cls([0] * power + [coefficient])

    @classmethod
    def from_sympy(cls, poly):
        # all_coeffs() runs from the leading term down
        return cls([_to_fraction(c) for c in reversed(poly.all_coeffs())])

    def to_sympy(self):
        if self.is_zero:
            return sympy.Poly(0, _K, domain=QQ)
        return sympy.Poly.from_list(
            [_to_rational(c) for c in reversed(self.coefficients)], _K, domain=QQ
        )

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def degree(self):
        """
        Index of the last nonzero coefficient, or None for the zero polynomial.
        """
        if self.is_zero:
            return None
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        if self.is_zero:
            return Fraction(0)
        return self.coefficients[-1]

    def coefficient(self, power):
        try:
            return self.coefficients[power]
        except IndexError:
            return Fraction(0)

    def __add__(self, other):
        return poly_add(self, _as_polynomial(other))

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        return poly_add(self, -_as_polynomial(other))

    def __rsub__(self, other):
        return poly_add(_as_polynomial(other), -self)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __call__(self, x):
        return poly_eval(self, x)

    def shift(self, offset):
        """
        Returns the polynomial p(k + offset).
        """
        return RationalPolynomial.from_sympy(self.to_sympy().shift(offset))

    def __repr__(self):
        return f"RationalPolynomial({self})"

    def __str__(self):
        if self.is_zero:
            return "0"

        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue

            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)

            if power == 0:
                body = str(magnitude)
            else:
                monomial = VARIABLE if power == 1 else f"{VARIABLE}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"

            terms.append((sign, body))

        first_sign, first_body = terms[0]
        rendered = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            rendered += f" {sign} {body}"
        return rendered


def _as_polynomial(value):
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial.constant(value)


def poly_add(p, q):
    return RationalPolynomial.from_sympy(p.to_sympy() + q.to_sympy())


def poly_scale(p, c):
    return RationalPolynomial.from_sympy(p.to_sympy() * sympy.Poly(_to_rational(c), _K, domain=QQ))


def poly_mul(p, q):
    return RationalPolynomial.from_sympy(p.to_sympy() * q.to_sympy())


def poly_eval(p, x):
    """
    Evaluates ``p`` at ``x``; exact for int/Fraction ``x``.
    """
    return _to_fraction(p.to_sympy().eval(_to_rational(x)))


@functools.lru_cache(maxsize=None)
def binomial_poly(offset, n):
    """
    Returns C(k + offset, n) expanded as a polynomial in k, i.e. the
    falling factorial

        (k + offset)(k + offset - 1)...(k + offset - n + 1) / n!

    Being a polynomial it carries the falling-factorial extension to
    negative arguments for free, which is what Euler characteristics of
    negative twists need.
    """
    if n < 0:
        raise DomainError(f"binomial_poly needs n >= 0, got n={n}")

    falling = sympy.ff(_K + offset, n) / sympy.factorial(n)
    return RationalPolynomial.from_sympy(sympy.Poly(falling, _K, domain=QQ))


def binomial(n, k):
    """
    Integer binomial coefficient C(n, k) for any integer n and k >= 0.

    Negative ``n`` uses C(n, k) = (-1)^k * C(k - n - 1, k), which agrees
    with evaluating ``binomial_poly`` at a negative argument.
    """
    if k < 0:
        raise DomainError(f"binomial needs k >= 0, got k={k}")
    if n < 0:
        return (-1) ** k * math.comb(k - n - 1, k)
    return math.comb(n, k)




def _denominator_is_positive(b, c):
    # b + sqrt(c) > 0
    if b > 0:
        return True
    return c > b * b


def _scaled_denominator_at_most(q, a, b, c):
    """
    Decides q * (b + sqrt(c)) <= a using integers only.
    """
    rest = a - q * b  # compare q*sqrt(c) with rest
    if q >= 0:
        if rest < 0:
            return False
        return q * q * c <= rest * rest
    else:
        if rest >= 0:
            return True
        # q*sqrt(c) <= rest < 0  <=>  |q|*sqrt(c) >= |rest|
        return q * q * c >= rest * rest


def floor_sqrt_expr(a, b, c):
    """
    Returns floor(a / (b + sqrt(c))) exactly.

    The answer is the largest integer q with q * (b + sqrt(c)) <= a.  We
    start from the integer square root of c, which pins q down to within
    a step or two, then gallop and bisect on the exact predicate.
    """
    if c < 0:
        raise DomainError(f"floor_sqrt_expr needs c >= 0, got c={c}")
    if not _denominator_is_positive(b, c):
        raise DomainError(f"floor_sqrt_expr needs b + sqrt(c) > 0, got b={b}, c={c}")

    def fits(q):
        return _scaled_denominator_at_most(q, a, b, c)

    root = math.isqrt(c)

    # root <= sqrt(c) < root + 1, and b + root + 1 > 0 because b + sqrt(c) > 0.
    q = a // (b + root + 1)

    step = 1
    if fits(q):
        while fits(q + step):
            q += step
            step *= 2
        lo, hi = q, q + step
    else:
        while not fits(q - step):
            q -= step
            step *= 2
        lo, hi = q - step, q

    # Invariant: fits(lo) and not fits(hi).
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid

    return lo
