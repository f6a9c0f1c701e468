import decimal
from fractions import Fraction

DECIMAL_DIGITS = 12


def pprint_rational(value):
    """
    Renders an exact rational as "p/q", or "p" if it is an integer.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pprint_decimal(value, *, digits=DECIMAL_DIGITS):
    """
    A decimal rendering of an exact rational, for people.  Never feed this
    back into a computation.

    Examples:
        1/3 -> 0.333333333333
        256/243 -> 1.05349794239
    """
    value = Fraction(value)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator))


def pprint_sqrt_decimal(value, *, digits=DECIMAL_DIGITS):
    """
    Renders sqrt(value) for a nonnegative rational, e.g. g / d^(3/2) is
    pprint_sqrt_decimal(Fraction(g * g, d ** 3)).
    """
    value = Fraction(value)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        quotient = decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator)
        return str(quotient.sqrt())


def pprint_interval(interval):
    lo, hi = interval
    if lo == hi:
        return f"{{{lo}}}"
    elif hi < lo:
        return "∅"
    else:
        return f"[{lo}, {hi}]"


def pprint_duration(seconds):
    """
    Pretty-prints a duration.

    Examples:
        1m
        2m 3s

    Not meant for durations more than an hour.

    """
    if seconds < 60:
        return f"{seconds}s"
    else:
        minutes = seconds // 60
        seconds %= 60

        if seconds == 0:
            return f"{minutes}m"
        else:
            return f"{minutes}m {seconds}s"
