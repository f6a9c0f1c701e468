class CurveDimError(Exception):
    pass


class ConfigError(CurveDimError):
    pass


class ResolutionFormatError(ConfigError):
    pass


class DomainError(CurveDimError):
    """
    Raised if an argument lies outside the domain where a formula is defined.
    """

    pass


class PreconditionFailed(DomainError):
    pass


class OutOfRange(CurveDimError):
    """
    Raised if g exceeds the Castelnuovo bound π(d, r), so no smooth
    nondegenerate curve of this degree and genus exists and any bound
    for it would be vacuous.
    """

    def __init__(self, *, d, g, r, pi):
        self.d = d
        self.g = g
        self.r = r
        self.pi = pi
        super().__init__(f"g exceeds π({d},{r})={pi} (got g={g})")


class NoSuchS(CurveDimError):
    pass


class NotACurve(CurveDimError):
    pass


class NonIntegralInvariants(CurveDimError):
    pass


class SearchExhausted(CurveDimError):
    pass


class NoCertificate(SearchExhausted):
    """
    Raised if the rigidity search finds no (k, l) pair.  ``failed_check``
    names the inequality that failed at the best pair tried, if any pair
    was reached at all.
    """

    def __init__(self, message, *, failed_check=None, k=None, l=None):
        self.failed_check = failed_check
        self.k = k
        self.l = l
        super().__init__(message)


class NoWitness(SearchExhausted):
    pass


class NoThreshold(SearchExhausted):
    pass
