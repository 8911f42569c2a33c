"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; generic misuse raises ValueError/TypeError as usual.
"""


class CoHiggsError(Exception):
    """Base class for all package-specific errors."""


class ContainmentViolation(CoHiggsError):
    """A vector expected to lie in a given span does not."""


class GradingMismatch(CoHiggsError):
    """Operands live in incompatible graded pieces."""


class NonHomogeneous(CoHiggsError):
    """A polynomial mixes two different degrees."""

    def __init__(self, degree_a, degree_b):
        self.degree_a = degree_a
        self.degree_b = degree_b
        super().__init__(f"mixed degrees {degree_a} and {degree_b}")


class ParseError(CoHiggsError):
    """Polynomial literal rejected; carries the offending position."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class RankUnsupported(CoHiggsError):
    """Chern-class operation applied outside rank 2."""


class IntegralityError(CoHiggsError):
    """A Riemann-Roch value came out non-integral (inconsistent input)."""


class InconsistentData(CoHiggsError):
    """No exact assignment satisfies the long exact sequence."""


class ChaseUnresolved(CoHiggsError):
    """A dimension chase returned an interval where an exact value was required."""


class ZeroSection(CoHiggsError):
    """An operation that needs a nonzero section received zero."""


class ZeroConic(CoHiggsError):
    """Conic classification applied to the zero polynomial."""


class NotIntegrable(CoHiggsError):
    """Higgs field fails the wedge-square vanishing condition."""


class NotStable(CoHiggsError):
    """Higgs field fails the stability check."""


class NotSimpleTensor(CoHiggsError):
    """Coefficient table has rank > 1 where a simple tensor is required."""


class DomainError(CoHiggsError):
    """Parameter outside the stated domain (e.g. k < 3)."""


class RankExceedsSource(CoHiggsError):
    """A differential was assigned rank larger than its source dimension."""


class RouteDisagreement(CoHiggsError):
    """Two computation routes disagree on a value that must match exactly."""

    def __init__(self, message, ledger=()):
        self.ledger = list(ledger)
        super().__init__(message)
