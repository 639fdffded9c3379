"""Exception hierarchy shared by all engines.

The CLI maps DomainError to exit code 2, SearchBudgetExceeded to 3 and
VerificationFailure to 4. InvariantViolation signals an internal bug.
"""


class RefinedFloorError(Exception):
    """Base class for every error raised by the engines."""


# ─── Domain errors (bad input, outside the supported scope) ───

class DomainError(RefinedFloorError, ValueError):
    """Input is outside the domain an operation accepts."""


class NotConvex(DomainError):
    pass


class NotLattice(DomainError):
    pass


class Degenerate(DomainError):
    pass


class NotHTransverse(DomainError):
    pass


class NotUnimodular(DomainError):
    pass


class CornerMismatch(DomainError):
    pass


class CutTooLarge(DomainError):
    pass


class ZeroPolynomial(DomainError):
    pass


class HalfIntegerExponent(DomainError):
    pass


class BadKind(DomainError):
    pass


class SumMismatch(DomainError):
    pass


class ConstantTermNotOne(DomainError):
    pass


class MissingVariable(DomainError):
    pass


class ConfigurationMismatch(DomainError):
    """A diagram operation was requested on a configuration it does not apply to."""


class InvalidPairing(DomainError):
    pass


class MalformedPolygon(DomainError):
    """Polygon JSON that is neither a list of pairs nor an object with "vertices"."""


# ─── Budget ───

class SearchBudgetExceeded(RefinedFloorError):
    """An enumeration visited more nodes than the configured budget."""

    def __init__(self, visited: int, budget: int, engine: str = "enumeration"):
        self.visited = visited
        self.budget = budget
        self.engine = engine
        super().__init__(f"{engine} exceeded node budget ({visited} > {budget})")


# ─── Internal consistency ───

class InvariantViolation(RefinedFloorError, AssertionError):
    """An internal invariant failed; this is a bug, never a user error."""


class InexactDivision(InvariantViolation):
    pass


class NegativeCodegree(InvariantViolation):
    pass


class NonIntegerResult(InvariantViolation):
    pass


class VerificationFailure(RefinedFloorError):
    """Two independent computations disagree while the theory says they must agree."""
