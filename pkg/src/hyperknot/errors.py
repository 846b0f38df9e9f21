"""Exception hierarchy shared by all modules."""


class HyperknotError(ValueError):
    """Base class for every input or contract error raised by the package."""


class NotPrime(HyperknotError):
    pass


class NotMonic(HyperknotError):
    pass


class DegreeZero(HyperknotError):
    pass


class TNotInvertible(HyperknotError):
    pass


class SpecMismatch(HyperknotError):
    pass


class NotInvertible(HyperknotError, ZeroDivisionError):
    pass


class MalformedTable(HyperknotError):
    pass


class AxiomViolation(HyperknotError):
    def __init__(self, report):
        super().__init__(f"quandle axioms violated: {report.summary()}")
        self.report = report


class ParseError(HyperknotError):
    pass


class IndexOutOfRange(HyperknotError):
    pass


class BadParameters(HyperknotError):
    pass


class CapExceeded(HyperknotError):
    pass


class LengthMismatch(HyperknotError):
    pass


class BadColorIndex(HyperknotError):
    pass


class SearchSpaceTooLarge(HyperknotError):
    pass


class ShapeMismatch(HyperknotError):
    pass


class CocycleViolation(HyperknotError):
    pass


class TooLarge(HyperknotError):
    pass


class ZeroCrossings(HyperknotError):
    pass


class InsufficientRows(HyperknotError):
    pass


class PeriodicityMismatch(HyperknotError):
    """Raised when StateSum(n + P) != StateSum(n); signals an implementation bug."""
