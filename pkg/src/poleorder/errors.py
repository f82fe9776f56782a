"""Exceptions raised when an input falls outside the supported setting."""


class AnalysisError(Exception):
    """Base class; ``exit_code`` is what the command line returns."""

    exit_code = 1


class DomainError(AnalysisError):
    """Fewer than three variables, f(0) != 0, or no singular point at 0."""

    exit_code = 6


class NonIsolated(AnalysisError):
    exit_code = 2


class NotQuasiHomogeneous(AnalysisError):
    exit_code = 3


class MultipleOrNonIsolatedSingularities(AnalysisError):
    exit_code = 2


class GenericAgreementViolated(AnalysisError):
    exit_code = 1


class NotStabilized(AnalysisError):
    """Oracle cokernel dimension still changes when the pole cap grows."""

    exit_code = 5


class ParseError(AnalysisError):
    exit_code = 4

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.reason = message
