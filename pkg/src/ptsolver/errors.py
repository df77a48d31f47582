"""Exception hierarchy shared by the solver modules."""


class PTSolverError(Exception):
    """Base class for every error raised by :mod:`ptsolver`."""


class InvalidModel(PTSolverError, ValueError):
    """A model value violates its invariants (costs, probabilities, risk ranges)."""


class AssumptionViolated(PTSolverError):
    """A closed-form solver was called outside the regime it is valid for."""


class PivotOutOfRange(AssumptionViolated):
    """No pivot index exists: every realization lies on one side of c_s/c_l."""


class DegenerateThreshold(AssumptionViolated):
    """The EUT boundary branch would need D / alpha_1 with alpha_1 = 0."""


class NoSignChange(PTSolverError):
    """Root bracketing failed: the function does not change sign on the interval."""


class InputMismatch(PTSolverError):
    """Two results being compared were produced from different inputs."""


class DocumentError(PTSolverError):
    """A scenario or sweep document could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
