"""Exception types shared across the package."""


class EliError(Exception):
    """Base class for all package errors."""


class ParameterError(EliError):
    """An argument is outside its documented domain."""


class ParseError(EliError):
    """A file could not be parsed; message names the offending line."""


class InfeasibleWeightsError(EliError):
    """A required estimator cell has no participants."""


class IllPosedError(EliError):
    """The Gram matrix of a linear-model scheme is numerically singular."""


class ModelDomainError(EliError):
    """A variance model evaluated to a negative variance."""


class IdentificationError(EliError):
    """Pilot data cannot identify a requested model direction."""


class InfeasibilityError(EliError):
    """A design program has an empty feasible region."""


class DegenerateVarianceError(EliError):
    """A confidence interval was requested with non-positive variance."""


class DegenerateAssignmentError(EliError):
    """Too many posterior completions make the assignment infeasible."""


class UnsupportedSchemeError(EliError):
    """An exporter or solver does not cover this weight-scheme kind."""
