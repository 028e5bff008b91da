"""Exception types raised across the package.

Input problems derive from :class:`InputError`; failures that can only mean
a defect in the construction derive from :class:`InternalError`.
"""


class AltPathError(Exception):
    pass


class InputError(AltPathError):
    """The caller handed over something outside the supported hypotheses."""


class InternalError(AltPathError):
    """An existence guarantee was not met; this is a bug, not bad input."""


class DegenerateHull(InputError):
    pass


class HypothesisViolated(InputError):
    pass


class ConditionsViolated(InputError):
    pass


class ApexAtVertex(InputError):
    pass


class PointOnLine(InputError):
    pass


class BracketingViolated(InputError):
    pass


class SweepInfeasible(InputError):
    pass


class InvalidChain(InputError):
    pass


class NotSeparated(InputError):
    pass


class SingleColor(InputError):
    pass


class BudgetExceeded(InputError):
    pass


class ParseError(InputError):
    def __init__(self, reason, line=None, column=None, where=None):
        self.reason = reason
        self.line = line
        self.column = column
        self.where = where
        if line is not None:
            msg = f"line {line}, column {column}: {reason}"
        elif where is not None:
            msg = f"at {where}: {reason}"
        else:
            msg = reason
        super().__init__(msg)


class InvalidInstance(InputError):
    pass


class GenerationFailed(InputError):
    pass


class UnknownId(InputError):
    pass


class AugmentationFailed(InternalError):
    pass


class NoApexFound(InternalError):
    pass


class ConstructionFailed(InternalError):
    """A sub-step produced output that breaks a guaranteed invariant."""
