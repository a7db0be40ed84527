class HblabError(Exception):
    """Base class for every error raised by hblab."""


class UsageError(HblabError):
    """Unknown suite, target or parameter, or an unreadable config file."""


class DomainError(HblabError, ValueError):
    pass


class SkippableError(HblabError):
    """A pointwise failure that a supremum scan may record and skip."""


class BranchPointError(SkippableError):
    """A logarithm or quotient met a zero (h'(z) = 0, or a_0 = 0 in log_series)."""


class SingularityError(SkippableError):
    """A formula needing |omega| < 1 met |omega| >= 1."""


class EvaluationError(HblabError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class NotSelfMapError(HblabError):
    pass


class NotSensePreservingError(HblabError):
    pass


class HypothesisError(HblabError):
    """The hypotheses of a theorem do not hold for the given input."""


class ContractError(HblabError):
    pass


class EmptyScanError(HblabError):
    pass


class ScanAbortedError(HblabError):
    pass
