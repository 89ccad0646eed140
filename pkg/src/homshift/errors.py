"""Exception hierarchy shared by every module.

The CLI maps each class to a fixed exit code, so callers can distinguish a
bad input file from a budget overrun without parsing messages.
"""


class HomShiftError(Exception):
    exit_code = 1
    kind = "error"


class GraphParseError(HomShiftError):
    exit_code = 3
    kind = "parse"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(HomShiftError, ValueError):
    """Input violates an operation's precondition (disconnected graph, bad k...)."""

    exit_code = 1
    kind = "domain"


class BudgetExceeded(HomShiftError):
    """An explicit resource budget would be exceeded; nothing is truncated."""

    exit_code = 2
    kind = "budget"

    def __init__(self, message, estimate=None, budget=None):
        self.estimate = estimate
        self.budget = budget
        super().__init__(message)


class IncompleteCoverError(HomShiftError):
    exit_code = 2
    kind = "budget"


class ConsistencyError(HomShiftError, AssertionError):
    """Two independent decision routes disagreed. Always a bug."""

    exit_code = 1
    kind = "consistency"
