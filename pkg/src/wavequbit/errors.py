"""Exception hierarchy.

Each exception carries an ``exit_code`` used by the command-line front end:
1 for usage/parse problems, 2 for domain/validation failures and 3 for
convergence/extent failures.
"""


class WaveQubitError(Exception):
    exit_code = 2


class ParseError(WaveQubitError, ValueError):
    exit_code = 1

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UsageError(WaveQubitError, ValueError):
    exit_code = 1


class SizeError(WaveQubitError, ValueError):
    pass


class SpacingError(WaveQubitError, ValueError):
    pass


class GridError(WaveQubitError, ValueError):
    pass


class DomainError(WaveQubitError, ValueError):
    pass


class UndefinedMetricError(WaveQubitError, ValueError):
    pass


class DegeneracyError(WaveQubitError, ValueError):
    pass


class MapIndexError(WaveQubitError, IndexError):
    pass


class NonNormalizableError(WaveQubitError, ValueError):
    pass


class PeakCountError(WaveQubitError, ValueError):
    def __init__(self, requested, found):
        self.requested = requested
        self.found = found
        super().__init__(f"requested {requested} local maxima, found {found}")


class EvaluationError(WaveQubitError, ValueError):
    pass


class ConvergenceError(WaveQubitError, ArithmeticError):
    exit_code = 3


class ExtentError(WaveQubitError, ValueError):
    exit_code = 3
