"""Exception hierarchy shared by the library and the CLI exit codes."""


class MidealError(Exception):
    exit_code = 1


class ParseError(MidealError):
    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DimensionError(MidealError, ValueError):
    exit_code = 3


class PreconditionError(MidealError, ValueError):
    exit_code = 3


class NotContainedError(PreconditionError):
    """A prime was queried that does not contain the ideal."""


class SizeGuardError(MidealError):
    exit_code = 4


class ConsistencyError(MidealError, AssertionError):
    """Two computations that must agree did not.

    ``left`` and ``right`` carry both sides for diagnostics.
    """

    exit_code = 5

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right
