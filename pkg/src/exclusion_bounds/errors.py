"""Exception hierarchy shared by the library and the command-line tool."""


class DomainError(ValueError):
    """An argument lies outside the supported domain of an operation."""


class BracketError(ValueError):
    """A root bracket does not straddle a sign change."""


class InputFormatError(ValueError):
    """An input file could not be parsed into the expected format."""


class InapplicableBoundError(ValueError):
    """The requested bound does not apply to the given input."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to reach its tolerance."""


class RootFindingError(ConvergenceError):
    """A root search found no sign change where one was expected."""
