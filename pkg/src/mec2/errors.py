"""Exception hierarchy shared by the solvers, parsers and the CLI."""


class Mec2Error(ValueError):
    """Base class; the CLI maps every subclass to exit code 2."""


class GraphError(Mec2Error):
    """A graph violates the simple-graph invariants."""


class PreconditionError(Mec2Error):
    """An operation was called outside its documented domain."""


class OracleRefused(PreconditionError):
    """A brute-force routine refused an instance above its size guard."""


class DecompositionError(Mec2Error):
    """A branch or tree decomposition is invalid for the given graph."""


class FormatError(Mec2Error):
    """A text file could not be parsed.

    ``lineno`` is 1-based and ``None`` when the problem is not tied to a line
    (for example a count mismatch detected at end of input).
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        self.reason = message
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class UnsupportedInstance(FormatError):
    """A task-assignment instance outside the supported k=2, |e|=2 case."""
