"""Exception types shared across the package."""


class HypergraphError(ValueError):
    """Invalid hypergraph, parameter or precondition."""


class ParseError(HypergraphError):
    """Malformed input file. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(RuntimeError):
    """A configured search/size cap would be exceeded."""
