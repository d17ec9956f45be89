"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual graph input; `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    """Graph too large for the requested encoding (graph6 short form needs n <= 62)."""


class SizeCapError(ValueError):
    """Exhaustive solving requested above the hard vertex cap."""


class DomainError(ValueError):
    """Operation called outside its stated domain (disconnected host, bad parameters, ...)."""


class WitnessNotFoundError(RuntimeError):
    """No edge witness exists; signals a violated precondition of the caller."""
