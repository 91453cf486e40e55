"""Exception hierarchy for covrough."""


class CovroughError(ValueError):
    """Base class for all input/validation failures raised by covrough."""


class DuplicateElement(CovroughError):
    pass


class EmptyUniverse(CovroughError):
    pass


class UnknownElement(CovroughError):
    def __init__(self, element, where: str = ""):
        self.element = element
        msg = f"unknown element {element!r}"
        if where:
            msg += f" in {where}"
        super().__init__(msg)


class EmptyBlock(CovroughError):
    pass


class NotACovering(CovroughError):
    def __init__(self, uncovered):
        self.uncovered = tuple(uncovered)
        super().__init__(
            "blocks do not cover the universe; uncovered: " + ", ".join(map(str, self.uncovered))
        )


class DimensionMismatch(CovroughError):
    pass


class UniverseMismatch(CovroughError):
    pass


class UniverseTooLarge(CovroughError):
    pass


class ParseError(CovroughError):
    """Malformed covering text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class RouteSchemeMismatch(CovroughError):
    """A route was requested for an operator it cannot compute."""
