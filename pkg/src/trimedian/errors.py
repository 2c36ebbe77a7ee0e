"""Exception hierarchy shared by every module of the package."""


class TrimedianError(Exception):
    """Base class for all domain errors raised by trimedian."""


class DivisionByZero(TrimedianError, ZeroDivisionError):
    pass


class ParseError(TrimedianError, ValueError):
    """Malformed literal; ``pos`` is the 0-based offset of the offending character."""

    def __init__(self, message, text="", pos=0):
        self.message = message
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)


class DegenerateInput(TrimedianError):
    pass


class InvalidPQ(TrimedianError):
    pass


class SingularParameter(TrimedianError):
    pass


class NotInvertible(TrimedianError):
    pass


class InconsistentSystem(TrimedianError):
    pass


class TripleCollision(TrimedianError):
    pass


class PoleAtRho(TrimedianError):
    pass


class BadGamma(TrimedianError):
    pass


class BadGauge(TrimedianError):
    pass


class GridNotDivisibleBy3(TrimedianError):
    pass
