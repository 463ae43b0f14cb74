"""Exception types. Each carries the offending object so callers can report it."""


class RainbowError(Exception):
    """Base class for all package errors."""


class InvalidDigraph(RainbowError, ValueError):
    def __init__(self, arc, message=None):
        self.arc = arc
        super().__init__(message or f"{type(self).__name__}: {arc}")


class LoopArc(InvalidDigraph):
    pass


class DuplicateArc(InvalidDigraph):
    pass


class VertexOutOfRange(InvalidDigraph):
    pass


class ParseError(RainbowError, ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class NotStronglyConnected(RainbowError):
    pass


class NotAPath(RainbowError, ValueError):
    pass


class Unreachable(RainbowError):
    pass


class TooManyColors(RainbowError):
    pass


class InvalidColoring(RainbowError, ValueError):
    pass


class BudgetExceeded(RainbowError):
    def __init__(self, message: str, stats=None):
        self.stats = stats
        super().__init__(message)


class InvalidFamilyParams(RainbowError, ValueError):
    pass


class NoSchemeForFamily(RainbowError):
    pass


class OutOfRange(RainbowError, ValueError):
    pass


class NotATournament(RainbowError, ValueError):
    pass


class NotOriented(RainbowError):
    pass


class ArcInMultipleCycles(RainbowError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"arc {arc} lies on more than one directed cycle")


class ArcInNoCycle(RainbowError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"arc {arc} lies on no directed cycle")


class PreconditionViolated(RainbowError, ValueError):
    pass
