"""Exception hierarchy shared by every module of the package."""


class SchatunowskyError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(SchatunowskyError, ValueError):
    pass


class NoPredecessor(SchatunowskyError, ValueError):
    pass


class TooSmall(SchatunowskyError, ValueError):
    pass


class OutOfRange(SchatunowskyError, ValueError):
    pass


class CertificationFailed(SchatunowskyError, RuntimeError):
    """A brute-force check contradicted a closed form. Always a bug."""


class BudgetExceeded(SchatunowskyError, ValueError):
    pass


class Underflow(SchatunowskyError, ArithmeticError):
    pass


class DegreeBudget(SchatunowskyError, ValueError):
    pass


class NotIrreducible(SchatunowskyError, ValueError):
    pass


class BadShape(SchatunowskyError, ValueError):
    pass


class NoFloor(SchatunowskyError, ArithmeticError):
    pass


class CacheFormatError(SchatunowskyError, ValueError):
    pass


class FormulaSyntaxError(SchatunowskyError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
