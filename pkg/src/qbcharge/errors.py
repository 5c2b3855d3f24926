"""Exception types raised across the package."""


class QBError(Exception):
    """Base class for every error raised by qbcharge."""


class NotHermitian(QBError, ValueError):
    pass


class DimMismatch(QBError, ValueError):
    pass


class ZeroField(QBError, ValueError):
    pass


class NonPositiveCoupling(QBError, ValueError):
    pass


class BadOrdering(QBError, ValueError):
    pass


class TooLarge(QBError, ValueError):
    pass


class BadSubset(QBError, ValueError):
    pass


class PairNotOrthonormal(QBError, ValueError):
    pass


class Degenerate(QBError, ValueError):
    """The initial state is an eigenstate, so there is no dynamics to bound."""


class NotFullyCharging(QBError, RuntimeError):
    pass


class QslViolation(QBError, RuntimeError):
    """A charging time shorter than the speed limit; always indicates a bug."""


class NoEmbedding(QBError, ValueError):
    pass
