"""Exception hierarchy shared across the package.

Everything raised on purpose derives from ToricError so callers can catch
one base class.  Guard-type errors (LimitExceeded, GuardViolated) signal
that a computation was refused, not that it failed.
"""


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ToricError):
    """Operands have incompatible shapes or lengths."""


class RankDeficient(ToricError):
    """A matrix does not have the rank the operation requires."""


class ZeroVector(ToricError):
    """A nonzero vector was required."""


class NotPointed(ToricError):
    """The configuration admits a nonzero nonnegative kernel vector."""


class NotACircuit(ToricError):
    """The given vector is not a circuit of the configuration."""


class NonGenericOmega(ToricError):
    """The weight vector lies on a wall; the induced structure is degenerate."""


class GuardViolated(ToricError):
    """An input violates a documented precondition."""


class LimitExceeded(ToricError):
    """A size guard tripped before the computation was attempted."""


class NegativeEntries(ToricError):
    """A nonnegative matrix or vector was required."""
