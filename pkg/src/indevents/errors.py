"""Exception hierarchy shared by every module of the package."""


class IndEventsError(Exception):
    """Base class for all errors raised by :mod:`indevents`."""


class DomainError(IndEventsError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class ModeError(IndEventsError, TypeError):
    """Exact-rational and float values were mixed, or the wrong mode was supplied."""


class InfeasibleWeights(DomainError):
    """A positive weight follows prefix weights that already sum to one."""


class NegativeDenominator(DomainError):
    """Prefix sums of the weights exceed one."""


class Diverges(DomainError):
    """The requested value is infinite."""


class NoTailInfo(IndEventsError):
    """A series family cannot certify the size of its tail."""


class NotConvergent(DomainError):
    """A series family has a divergent sum where convergence is required."""


class RatioTooLarge(DomainError):
    """The tail ratio is at least one; a larger truncation index is needed."""


class CapExceeded(DomainError):
    """The number of events exceeds the construction cap."""
