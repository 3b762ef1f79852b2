"""Exception hierarchy shared by every module."""


class MisboundError(Exception):
    """Base class for all library errors."""


class CapacityError(MisboundError):
    """A size guard was exceeded (bitset width, overflow guard, sweep cap)."""


class GraphValidationError(MisboundError, ValueError):
    """Input does not describe a valid simple graph or a valid request."""


class Graph6Error(GraphValidationError):
    """Malformed graph6 data."""


class BoundViolation(MisboundError):
    """An MIS count exceeded g(n).

    Raised only if the Moon-Moser theorem were false or, far more likely,
    an enumerator is broken.
    """
