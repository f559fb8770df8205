"""Exception hierarchy. Every error raised on bad mathematical input derives from StekError."""


class StekError(Exception):
    """Base class for all library errors."""


class DomainError(StekError, ValueError):
    """An argument lies outside the domain of an operation."""


class UnitMismatch(DomainError):
    pass


class PeelInconsistency(StekError):
    """A sorted prefix could not be decomposed into zeros plus progressions."""


class InfeasibleCounts(StekError):
    """No boundary data (r, s, lengths) can produce the given decomposition."""


class EmptyClass(StekError):
    pass


class NotOrthogonal(DomainError):
    pass


class OrderExceeded(StekError):
    pass


class NonIntegerDimension(StekError):
    pass


class InvalidGroup(DomainError):
    pass


class CollectionSizeMismatch(DomainError):
    pass
