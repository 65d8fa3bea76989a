"""Exception types shared across the package."""


class DegseqError(Exception):
    """Base class for every error this package raises deliberately."""


class NegativeEntryError(DegseqError):
    """A degree entry is negative."""


class EntryTooLargeError(DegseqError):
    """A degree entry exceeds n-1 for a sequence of length n."""


class LayoffIndexError(DegseqError, IndexError):
    """Layoff position outside 1..n."""


class ResultNegativeError(DegseqError):
    """Laying off drove an entry below zero; the input cannot be graphic."""


class DemandExceededError(DegseqError):
    """Forced edges already exceed some vertex's degree demand."""


class ConstraintViolationError(DegseqError):
    """Parameters violate a structural constraint."""


class WorkBoundExceededError(DegseqError):
    """A search exceeded its node budget."""


class SideConditionUnmetError(DegseqError):
    """Sequence length is below the floor a registered condition requires."""


class NotPotentialError(DegseqError):
    """A witness was requested for a sequence/pattern pair that has none."""


class PreconditionUnmetError(DegseqError):
    """Input violates a documented precondition."""


class InfeasibleSigmaError(DegseqError):
    """Requested degree sum exceeds what n vertices can carry."""
