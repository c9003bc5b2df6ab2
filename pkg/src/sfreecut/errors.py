"""Exception hierarchy shared by all modules."""


class SFreeCutError(Exception):
    """Base class for library errors."""


class DimensionError(SFreeCutError, ValueError):
    """Operands have inconsistent dimensions."""


class UnboundedError(SFreeCutError):
    """A finite enumeration was requested over an unbounded region without a box."""


class PreconditionError(SFreeCutError, ValueError):
    """An operation's input violates its documented precondition."""


class NotFacetError(PreconditionError):
    """The selected row does not define a facet."""


class NotSFreeError(SFreeCutError):
    """A body that must be S-free contains a point of S in its interior."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CertificationError(SFreeCutError):
    """A property could not be certified within the search box."""


class FormatError(SFreeCutError, ValueError):
    """An input document is malformed."""
