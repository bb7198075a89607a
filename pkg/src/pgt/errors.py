"""Exception types shared across the library."""


class PgtError(Exception):
    """Base class for all library errors."""


class InvalidParameter(PgtError):
    """A constructor or operation received an out-of-range parameter."""


class DegreeMismatch(PgtError):
    """Two permutations of different degrees were combined."""


class NotAMember(PgtError):
    """A permutation was expected to lie in a group but does not."""


class NotNormal(PgtError):
    """A subgroup was expected to be normal but is not."""


class CapacityExceeded(PgtError):
    """An enumeration would exceed the configured element cap.

    ``required`` is the number of stored permutations the operation needs,
    ``cap`` the limit it was refused under.  Raising the cap (``--cap`` or
    the PGT_ENUM_CAP environment variable) to at least ``required`` makes
    the operation run.
    """

    def __init__(self, message, required=None, cap=None):
        super().__init__(message)
        self.required = required
        self.cap = cap
