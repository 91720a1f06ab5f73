"""Exception types raised by the walled Brauer library.

Every error is a ``ValueError`` so callers at the CLI boundary can treat
bad input uniformly.
"""


class WalledBrauerError(ValueError):
    """Base class for all library errors."""


class WallViolation(WalledBrauerError):
    """A propagating edge crosses the wall, or an arc fails to cross it."""


class NotAMatching(WalledBrauerError):
    """A pairing repeats or misses a dot."""


class SizeMismatch(WalledBrauerError):
    """Operands live in different algebras or have incompatible sizes."""


class BoundExceeded(WalledBrauerError):
    """Enumeration requested beyond the configured size bound."""


class RangeError(WalledBrauerError):
    """Arc count outside 0..min(r, s)."""


class InfeasibleTuple(WalledBrauerError):
    """An arc tuple violates the block capacities of its shape."""


class ShapeMismatch(WalledBrauerError):
    """A cell label does not belong to the algebra it is used with."""


class SizeExceeded(WalledBrauerError):
    """Matrix models requested beyond the oracle bound."""


class BasisMismatch(WalledBrauerError):
    """Two representations are not indexed by the same algebra basis."""


class CellLabelError(WalledBrauerError):
    """Malformed cell label or shape text."""


class DegenerateDelta(WalledBrauerError):
    """The numeric parameter sits on a known degenerate value."""
