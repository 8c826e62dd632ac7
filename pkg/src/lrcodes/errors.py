"""Exception hierarchy shared by all lrcodes modules."""


class LrcError(Exception):
    """Base class for all errors raised by this package."""


class NotAPrimePower(LrcError):
    """Field order is neither a prime nor a supported power of two."""


class UnsupportedField(LrcError):
    """Field order is a prime power outside the supported range."""


class DivisionByZero(LrcError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class DuplicateAbscissa(LrcError):
    """Interpolation points share an x coordinate."""


class NoSubgroup(LrcError):
    """No multiplicative or additive subgroup of the requested size exists."""


class TooManyBlocks(LrcError):
    """More cosets requested than the field supports."""


class NotConstantOnBlocks(LrcError):
    """Candidate polynomial is not constant on every partition block."""


class SEqualsOne(LrcError):
    """n mod (r+1) = 1 is outside the construction's parameter range."""


class FieldTooSmall(LrcError):
    """The padded length exceeds the number of usable field points."""


class RateBoundViolated(LrcError):
    """k exceeds n - ceil(n/(r+1))."""


class LengthMismatch(LrcError):
    """Message or word has the wrong number of symbols."""


class IndexOutOfRange(LrcError, IndexError):
    """Coordinate index outside [1, n]."""


class Unrecoverable(LrcError):
    """Erasure pattern leaves the decoding system rank-deficient."""


class BudgetExceeded(LrcError):
    """Requested exhaustive check is larger than the allowed budget."""


class InternalInconsistency(LrcError):
    """A property guaranteed by construction failed; indicates a bug."""
