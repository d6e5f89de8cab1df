"""Exception types shared across the package."""


class SplitRingError(Exception):
    """Base class for all library errors."""


class RingMismatch(SplitRingError):
    """Operands belong to different rings."""


class NotAUnit(SplitRingError):
    """Inversion requested for a non-invertible element."""


class NonMonic(SplitRingError):
    """A monic polynomial was required."""


class NonCentralCoefficients(SplitRingError):
    """Polynomial coefficients must be central; reduce with central_quotient first."""


class InfiniteRing(SplitRingError):
    """Operation requires a finite ring."""


class InexactDivision(SplitRingError):
    """An exact division left a remainder (indicates a bug in the caller)."""


class IndexOutOfRange(SplitRingError):
    """Variable or symmetric-function index outside the valid range."""


class LengthMismatch(SplitRingError):
    """Coefficient list has the wrong length."""


class CapExceeded(SplitRingError):
    """Degree exceeds the configured n! size cap."""


class PreconditionViolated(SplitRingError):
    """A documented precondition failed; the message names the hypothesis."""


class ParseError(SplitRingError):
    """Malformed ring-spec or element text.  Carries the offset of the error."""

    def __init__(self, message, text=None, pos=None):
        if text is not None and pos is not None:
            message = f"{message} (at position {pos} in {text!r})"
        super().__init__(message)
        self.text = text
        self.pos = pos
