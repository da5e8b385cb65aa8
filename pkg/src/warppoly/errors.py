"""Exception types shared across the package."""


class WarpPolyError(Exception):
    """Base class for all errors raised by this package."""


class GaussCodeError(WarpPolyError, ValueError):
    """A sequence of passes is not a valid Gauss code."""


class OddLengthError(GaussCodeError):
    """The pass sequence has odd length."""


class PairingError(GaussCodeError):
    """Some crossing id does not occur exactly once over and once under."""


class SignMismatchError(GaussCodeError):
    """The two signed passes of one crossing carry different signs."""


class UnknownCrossingError(GaussCodeError):
    """The named crossing id does not occur in the diagram."""


class EdgeOutOfRangeError(GaussCodeError):
    """Edge index outside [0, 2c) (or nonzero for the empty diagram)."""


class ZeroCrossingsError(GaussCodeError):
    """Operation requires at least one crossing."""


class PolynomialError(WarpPolyError, ValueError):
    """Invalid polynomial construction or operand."""


class ZeroPolynomialError(PolynomialError):
    """Degree bounds of the zero polynomial were requested."""


class DegreeBoundError(PolynomialError):
    """Reflection degree is smaller than the polynomial's upper degree."""


class NegativeCoefficientError(PolynomialError):
    """Coefficients must be non-negative."""


class NegativeDegreeError(PolynomialError):
    """Degrees must be non-negative."""


class ParseError(WarpPolyError, ValueError):
    """Text input does not match the expected grammar.

    ``position`` is the 1-based index of the offending token or term.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at token {position})"
        super().__init__(message)
        self.position = position


class NotAKnotError(WarpPolyError, ValueError):
    """Braid closure has more than one component."""


class EmptySummandError(WarpPolyError, ValueError):
    """Connected sum requires both summands to have a crossing."""


class NoSuchLabelError(WarpPolyError, LookupError):
    """No edge carries the requested warping degree."""


class VerificationFailedError(WarpPolyError, RuntimeError):
    """A constructed diagram failed its mandatory post-check (internal bug)."""


class InconsistentClosureError(WarpPolyError, RuntimeError):
    """Label propagation did not close up around the diagram (internal bug)."""


class BoundExceededError(WarpPolyError, ValueError):
    """Requested size is above the configured search bound."""


class NotAlternatableError(WarpPolyError, ValueError):
    """No subset of crossing changes makes the code alternating.

    Happens exactly for codes that fail the evenness parity condition;
    such codes do not come from diagrams drawn on the sphere.
    """


class NotConstructibleError(WarpPolyError, ValueError):
    """The requested (crossings, span) pair is outside the recipe set."""
