"""Exception types shared across the package."""


class CrouzeixError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(CrouzeixError, ValueError):
    """Malformed input: wrong shape, non-finite entries, bad types."""


class DomainError(CrouzeixError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class SingularMatrixError(CrouzeixError, ArithmeticError):
    """Linear solve against a matrix that is singular to working tolerance."""


class NumericalFailureError(CrouzeixError, ArithmeticError):
    """An iterative numerical procedure failed to converge or self-check."""


class PoleError(CrouzeixError, ArithmeticError):
    """Evaluation at, or too close to, a pole."""


class NotAnEllipseError(CrouzeixError, ValueError):
    """Boundary samples do not fit an ellipse to tolerance."""


class DegenerateGeometryError(CrouzeixError, ValueError):
    """Geometry (disk or segment) unsuitable for the elliptic pipeline."""


class TrivialCaseError(CrouzeixError, ValueError):
    """Matrix is a scalar multiple of the identity; nothing to normalize."""


class NotSupportedError(CrouzeixError, ValueError):
    """Input outside the supported class (e.g. non-elliptic numerical range)."""


class InvalidDecompositionError(CrouzeixError, ValueError):
    """A supplied similarity decomposition does not reproduce the matrix."""
