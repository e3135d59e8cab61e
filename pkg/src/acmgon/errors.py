"""Exception hierarchy shared by every module of the package."""


class AcmError(Exception):
    """Base class for all errors raised by acmgon."""


class UnsupportedSurface(AcmError, ValueError):
    pass


class InvalidCurveClass(AcmError, ValueError):
    pass


class ParityError(AcmError, ArithmeticError):
    """Adjunction produced an odd numerator; the intersection form is corrupt."""


class InvalidCharacter(AcmError, ValueError):
    pass


class NotCubicCharacter(AcmError, ValueError):
    pass


class ClassificationFailure(AcmError, RuntimeError):
    pass


class InvalidInput(AcmError, ValueError):
    """Out-of-range degree, bidegree, or parameter."""


class CliffordUndefined(AcmError, ValueError):
    pass
