"""Exception hierarchy shared by all ecseq modules."""


class EcseqError(Exception):
    """Base class for every error raised by ecseq."""


class ModulusMismatch(EcseqError, ValueError):
    pass


class DivisionByZero(EcseqError, ZeroDivisionError):
    pass


class NonResidue(EcseqError, ValueError):
    pass


class InvalidCurve(EcseqError, ValueError):
    """Curve parameters violate a model invariant (singular, square d, ...)."""


class PointNotOnCurve(EcseqError, ValueError):
    pass


class DenominatorZero(EcseqError, ArithmeticError):
    pass


class ResultAtInfinity(EcseqError, ArithmeticError):
    pass


class CurveShapeMismatch(EcseqError, ValueError):
    pass


class ExceptionalPoint(EcseqError, ValueError):
    pass


class ScaleExceeded(EcseqError, ValueError):
    pass


class NoSuchPoint(EcseqError, LookupError):
    pass


class ModelMismatch(EcseqError, TypeError):
    pass


class ZeroDenominator(EcseqError, ValueError):
    pass


class FunctionSyntaxError(EcseqError, ValueError):
    pass


class PoleAtPoint(EcseqError, ArithmeticError):
    """The function has a pole (vanishing denominator) at the given point.

    ``index`` is the 1-based sequence index when raised during generation.
    """

    def __init__(self, point, index=None):
        self.point = point
        self.index = index
        where = f" at index n={index}" if index is not None else ""
        super().__init__(f"pole at point {point}{where}")


class InvalidExponent(EcseqError, ValueError):
    pass


class NotCoprime(EcseqError, ValueError):
    pass


class RangeError(EcseqError, ValueError):
    pass


class InconsistentDelta(EcseqError, ValueError):
    pass
