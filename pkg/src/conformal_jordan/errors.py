"""Exception types raised by the package."""


class ConformalJordanError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedFamily(ConformalJordanError):
    pass


class InvalidSize(ConformalJordanError):
    pass


class AlgebraMismatch(ConformalJordanError):
    pass


class NumericalFailure(ConformalJordanError):
    pass


class ModelMismatch(ConformalJordanError):
    pass


class NonGroupMatrix(ConformalJordanError):
    pass


class IndexOutOfRange(ConformalJordanError):
    pass


class NotEulerElement(ConformalJordanError):
    pass


class NotNormalizing(ConformalJordanError):
    pass


class IncompatibleKind(ConformalJordanError):
    pass


class OutsideChartDomain(ConformalJordanError):
    pass


class NotOnHypersurface(ConformalJordanError):
    pass


class NotTangent(ConformalJordanError):
    pass


class NotCausallyRelated(ConformalJordanError):
    pass


class SizeMismatch(ConformalJordanError):
    pass


class NotUnitary(ConformalJordanError):
    pass


class ChartSingular(ConformalJordanError):
    pass
