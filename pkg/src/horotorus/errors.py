"""Exception hierarchy. Every error is a ``ValueError`` so callers that only
care about bad input can catch that."""


class TorusGeometryError(ValueError):
    pass


class InvalidMapError(TorusGeometryError):
    pass


class NumericalSingularityError(TorusGeometryError):
    pass


class UnsupportedConventionError(TorusGeometryError):
    pass


class InvalidPointError(TorusGeometryError):
    pass


class ZeroFoliationError(TorusGeometryError):
    pass


class NotACurveError(TorusGeometryError):
    pass


class ZeroVectorError(TorusGeometryError):
    pass


class InvalidCoordinatesError(TorusGeometryError):
    pass


class InvalidRangeError(TorusGeometryError):
    pass


class BaseMismatchError(TorusGeometryError):
    pass


class NotQuasiconformalError(TorusGeometryError):
    pass


class UndefinedDiscError(TorusGeometryError):
    pass
