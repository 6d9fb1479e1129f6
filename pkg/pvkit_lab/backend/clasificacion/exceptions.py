"""Errores del dominio. Los servicios los lanzan; el catálogo los traduce a reportes."""


class PVKitError(Exception):
    """Base de todos los errores de pvkit."""


class DimensionMismatchError(PVKitError, ValueError):
    pass


class InvalidRootSystemError(PVKitError, ValueError):
    pass


class InvalidDiagramError(PVKitError, ValueError):
    pass


class LabelMismatchError(PVKitError, ValueError):
    pass


class UnsupportedRepresentationError(PVKitError):
    """La construcción pedida no existe en esta versión (p. ej. spin_rep(11))."""


class RepresentationConstructionError(PVKitError):
    """Una representación construida no cumple lo que promete: corchete fuera del span o dimensión errónea."""


class NotPrehomogeneousError(PVKitError):
    """No se encontró un punto genérico certificado dentro del presupuesto de intentos.

    No es una prueba de que el espacio no sea prehomogéneo.
    """

    def __init__(self, message, attempts=0):
        super().__init__(message)
        self.attempts = attempts


class ZeroAtTestPointError(PVKitError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class UnknownEntryError(PVKitError, LookupError):
    pass


class ParameterOutOfRangeError(PVKitError, ValueError):
    pass
