"""Exception types raised across the package."""


class PosetError(Exception):
    pass


class CycleError(PosetError):
    """The given relation is not antisymmetric (it contains a cycle)."""


class UnknownLabel(PosetError, KeyError):
    pass


class NotGraded(PosetError):
    pass


class SizeLimit(PosetError):
    pass


class QuiverError(ValueError):
    pass


class BadLength(QuiverError):
    pass


class BadOrientation(QuiverError):
    pass


class NotAPath(QuiverError):
    pass


class DomainError(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


class ParamRange(ValueError):
    pass
