"""Exception hierarchy shared by every module of the package."""


class CrystalError(Exception):
    """Base class for domain errors raised by rigcrystal."""


class CartanError(CrystalError, ValueError):
    pass


class BadDiagonal(CartanError):
    pass


class PositiveOffDiagonal(CartanError):
    pass


class AsymmetricZeroPattern(CartanError):
    pass


class NotSymmetrizable(CartanError):
    pass


class UnknownIndex(CrystalError, KeyError):
    pass


class NotFiniteType(CrystalError):
    pass


class NotDominant(CrystalError, ValueError):
    pass


class StringNotFound(CrystalError, KeyError):
    pass


class FoldingError(CrystalError):
    pass


class NonIntegralC(FoldingError):
    pass


class MultiEdgeDetected(FoldingError):
    pass


class NotInVirtualImage(FoldingError):
    pass


class IncomparableDepths(CrystalError):
    pass


class EnumerationTruncated(CrystalError):
    pass
