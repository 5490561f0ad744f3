"""Exception hierarchy shared by all modules."""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


# -- polynomial / number field errors ---------------------------------------

class ZeroPolynomial(AlgebraError):
    pass


class NotMonic(AlgebraError):
    pass


class Reducible(AlgebraError):
    """A nontrivial exact factor of the modulus was found. Carries the factor."""

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"modulus has exact factor {factor}")


class NotAField(AlgebraError):
    pass


class FieldMismatch(AlgebraError):
    pass


class DivisionByZero(AlgebraError):
    pass


class UnverifiedField(AlgebraError):
    pass


class PrecisionExhausted(AlgebraError):
    pass


# -- Lie algebra errors ------------------------------------------------------

class IndexOutOfRange(AlgebraError):
    pass


class NotNilpotent(AlgebraError):
    pass


class AlreadyAbelian(AlgebraError):
    pass


class Singular(AlgebraError):
    pass


class DomainMismatch(AlgebraError):
    pass


class NotLayerOrdered(AlgebraError):
    """Basis is not ordered so that each lower-central term is a tail span."""


# -- pfaffian / anosov errors -------------------------------------------------

class WrongType(AlgebraError):
    pass


class GroupingInconsistent(AlgebraError):
    pass


class ConjugateMismatch(AlgebraError):
    pass


# -- catalog / cli errors ------------------------------------------------------

class UnknownName(AlgebraError):
    pass


class ParamCount(AlgebraError):
    pass


class ParseError(AlgebraError):
    """Document parse failure; message carries the offending field path."""
