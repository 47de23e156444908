"""Exception hierarchy.

ValidationError covers rejected inputs and failed mathematical
preconditions; InternalError marks conditions that are impossible for
valid input and therefore indicate a bug.  The CLI maps the two classes
to distinct exit codes.
"""


class HodgekitError(Exception):
    pass


class ValidationError(HodgekitError):
    pass


class InternalError(HodgekitError):
    pass


# exactmath

class NotMonic(ValidationError):
    pass


class Reducible(ValidationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DegreeTooLarge(ValidationError):
    pass


class NotRealValued(ValidationError):
    pass


class ConjugationNotInternal(ValidationError):
    """The complex conjugate of the chosen embedding does not come from a
    field automorphism, so conjugated periods cannot be represented inside
    the given field.  Re-present the period over a conjugation-closed
    (e.g. Galois) field."""


# qforms

class NotSymmetric(ValidationError):
    pass


class Degenerate(ValidationError):
    pass


# hodge

class WrongSignature(ValidationError):
    pass


class IsotropyFails(ValidationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PositivityFails(ValidationError):
    pass


class NotCommutative(InternalError):
    pass


class NotClosed(InternalError):
    pass


# symalg

class DegreeTooHigh(ValidationError):
    pass


class HarmonicDimTooSmall(ValidationError):
    pass


# ksympl

class OddDimension(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class NotGenericallySymplectic(ValidationError):
    pass


class NotQuadricPower(ValidationError):
    pass


class DegenerateQuadric(ValidationError):
    pass


class WrongRankOnQuadric(ValidationError):
    pass


class BasePointIsotropic(ValidationError):
    pass


class RelationsFail(ValidationError):
    pass


# perdom

class NotIsotropicPath(ValidationError):
    pass


class RankTooSmall(ValidationError):
    pass


# cli

class FileFormatError(ValidationError):
    pass
