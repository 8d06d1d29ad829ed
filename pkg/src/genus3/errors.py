"""Exception hierarchy.

Every error derives from :class:`G3Error`.  The CLI maps
:class:`InvalidInput` to exit code 1 and :class:`InternalInconsistency`
to exit code 2.
"""


class G3Error(Exception):
    pass


class InvalidInput(G3Error):
    pass


class InternalInconsistency(G3Error):
    pass


# algebra
class NotPrime(InvalidInput):
    pass


class NotPrimePower(InvalidInput):
    pass


class DegreeUnsupported(InvalidInput):
    pass


class FieldMismatch(InvalidInput):
    pass


class DivisionByZero(InvalidInput, ZeroDivisionError):
    pass


class NotASquare(InvalidInput):
    pass


class NotASubfield(InvalidInput):
    pass


class ZeroPolynomial(InvalidInput):
    pass


class NoRootFound(InternalInconsistency):
    pass


# forms
class InhomogeneousInput(InvalidInput):
    pass


class ZeroPoint(InvalidInput):
    pass


class ZeroDivisor(InvalidInput):
    pass


class NotDivisible(G3Error):
    """Raised by exact division when the residue is nonzero."""


class InhomogeneousDeterminant(InvalidInput):
    pass


class SingularMatrix(InvalidInput):
    pass


class FieldTooLarge(InvalidInput):
    pass


# curves
class LineOnCurve(InvalidInput):
    pass


class DegenerateAfterRetries(InvalidInput):
    pass


class NotGenus3(InvalidInput):
    pass


# zeta
class InconsistentCounts(InternalInconsistency):
    pass


# families
class ZeroForm(InvalidInput):
    pass


class ConditionNotSquare(InvalidInput):
    pass


class SingularEllipticFactor(InvalidInput):
    pass


class CharacteristicTwo(InvalidInput):
    pass


class SingularModel(InvalidInput):
    pass


class UnknownName(InvalidInput):
    pass


class VerificationFailed(InternalInconsistency):
    pass
