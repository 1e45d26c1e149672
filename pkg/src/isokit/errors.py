"""Exception taxonomy shared by all codecs.

``LawViolation`` and its subclasses signal that a value handed to an
encoder/decoder breaks that codec's lawfulness constraints (duplicate set
elements, digits out of range, unbalanced parentheses, ...).  Plain
``CodecError`` subclasses signal guard breaches and unsupported requests
(unknown encoder name, size guards, non-factorable input, ...).
"""


class CodecError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(CodecError):
    """Textual value could not be parsed."""


class LawViolation(CodecError):
    """Value violates the laws of the codec it was given to."""


# -- law violations ----------------------------------------------------------

class NegativeElement(LawViolation):
    pass


class InvalidDigit(LawViolation):
    pass


class UnsortedInput(LawViolation):
    pass


class NotDyadic(LawViolation):
    pass


class NotTwoDistinct(LawViolation):
    pass


class DuplicateEdge(LawViolation):
    pass


class ZeroLiteral(LawViolation):
    pass


class NotAPermutation(LawViolation):
    pass


class AtomOutOfRange(LawViolation):
    pass


class CoeffOutOfRange(LawViolation):
    pass


class DigitOutOfRange(LawViolation):
    pass


class LeafOutOfRange(LawViolation):
    pass


class MalformedTree(LawViolation):
    pass


class UnbalancedParens(LawViolation):
    pass


class TrailingInput(LawViolation):
    pass


class TruncatedCode(LawViolation):
    pass


class EmptyTuple(LawViolation):
    pass


class NonCanonical(LawViolation):
    pass


class ZeroP5x3(LawViolation):
    pass


# -- guards and domain errors ------------------------------------------------

class UnknownEncoder(CodecError):
    pass


class UnknownKind(CodecError):
    pass


class NotFactorable(CodecError):
    pass


class NotPrime(CodecError):
    pass


class NotDivisible(CodecError):
    pass


class NonTerminating(CodecError):
    """Unfold exceeded its node budget; the transformer is not decreasing."""


class RankTooLarge(CodecError):
    pass


class IndexOutOfRange(CodecError):
    pass


class TooLarge(CodecError):
    pass


class TooManyVariables(CodecError):
    pass


class TruthTableTooLarge(CodecError):
    pass


class BaseTooSmall(CodecError):
    pass


class ShapeMismatch(CodecError):
    pass
