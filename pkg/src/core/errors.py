"""
Exceptions raised by the Leibniz algebra toolkit
"""


class LeibnizError(Exception):
    """Base class for every error raised by this package"""


class MixedFieldError(LeibnizError, TypeError):
    """Raised when scalars from Q and Q(a) meet in one operation"""


class DivisionByZero(LeibnizError, ZeroDivisionError):
    """Raised on division by the zero scalar"""


class PoleError(LeibnizError, ZeroDivisionError):
    """Raised when a parameter value is a pole of a rational function"""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class ParseError(LeibnizError, ValueError):
    """
    Raised when a scalar expression does not follow the grammar

    Args:
        message: What went wrong
        text: The full input text
        position: 0-based offset of the offending character
    """

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} (at position {position} in {text!r})")
        self.reason = message
        self.text = text
        self.position = position


class FieldMismatch(ParseError):
    """Raised when the indeterminate appears in a Q expression"""


class DimensionMismatch(LeibnizError, ValueError):
    """Raised when vectors, matrices or subspaces have incompatible sizes"""


class SingularMatrix(LeibnizError, ValueError):
    """Raised when an invertible matrix was required"""


class BasisWitnessError(LeibnizError, ValueError):
    """
    Base for errors that carry basis-index witnesses

    Args:
        message: Description of the violation
        witness: Tuple of 0-based basis indices, or None
    """

    def __init__(self, message, witness=None):
        if witness is not None:
            names = ", ".join(f"e{i + 1}" for i in witness)
            message = f"{message} (witness {names})"
        super().__init__(message)
        self.witness = witness


class NotLie(BasisWitnessError):
    """The table handed to derived_bracket is not a Lie algebra"""


class NotDifferential(BasisWitnessError):
    """The map d does not square to zero"""


class NotDerivation(BasisWitnessError):
    """The map d is not a derivation of the Lie bracket"""


class NotIsomorphism(LeibnizError, ValueError):
    """Raised when an operation needs an algebra isomorphism"""


class InvalidAction(LeibnizError, ValueError):
    """Raised when a group action fails one of its defining conditions"""


class NotCLElement(LeibnizError, ValueError):
    """Raised when an element expected to have the CL-property does not"""


class UnknownName(LeibnizError, KeyError):
    """Raised for catalog names that do not exist"""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ExcludedParameter(LeibnizError, ValueError):
    """Raised when a parameter value is outside an entry's allowed range"""


class DocumentError(LeibnizError, ValueError):
    """Base class for malformed algebra, action and report documents"""


class DocumentSyntaxError(DocumentError):
    """The document is not well-formed"""


class IndexOutOfRange(DocumentError):
    """A basis index lies outside 1..dim"""


class ScalarParseError(DocumentError):
    """A scalar string inside a document failed to parse"""


class LeibnizIdentityViolation(DocumentError):
    """
    Raised when a loaded table breaks the Leibniz identity

    Args:
        verdict: The failing IdentityVerdict with its witness
    """

    def __init__(self, verdict):
        i, j, k = verdict.witness
        super().__init__(
            f"Leibniz identity fails on (e{i + 1}, e{j + 1}, e{k + 1}): "
            f"lhs {verdict.lhs.render()} != rhs {verdict.rhs.render()}"
        )
        self.verdict = verdict


class UsageError(LeibnizError, ValueError):
    """Raised for bad command-line usage"""


class NotSubalgebra(LeibnizError, ValueError):
    """Raised when a subspace is not closed under the bracket"""
