"""
Exact scalars over Q and Q(a)

Every structure constant, vector entry and matrix entry in the toolkit is a
Scalar: either a rational number (field tag "Q") or a rational function in the
indeterminate ``a`` with rational coefficients (field tag "Qa"). The values are
sympy domain elements of ``QQ`` and ``QQ.frac_field(a)``; both domains keep
their elements reduced, and the canonical form exposed here (reduced fraction,
monic denominator, sign on the numerator) is read off those elements.
"""
import math
import re
from fractions import Fraction

import sympy
from sympy import QQ

from src.core.errors import (
    DivisionByZero,
    FieldMismatch,
    MixedFieldError,
    ParseError,
    PoleError,
)

FIELD_Q = "Q"
FIELD_QA = "Qa"
FIELDS = (FIELD_Q, FIELD_QA)

# Name of the indeterminate in the text grammar
INDETERMINATE = "a"
ALPHA = sympy.Symbol(INDETERMINATE)
QQ_ALPHA = QQ.frac_field(ALPHA)

_DOMAINS = {FIELD_Q: QQ, FIELD_QA: QQ_ALPHA}
_GENERATOR = QQ_ALPHA.from_sympy(ALPHA)


def domain_of(field):
    """The sympy domain holding the values of a field tag"""
    try:
        return _DOMAINS[field]
    except KeyError:
        raise ValueError(f"unknown field tag {field!r}") from None


def to_ground(value):
    """
    Convert a rational number to an element of QQ

    Args:
        value: int, Fraction, sympy Rational, QQ element or Q Scalar

    Raises:
        TypeError: If value is not a rational number
    """
    if isinstance(value, Scalar):
        if value.field != FIELD_Q:
            raise MixedFieldError("a rational function is not a rational number")
        return value.value
    if QQ.of_type(value):
        return value
    if isinstance(value, sympy.Rational):
        return QQ(int(value.p), int(value.q))
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return QQ(value.numerator, value.denominator)
    raise TypeError(f"not a rational number: {value!r}")


def _lift(q, field):
    return q if field == FIELD_Q else QQ_ALPHA.convert_from(q, QQ)


def _coefficients(poly):
    """Ascending coefficient list of a univariate ring element"""
    terms = {monom[0]: coeff for monom, coeff in poly.terms()}
    top = max(terms, default=-1)
    return [terms.get(k, QQ.zero) for k in range(top + 1)]


def _horner(coeffs, point):
    result = QQ.zero
    for c in reversed(coeffs):
        result = result * point + c
    return result


def _polynomial(coefficients):
    total = QQ_ALPHA.zero
    for k, c in enumerate(coefficients):
        q = to_ground(c)
        if q:
            total += QQ_ALPHA.convert_from(q, QQ) * _GENERATOR ** k
    return total


class Scalar:
    """
    Field element tagged with the field it lives in

    Args:
        value: Rational number for field "Q"; rational number or element of
            QQ.frac_field(a) for field "Qa"
        field: Field tag
    """

    __slots__ = ("field", "value")

    def __init__(self, value, field):
        domain = domain_of(field)
        if not domain.of_type(value):
            if field == FIELD_Q and QQ_ALPHA.of_type(value):
                raise MixedFieldError("a rational function is not an element of Q")
            value = _lift(to_ground(value), field)
        self.field = field
        self.value = value

    @classmethod
    def _wrap(cls, value, field):
        scalar = cls.__new__(cls)
        scalar.field = field
        scalar.value = value
        return scalar

    @classmethod
    def rational(cls, numerator, denominator=1):
        if denominator == 0:
            raise DivisionByZero("rational with zero denominator")
        return cls._wrap(QQ(numerator, denominator), FIELD_Q)

    @classmethod
    def of(cls, value, field):
        """Embed an int, Fraction, sympy Rational or domain element into the given field"""
        if isinstance(value, Scalar):
            if value.field != field:
                raise MixedFieldError(f"cannot use a {value.field} scalar as {field}")
            return value
        return cls(value, field)

    @classmethod
    def indeterminate(cls):
        return cls._wrap(_GENERATOR, FIELD_QA)

    @classmethod
    def zero(cls, field):
        return cls._wrap(domain_of(field).zero, field)

    @classmethod
    def one(cls, field):
        return cls._wrap(domain_of(field).one, field)

    def is_zero(self):
        return not self.value

    def parts(self):
        """
        Canonical numerator and denominator

        Returns:
            tuple: (numerator, denominator) as ascending lists of QQ
                coefficients; the denominator is monic
        """
        if self.field == FIELD_Q:
            return [self.value], [QQ.one]
        num = _coefficients(QQ_ALPHA.numer(self.value))
        den = _coefficients(QQ_ALPHA.denom(self.value))
        lead = den[-1]
        return [c / lead for c in num], [c / lead for c in den]

    def is_polynomial(self):
        return len(self.parts()[1]) == 1

    def normalize(self):
        if self.field == FIELD_Q:
            return self
        return rational_function(*self.parts())

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFieldError(f"cannot combine {self.field} and {other.field} scalars")
            return other.value
        try:
            return _lift(to_ground(other), self.field)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Scalar) and other.field != self.field:
            return False
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return not (self.value - value)

    def __hash__(self):
        if self.field == FIELD_Q:
            return hash((FIELD_Q, self.value))
        return hash((FIELD_QA, self.render()))

    def __neg__(self):
        return Scalar._wrap(-self.value, self.field)

    def __add__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return Scalar._wrap(self.value + value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return Scalar._wrap(self.value - value, self.field)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return Scalar._wrap(self.value * value, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if not value:
            raise DivisionByZero("division by zero")
        return Scalar._wrap(self.value / value, self.field)

    def __pow__(self, exponent):
        if exponent < 0:
            return Scalar.one(self.field) / Scalar._wrap(self.value ** -exponent, self.field)
        return Scalar._wrap(self.value ** exponent, self.field)

    def substitute(self, value):
        return substitute(self, value)

    def to_rational(self):
        """The value of a Q scalar as a sympy Rational"""
        if self.field != FIELD_Q:
            raise MixedFieldError("only Q scalars have a rational value")
        return sympy.Rational(int(self.value.numerator), int(self.value.denominator))

    def render(self):
        if self.field == FIELD_Q:
            return _render_rational(self.value)
        return _render_rational_function(*self.parts())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Scalar({self.render()!r}, {self.field})"


def rational_function(numerator, denominator=(1,)):
    """
    Q(a) scalar from coefficient lists

    Args:
        numerator: Ascending coefficients (ints, Fractions or QQ elements)
        denominator: Ascending coefficients, not all zero

    Raises:
        DivisionByZero: If the denominator is the zero polynomial
    """
    den = _polynomial(denominator)
    if not den:
        raise DivisionByZero("rational function with zero denominator")
    return Scalar._wrap(_polynomial(numerator) / den, FIELD_QA)


def field_arith(op, a, b):
    """
    Apply a field operation to two scalars of the same field

    Args:
        op: One of "add", "sub", "mul", "div"
        a: Scalar
        b: Scalar

    Returns:
        Scalar: Canonical result

    Raises:
        MixedFieldError: If the field tags differ
        DivisionByZero: On division by zero
    """
    if a.field != b.field:
        raise MixedFieldError(f"cannot combine {a.field} and {b.field} scalars")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def substitute(s, value):
    """
    Instantiate a Q(a) scalar at a rational parameter value

    Args:
        s: Scalar with field "Qa"
        value: int, Fraction, sympy Rational or Q Scalar

    Returns:
        Scalar: Q scalar num(value)/den(value)

    Raises:
        PoleError: If value is a root of the denominator
    """
    if s.field != FIELD_QA:
        raise MixedFieldError("only Q(a) scalars can be instantiated")
    point = to_ground(value)
    num, den = s.parts()
    denominator = _horner(den, point)
    if not denominator:
        raise PoleError(f"{s.render()} has a pole at a = {_render_rational(point)}",
                        sympy.Rational(int(point.numerator), int(point.denominator)))
    return Scalar._wrap(_horner(num, point) / denominator, FIELD_Q)


def _render_rational(q):
    n, d = int(q.numerator), int(q.denominator)
    return str(n) if d == 1 else f"{n}/{d}"


def _integer_form(num, den):
    """Scale num/den to coprime integer coefficient lists"""
    scale = 1
    for c in num + den:
        d = int(c.denominator)
        scale = scale * d // math.gcd(scale, d)
    num_ints = [int(c.numerator) * (scale // int(c.denominator)) for c in num]
    den_ints = [int(c.numerator) * (scale // int(c.denominator)) for c in den]
    content = 0
    for c in num_ints + den_ints:
        content = math.gcd(content, c)
    if content > 1:
        num_ints = [c // content for c in num_ints]
        den_ints = [c // content for c in den_ints]
    return num_ints, den_ints


def _render_integer_polynomial(coeffs):
    terms = [(k, c) for k, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    parts = []
    for position, (degree, coeff) in enumerate(reversed(terms)):
        magnitude = abs(coeff)
        if degree == 0:
            body = str(magnitude)
        else:
            power = INDETERMINATE if degree == 1 else f"{INDETERMINATE}^{degree}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if position == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)


# a denominator that needs no parentheses after '/'
_BARE_DENOMINATOR = re.compile(rf"\d+|{INDETERMINATE}(\^\d+)?")


def _render_rational_function(num, den):
    """
    Render num/den in the scalar grammar

    Integer coefficients, descending degree, and a single top-level ``/``
    when the denominator is not 1.
    """
    num_ints, den_ints = _integer_form(num, den)
    num_text = _render_integer_polynomial(num_ints)
    if den_ints == [1]:
        return num_text
    den_text = _render_integer_polynomial(den_ints)
    if sum(1 for c in num_ints if c) > 1:
        num_text = f"({num_text})"
    if not _BARE_DENOMINATOR.fullmatch(den_text):
        den_text = f"({den_text})"
    return f"{num_text}/{den_text}"


class _Token:
    __slots__ = ("kind", "text", "position")

    def __init__(self, kind, text, position):
        self.kind = kind
        self.text = text
        self.position = position


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("number", text[start:i], start))
        elif ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("ident", text[start:i], start))
        elif ch in "+-*/^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _ScalarParser:
    """
    Recursive-descent parser evaluating straight into the field's domain

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' number)?
    atom   := number | 'a' | '(' expr ')'
    """

    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.domain = domain_of(field)
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message, token=None):
        token = token or self.peek()
        raise ParseError(message, self.text, token.position)

    def parse(self):
        if self.peek().kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            if op.kind == "*":
                value = value * rhs
            elif not rhs:
                self.fail("zero denominator", op)
            else:
                value = value / rhs
        return value

    def unary(self):
        if self.peek().kind == "-":
            self.advance()
            return -self.unary()
        if self.peek().kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            token = self.peek()
            if token.kind != "number":
                self.fail("exponent must be a nonnegative integer")
            self.advance()
            return base ** int(token.text)
        return base

    def atom(self):
        token = self.peek()
        if token.kind == "number":
            self.advance()
            return _lift(QQ(int(token.text)), self.field)
        if token.kind == "ident":
            if token.text != INDETERMINATE:
                self.fail(f"unknown identifier {token.text!r}")
            if self.field == FIELD_Q:
                raise FieldMismatch(
                    f"indeterminate {INDETERMINATE!r} is not allowed in a Q scalar",
                    self.text,
                    token.position,
                )
            self.advance()
            return _GENERATOR
        if token.kind == "(":
            self.advance()
            value = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'")
            self.advance()
            return value
        if token.kind == "end":
            self.fail("unexpected end of expression")
        self.fail(f"unexpected {token.text!r}")


def parse_scalar(text, field=FIELD_Q):
    """
    Parse a scalar expression

    Args:
        text: Expression such as ``"-2"``, ``"3/4"``, ``"1/2*a + 1"`` or
            ``"(1+a)/(1-a)"``
        field: "Q" or "Qa"

    Returns:
        Scalar: Canonical scalar in the requested field

    Raises:
        ParseError: On grammar violations or a zero denominator, with the
            offending position
        FieldMismatch: If ``a`` appears under field "Q"
    """
    domain_of(field)
    return Scalar._wrap(_ScalarParser(text, field).parse(), field)
