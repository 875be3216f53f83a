"""
Exact scalar arithmetic.

Two working fields are supported: the rationals (q specialised to a
rational value) and the rational-function field Q(q) with q a formal
parameter. Elements are the native sympy domain elements, so every
operation is exact and normalised by sympy itself.
"""

import logging
from dataclasses import dataclass
from tokenize import TokenError

from sympy import QQ, Symbol, sstr
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.fields import FracElement
from sympy.polys.polyerrors import CoercionFailed

from awdaha.config import Q_SYMBOL_NAME
from awdaha.errors import (
    DenominatorVanishes,
    ForbiddenQ,
    ScalarSyntaxError,
)

logger = logging.getLogger(__name__)

Q = Symbol(Q_SYMBOL_NAME)
QQ_Q = QQ.frac_field(Q)

TRANSFORMATIONS = standard_transformations + (convert_xor,)
FORBIDDEN_Q_VALUES = (QQ(0), QQ(1), QQ(-1))


def power(domain, x, exponent):
    """Integer power, negative exponents included."""
    if exponent >= 0:
        return x ** exponent
    return domain.one / x ** (-exponent)


def is_not_root_of_unity_guard(q_value):
    """
    True iff q_value is a legal deformation parameter.

    A non-constant element of Q(q) (or the bare symbol) is transcendental
    and always passes; a rational passes unless it is 0, 1 or -1.
    """
    if isinstance(q_value, Symbol):
        return True
    if isinstance(q_value, FracElement):
        if not (q_value.numer.is_ground and q_value.denom.is_ground):
            return True
        q_value = QQ.convert(q_value.numer.LC) / QQ.convert(q_value.denom.LC)
    try:
        value = QQ.convert(q_value)
    except CoercionFailed:
        return False
    return value not in FORBIDDEN_Q_VALUES


def make_laurent(coeff, exponent):
    """Return coeff * q**exponent as an element of Q(q)."""
    return QQ_Q.convert_from(QQ.convert(coeff), QQ) * power(QQ_Q, QQ_Q.gens[0], exponent)


def _evaluate(poly, value):
    total = QQ.zero
    for monom, coeff in poly.terms():
        total += QQ.convert(coeff) * value ** monom[0]
    return total


def specialize(x, q_value):
    """
    Evaluate an element of Q(q) at a rational q.

    Args:
        x: element of Q(q) (anything QQ_Q can convert)
        q_value: rational value for q, not 0 or +-1

    Raises:
        ForbiddenQ: q_value is 0, 1 or -1
        DenominatorVanishes: q_value is a pole of x
    """
    value = QQ.convert(q_value)
    if value in FORBIDDEN_Q_VALUES:
        raise ForbiddenQ(f"q = {value} is not allowed (must avoid 0, 1, -1)")
    x = QQ_Q.convert(x)
    denominator = _evaluate(x.denom, value)
    if not denominator:
        raise DenominatorVanishes(
            f"denominator of {sstr(QQ_Q.to_sympy(x))} vanishes at q = {value}"
        )
    return _evaluate(x.numer, value) / denominator


@dataclass(frozen=True)
class ScalarField:
    """
    A working field together with the value of q inside it.

    ``domain`` is either ``QQ`` (q specialised) or ``QQ_Q`` (q formal);
    ``q`` is the corresponding domain element.
    """

    domain: object
    q: object

    @classmethod
    def symbolic(cls):
        return cls(QQ_Q, QQ_Q.gens[0])

    @classmethod
    def rational(cls, q_value):
        value = QQ.convert(q_value)
        if not is_not_root_of_unity_guard(value):
            raise ForbiddenQ(f"q = {value} is not allowed (must avoid 0, 1, -1)")
        return cls(QQ, value)

    @classmethod
    def from_text(cls, text):
        """Build the field named by a CLI/config string: 'q' or a rational."""
        text = str(text).strip()
        if text == Q_SYMBOL_NAME:
            return cls.symbolic()
        value = cls(QQ, QQ.one).parse(text)
        return cls.rational(value)

    @property
    def is_symbolic(self):
        return self.domain == QQ_Q

    @property
    def q_text(self):
        return Q_SYMBOL_NAME if self.is_symbolic else self.format(self.q)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if QQ.of_type(value):
            return self.domain.convert_from(value, QQ)
        return self.domain.convert(value)

    def fraction(self, numerator, denominator=1):
        return self.convert(QQ(numerator, denominator))

    def laurent(self, coeff, exponent):
        """coeff * q**exponent in this field."""
        return self.convert(coeff) * power(self.domain, self.q, exponent)

    def q_power(self, exponent):
        return power(self.domain, self.q, exponent)

    def inv(self, x):
        return self.domain.one / x

    def is_zero(self, x):
        return self.domain.is_zero(x)

    def parse(self, text):
        """
        Parse scalar syntax: integers, p/q rationals, q^k monomials and
        products or sums of those, e.g. ``3/2*q^-2``.
        """
        if not isinstance(text, str):
            raise ScalarSyntaxError(f"expected a scalar string, got {text!r}")
        if self.is_symbolic:
            local_dict = {Q_SYMBOL_NAME: Q}
        else:
            local_dict = {Q_SYMBOL_NAME: QQ.to_sympy(self.q)}
        try:
            expr = parse_expr(
                text, local_dict=local_dict, transformations=TRANSFORMATIONS
            )
            return self.domain.from_sympy(expr)
        except (
            SympifyError,
            SyntaxError,
            TokenError,
            TypeError,
            ValueError,
            AttributeError,
            NameError,
            ZeroDivisionError,
            CoercionFailed,
        ) as exc:
            raise ScalarSyntaxError(f"cannot read scalar {text!r}: {exc}") from exc

    def format(self, x):
        """Inverse of parse; the text contains no whitespace."""
        return sstr(self.domain.to_sympy(x)).replace("**", "^").replace(" ", "")

    def key(self, x):
        return self.format(x)
