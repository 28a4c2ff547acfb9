from __future__ import annotations

import re
from collections.abc import Sequence
from tokenize import TokenError

from sympy import Poly, Rational, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import PolynomialError

from .errors import NotInvertibleError, PolynomialParseError
from .field import inverse, symmetric
from .polynomial import Polynomial

_ALLOWED = re.compile(r"^[\w\s+\-*^/().]*$")
_IDENTIFIER = re.compile(r"[A-Za-z_]\w*")
_TRANSFORMATIONS = (*standard_transformations, convert_xor)


def parse_polynomial(text: str, variables: Sequence[str], modulus: int) -> Polynomial:
    """Parse polynomial text such as `x^2*y - 3*y + 1` over the prime field.

    Rational coefficients are mapped to the field; every identifier must be one of `variables`.

    Raises:
        PolynomialParseError: On malformed text, unknown names or non-polynomial expressions.
    """
    if not text.strip():
        msg = "Empty polynomial"
        raise PolynomialParseError(msg)

    if not _ALLOWED.match(text):
        msg = f"Unexpected character in polynomial {text!r}"
        raise PolynomialParseError(msg)

    for name in _IDENTIFIER.findall(text):
        if name not in variables:
            msg = f"Unknown variable {name!r} in {text!r}; declared variables are {', '.join(variables)}"
            raise PolynomialParseError(msg)

    symbols = [Symbol(name) for name in variables]
    try:
        expr = parse_expr(text, local_dict=dict(zip(variables, symbols)), transformations=_TRANSFORMATIONS)
        poly = Poly(expr, *symbols, domain="QQ")
    except (SyntaxError, TypeError, ValueError, TokenError, PolynomialError) as err:
        msg = f"Not a polynomial: {text!r}"
        raise PolynomialParseError(msg) from err

    terms = {}
    for monomial, coefficient in poly.terms():
        rational = Rational(coefficient)
        try:
            terms[tuple(monomial)] = int(rational.p) * inverse(int(rational.q), modulus)
        except NotInvertibleError as err:
            msg = f"Coefficient {rational} has a denominator divisible by {modulus}"
            raise PolynomialParseError(msg) from err

    return Polynomial(terms, nvars=len(variables), modulus=modulus)


def format_polynomial(polynomial: Polynomial, variables: Sequence[str]) -> str:
    """Render a polynomial in the text grammar, terms descending, coefficients in symmetric range.

    Examples:
        >>> p = Polynomial({(2, 0): 1, (0, 1): -1}, nvars=2, modulus=7)
        >>> format_polynomial(p, ["x", "y"])
        'x^2 - y'
    """
    if polynomial.is_zero():
        return "0"

    pieces = []
    for coefficient, monomial in polynomial.terms:
        value = symmetric(int(coefficient), polynomial.modulus)
        factors = "*".join(name if e == 1 else f"{name}^{e}" for name, e in zip(variables, monomial) if e)
        magnitude = abs(value)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = factors
        else:
            body = f"{magnitude}*{factors}"

        pieces.append(("-" if value < 0 else "+", body))

    sign, body = pieces[0]
    text = f"-{body}" if sign == "-" else body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"

    return text
