"""
Parser for metric coefficient expressions.

    expr   := group ( "/" group )?
    group  := coeff "*"? "(" poly ")" | "(" poly ")" | poly
    poly   := ("+"|"-")? term ( ("+"|"-") term )*
    term   := coeff ( "*"? tpow )? | tpow
    tpow   := "t" ( "^" uint )?
    coeff  := uint "/" uint | uint ( "." digits )? | name

Decimals are exact (0.01 is 1/100). A name is a placeholder coefficient bound at parse time,
which is how search families are written: "alpha", "1 + beta*t", "beta*(1 + t)".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from pyparsing import Literal, Opt, ParseBaseException, Regex, Suppress, ZeroOrMore

from tangentpsc.exactalg import Polynomial, RationalFunction


class MetricExpressionError(ValueError):
    """Raised when a coefficient expression does not parse or references an unbound placeholder."""


@dataclass(frozen=True)
class _Placeholder:
    name: str


@dataclass(frozen=True)
class _Power:
    degree: int


@dataclass(frozen=True)
class _Term:
    coefficient: Union[Fraction, _Placeholder]
    degree: int


@dataclass(frozen=True)
class _Poly:
    terms: tuple[tuple[int, _Term], ...]
    factor: Union[Fraction, _Placeholder] = Fraction(1)


@dataclass(frozen=True)
class _Quotient:
    num: _Poly
    den: Optional[_Poly]


def _term_action(tokens):
    coefficient, degree = Fraction(1), 0
    for token in tokens:
        if isinstance(token, _Power):
            degree = token.degree
        else:
            coefficient = token
    return _Term(coefficient, degree)


def _poly_action(tokens):
    tokens = list(tokens)
    sign = 1
    if tokens and tokens[0] in ('+', '-'):
        sign = -1 if tokens.pop(0) == '-' else 1
    terms = [(sign, tokens.pop(0))]
    while tokens:
        op, term = tokens.pop(0), tokens.pop(0)
        terms.append((-1 if op == '-' else 1, term))
    return _Poly(tuple(terms))


def _quotient_action(tokens):
    return _Quotient(tokens[0], tokens[1] if len(tokens) > 1 else None)


def _build_grammar():
    uint = Regex(r"\d+")
    ratio = Regex(r"\d+\s*/\s*\d+").set_parse_action(lambda tokens: Fraction(tokens[0].replace(' ', '')))
    decimal = Regex(r"\d+(?:\.\d+)?").set_parse_action(lambda tokens: Fraction(tokens[0]))
    name = Regex(r"(?!t(?![A-Za-z0-9_]))[A-Za-z_][A-Za-z0-9_]*").set_parse_action(
        lambda tokens: _Placeholder(tokens[0]))
    coeff = ratio | decimal | name

    t_symbol = Regex(r"t(?![A-Za-z0-9_])")
    tpow = (t_symbol + Opt(Suppress("^") + uint)).set_parse_action(
        lambda tokens: _Power(int(tokens[1]) if len(tokens) > 1 else 1))
    term = ((coeff + Opt(Opt(Suppress("*")) + tpow)) | tpow).set_parse_action(_term_action)

    addop = Literal("+") | Literal("-")
    poly = (Opt(addop) + term + ZeroOrMore(addop + term)).set_parse_action(_poly_action)
    parenthesized = Suppress("(") + poly + Suppress(")")
    scaled = (coeff + Opt(Suppress("*")) + parenthesized).set_parse_action(
        lambda tokens: _Poly(tokens[1].terms, tokens[0]))
    group = scaled | parenthesized | poly
    return (group + Opt(Suppress("/") + group)).set_parse_action(_quotient_action)


_GRAMMAR = _build_grammar()


def _resolve(coefficient: Union[Fraction, _Placeholder], bindings: Mapping[str, Fraction]) -> Fraction:
    if isinstance(coefficient, _Placeholder):
        if coefficient.name not in bindings:
            raise MetricExpressionError(f"Unbound placeholder '{coefficient.name}'")
        return Fraction(bindings[coefficient.name])
    return coefficient


def _to_polynomial(node: _Poly, bindings: Mapping[str, Fraction]) -> Polynomial:
    result = Polynomial()
    for sign, term in node.terms:
        result = result + Polynomial.monomial(term.degree, sign * _resolve(term.coefficient, bindings))
    return result.scale(_resolve(node.factor, bindings))


def placeholders(text: str) -> list[str]:
    """Placeholder names in order of first appearance."""
    names: list[str] = []
    quotient = _parse_tree(text)
    for node in (quotient.num, quotient.den):
        if node is None:
            continue
        for coefficient in [node.factor] + [term.coefficient for _, term in node.terms]:
            if isinstance(coefficient, _Placeholder) and coefficient.name not in names:
                names.append(coefficient.name)
    return names


def _parse_tree(text: str) -> _Quotient:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except (ParseBaseException, ZeroDivisionError) as e:
        raise MetricExpressionError(f"Cannot parse expression '{text}': {e}") from e


def parse_expression(text: str, bindings: Optional[Mapping[str, Fraction]] = None) -> RationalFunction:
    """
    Parse a coefficient expression into an exact RationalFunction of t
    :param text: The expression, e.g. '1/100', '1 + t', '(1)/(1 + 2t)'
    :param bindings: Values of placeholder names used as coefficients
    """
    quotient = _parse_tree(text)
    bindings = bindings or {}
    num = _to_polynomial(quotient.num, bindings)
    den = Polynomial.constant(1) if quotient.den is None else _to_polynomial(quotient.den, bindings)
    if den.is_zero():
        raise MetricExpressionError(f"Expression '{text}' has a zero denominator")
    return RationalFunction(num, den)


def parse_rational(text: str) -> Fraction:
    """A plain rational literal: '-1', '1/100', '0.01', '1e-6'."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise MetricExpressionError(f"Not a rational number: '{text}'") from e
