"""Text format for coefficients and 1-forms.

Coefficients are rational expressions with ``+ - * / ^``, parentheses and
juxtaposition. A form is a signed sum of terms ``<coefficient> d<var>`` where
wedges are written ``d<u>^d<v>``; ``0`` is the zero form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from foliate.algebra.quadratic import QuadCoverRing, quad_reduce
from foliate.algebra.ratfun import RatFun
from foliate.exceptions import FormSyntaxError, UnknownVariable
from foliate.forms import DForm
from foliate.forms.dform import render_form

TOKEN_RE = re.compile(
    r"(?P<space>[ \t\r]+)|(?P<newline>\n)|(?P<number>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Token:
    """A lexical token with its 1-based position."""

    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, *, line: int = 1, column: int = 1) -> list[Token]:
    """Split text into tokens, whitespace dropped.

    ``line`` and ``column`` give the position of the first character so errors
    point into the enclosing document.
    """
    tokens = []
    pos = 0
    line_start = 0
    first_column = column
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        col = first_column + pos - line_start
        if match is None:
            raise FormSyntaxError(
                f"Unexpected character {text[pos]!r}", line=line, column=col
            )
        kind = match.lastgroup or ""
        if kind == "newline":
            line += 1
            line_start = match.end()
            first_column = 1
        elif kind != "space":
            tokens.append(Token(kind, match.group(), line, col))
        pos = match.end()
    return tokens


def check_declarations(variables: Iterable[str]) -> tuple[str, ...]:
    """Validate declared names; d<var> may not be a declared name itself."""
    names = tuple(variables)
    seen = set()
    for name in names:
        if not NAME_RE.match(name):
            raise FormSyntaxError(f"Invalid variable name {name!r}", line=1, column=1)
        if name in seen:
            raise FormSyntaxError(f"Variable {name} declared twice", line=1, column=1)
        seen.add(name)
    for name in names:
        if f"d{name}" in seen:
            raise FormSyntaxError(
                f"Variable d{name} clashes with the differential of {name}",
                line=1,
                column=1,
            )
    return names


class _Parser:
    """Recursive descent over a token list."""

    def __init__(
        self, tokens: list[Token], variables: tuple[str, ...], forms: tuple[str, ...]
    ):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables
        self.known = set(variables)
        self.forms = set(forms)

    # token helpers

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Token | None = None) -> FormSyntaxError:
        token = token or self.peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            column = last.column + len(last.text) if last else 1
            return FormSyntaxError(
                f"{message} at end of input", line=line, column=column
            )
        return FormSyntaxError(
            f"{message}, got {token.text!r}", line=token.line, column=token.column
        )

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token is None or token.text != text:
            raise self.error(f"Expected {text!r}")
        return self.advance()

    def is_differential(self, token: Token | None) -> bool:
        if token is None or token.kind != "name":
            return False
        if token.text in self.known:
            return False
        if token.text.startswith("d"):
            if token.text[1:] in self.forms:
                return True
            if token.text[1:] in self.known:
                raise UnknownVariable(
                    f"d{token.text[1:]} is not a coordinate differential",
                    line=token.line,
                    column=token.column,
                )
            if len(token.text) > 1:
                raise UnknownVariable(
                    f"Differential of undeclared variable {token.text[1:]}",
                    line=token.line,
                    column=token.column,
                )
        return False

    def starts_atom(self, token: Token | None) -> bool:
        if token is None or self.is_differential(token):
            return False
        return token.kind in ("number", "name") or token.text == "("

    # coefficients

    def expression(self) -> RatFun:
        token = self.peek()
        negate = False
        if token is not None and token.text in "+-" and token.kind == "op":
            negate = self.advance().text == "-"
        value = self.product()
        if negate:
            value = -value
        while (token := self.peek()) is not None and token.text in ("+", "-"):
            self.advance()
            rhs = self.product()
            value = value + rhs if token.text == "+" else value - rhs
        return value

    def product(self) -> RatFun:
        value = self.power()
        while True:
            token = self.peek()
            if token is not None and token.text in ("*", "/"):
                self.advance()
                rhs = self.power()
                if token.text == "/" and rhs.is_zero:
                    raise FormSyntaxError(
                        "Division by zero", line=token.line, column=token.column
                    )
                value = value * rhs if token.text == "*" else value / rhs
            elif self.starts_atom(token):
                value = value * self.power()
            else:
                return value

    def power(self) -> RatFun:
        base = self.atom()
        token = self.peek()
        if token is None or token.text != "^":
            return base
        self.advance()
        negative = False
        token = self.peek()
        if token is not None and token.text == "-":
            self.advance()
            negative = True
        token = self.peek()
        if token is None or token.kind != "number":
            raise self.error("Expected an integer exponent")
        exponent = int(self.advance().text)
        if negative and base.is_zero:
            raise FormSyntaxError(
                "Negative power of zero", line=token.line, column=token.column
            )
        return base ** (-exponent if negative else exponent)

    def atom(self) -> RatFun:
        token = self.peek()
        if token is None:
            raise self.error("Expected a number, a variable or '('")
        if token.kind == "number":
            self.advance()
            return RatFun.constant(int(token.text))
        if token.kind == "name":
            if self.is_differential(token):
                raise self.error("Differential inside a coefficient")
            if token.text not in self.known:
                raise UnknownVariable(
                    f"Undeclared variable {token.text}",
                    line=token.line,
                    column=token.column,
                )
            self.advance()
            return RatFun.var(token.text, self.variables)
        if token.text == "(":
            self.advance()
            value = self.expression()
            self.expect(")")
            return value
        raise self.error("Expected a number, a variable or '('")

    # forms

    def basis(self) -> tuple[str, ...]:
        names = [self.advance().text[1:]]
        while (token := self.peek()) is not None and token.text == "^":
            self.advance()
            following = self.peek()
            if not self.is_differential(following):
                raise self.error("Expected a differential after '^'", following)
            names.append(self.advance().text[1:])
        return tuple(names)

    def form_term(self) -> tuple[tuple[str, ...], RatFun]:
        token = self.peek()
        if self.is_differential(token):
            return self.basis(), RatFun.constant(1)
        coefficient = self.product()
        token = self.peek()
        if not self.is_differential(token):
            raise self.error("Expected a differential")
        return self.basis(), coefficient

    def form(self) -> list[tuple[tuple[str, ...], RatFun]]:
        token = self.peek()
        if token is not None and token.text == "0" and len(self.tokens) == 1:
            self.advance()
            return []
        sign = 1
        if token is not None and token.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        terms = []
        while True:
            key, coefficient = self.form_term()
            terms.append((key, coefficient if sign > 0 else -coefficient))
            token = self.peek()
            if token is None:
                return terms
            if token.text not in ("+", "-"):
                raise self.error("Expected '+' or '-' between terms")
            sign = -1 if self.advance().text == "-" else 1

    def finish(self) -> None:
        if self.peek() is not None:
            raise self.error("Unexpected trailing input")


def parse_coefficient(
    text: str, variables: Iterable[str], *, line: int = 1, column: int = 1
) -> RatFun:
    """A rational function in the declared variables."""
    names = check_declarations(variables)
    parser = _Parser(tokenize(text, line=line, column=column), names, ())
    if not parser.tokens:
        raise FormSyntaxError("Empty expression", line=line, column=column)
    value = parser.expression()
    parser.finish()
    return value


def parse_form(
    text: str,
    variables: Iterable[str],
    *,
    ring: QuadCoverRing | None = None,
    line: int = 1,
    column: int = 1,
) -> DForm:
    """A differential form in the declared variables.

    On a cover ring the generator may occur in coefficients but has no
    differential; coefficients are reduced by the relation.
    """
    coordinates = check_declarations(variables)
    names = coordinates + ((ring.generator,) if ring is not None else ())
    parser = _Parser(tokenize(text, line=line, column=column), names, coordinates)
    if not parser.tokens:
        raise FormSyntaxError("Empty form", line=line, column=column)
    terms = parser.form()
    parser.finish()
    arities = {len(key) for key, _ in terms}
    if len(arities) > 1:
        raise FormSyntaxError(
            f"Terms of different arity {sorted(arities)}", line=line, column=column
        )
    arity = arities.pop() if arities else 1
    if ring is None:
        return DForm(arity, terms, coordinates)
    reduced = [(key, quad_reduce(coeff, ring)) for key, coeff in terms]
    return DForm(arity, reduced, coordinates, ring)


def parse_point(text: str) -> tuple[Fraction, ...]:
    """Comma separated rationals."""
    try:
        return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormSyntaxError(
            f"Invalid point {text!r}: {exc}", line=1, column=1
        ) from exc


__all__ = [
    "parse_coefficient",
    "parse_form",
    "parse_point",
    "render_form",
    "tokenize",
]
