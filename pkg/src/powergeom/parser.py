"""Recursive-descent parser for polynomial second-order ODE text.

Grammar (whitespace insignificant)::

    equation := expr ('=' expr)?
    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := ('+' | '-') factor | base ('^' uint)?
    base     := 'z' | 'w' | "w'" | "w''" | 'i' | number | ident
              | 'diff' '(' 'w' ',' 'z' ',' uint ')' | '(' expr ')'

``lhs = rhs`` is read as ``lhs - rhs``.  ``**`` is accepted for ``^``.
Division is allowed only by a single monomial with a nonzero numeric
coefficient and no derivative factors; it produces negative powers of z, w.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from fractions import Fraction

from powergeom.coefficient import Coefficient, GaussianRational, I
from powergeom.diffsum import DiffMonomial, DifferentialSum, expand_and_collect

RESERVED = frozenset({"z", "w", "i", "diff"})

_UNICODE_OPERATORS = {
    "′": "'",   # prime
    "″": "''",  # double prime
    "’": "'",
    "−": "-",   # minus sign
    "·": "*",
    "⋅": "*",
    "×": "*",
}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<decimal>\d+\.\d*|\.\d+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)(?P<primes>'*)
  | (?P<op>\*\*|[-+*/^(),=])
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    """Malformed equation text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")

    def pretty(self) -> str:
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int
    primes: int = 0


def normalize_identifier(name: str) -> str:
    """Map non-ASCII letters to ASCII names (Greek alpha -> 'alpha')."""
    out = []
    for ch in name:
        if ch.isascii():
            out.append(ch)
            continue
        uname = unicodedata.name(ch, "")
        if uname.startswith("GREEK SMALL LETTER "):
            out.append(uname.removeprefix("GREEK SMALL LETTER ").split()[0].lower())
        elif uname.startswith("GREEK CAPITAL LETTER "):
            out.append(uname.removeprefix("GREEK CAPITAL LETTER ").split()[0].capitalize())
        else:
            out.append(ch)
    return "".join(out)


def _normalize_text(text: str) -> str:
    """Rewrite unicode operators and Greek letters; keeps error positions
    meaningful for ASCII input."""
    chars = []
    for ch in text:
        if ch in _UNICODE_OPERATORS:
            chars.append(_UNICODE_OPERATORS[ch])
        elif not ch.isascii() and ch.isalpha():
            chars.append(normalize_identifier(ch))
        else:
            chars.append(ch)
    return "".join(chars)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind == "primes":
            kind = "ident"
        if kind == "decimal":
            raise ParseError("decimal literals are not supported; use p/q", text, pos)
        if kind == "ident":
            name, primes = m.group("ident"), len(m.group("primes"))
            if primes and name != "w":
                raise ParseError(f"prime applied to {name!r}; only w' and w'' are allowed",
                                 text, pos)
            if primes > 2:
                raise ParseError("derivative order above 2 is not supported", text, pos)
            tokens.append(Token("ident", name, pos, primes))
        elif kind != "ws":
            value = m.group(kind)
            tokens.append(Token("op" if kind == "op" else kind, "^" if value == "**" else value, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _derivative(order: int) -> DifferentialSum:
    keys = {0: (0, 1, 0, 0), 1: (0, 0, 1, 0), 2: (0, 0, 0, 1)}
    return DifferentialSum.monomial(1, *keys[order])


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, self.text, tok.pos)

    def accept(self, value: str) -> Token | None:
        if self.tok.kind == "op" and self.tok.value == value:
            tok = self.tok
            self.i += 1
            return tok
        return None

    def expect(self, value: str) -> Token:
        tok = self.accept(value)
        if tok is None:
            raise self.error(f"expected {value!r}, found {self.tok.value or 'end of input'!r}")
        return tok

    def equation(self) -> DifferentialSum:
        lhs = self.expr()
        if self.accept("="):
            lhs = lhs - self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected token {self.tok.value!r}")
        return lhs

    def expr(self) -> DifferentialSum:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> DifferentialSum:
        result = self.factor()
        while True:
            if self.accept("*"):
                result = result * self.factor()
            elif self.tok.kind == "op" and self.tok.value == "/":
                tok = self.tok
                self.i += 1
                result = result * self._reciprocal(self.factor(), tok)
            else:
                return result

    def _reciprocal(self, divisor: DifferentialSum, tok: Token) -> DifferentialSum:
        if len(divisor) != 1:
            raise self.error(
                "division is only allowed by a single monomial; "
                "clear denominators before parsing", tok)
        (m,) = divisor.terms
        if m.a or m.b:
            raise self.error("cannot divide by a derivative of w", tok)
        if not m.coeff.is_constant():
            raise self.error("cannot divide by a parameter; clear denominators first", tok)
        inv = Coefficient.constant(m.coeff.constant_value().inverse())
        return expand_and_collect([DiffMonomial(inv, -m.r, -m.s, 0, 0)])

    def factor(self) -> DifferentialSum:
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        base = self.base()
        if self.tok.kind == "op" and self.tok.value == "^":
            self.i += 1
            tok = self.tok
            if tok.kind != "num":
                raise self.error("exponent must be a nonnegative integer literal "
                                 "(fractional or symbolic exponents are not supported)")
            self.i += 1
            base = base ** int(tok.value)
        return base

    def base(self) -> DifferentialSum:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return DifferentialSum.monomial(Fraction(int(tok.value)))
        if tok.kind == "ident":
            self.i += 1
            if tok.value == "w":
                return _derivative(tok.primes)
            if tok.value == "z":
                return DifferentialSum.monomial(1, r=1)
            if tok.value == "i":
                return DifferentialSum.monomial(I)
            if tok.value == "diff":
                return self._diff_call()
            return DifferentialSum.monomial(Coefficient.parameter(tok.value))
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"unexpected {tok.value or 'end of input'!r}")

    def _diff_call(self) -> DifferentialSum:
        self.expect("(")
        if not (self.tok.kind == "ident" and self.tok.value == "w" and not self.tok.primes):
            raise self.error("diff() expects w as its first argument")
        self.i += 1
        self.expect(",")
        if not (self.tok.kind == "ident" and self.tok.value == "z"):
            raise self.error("diff() expects z as its second argument")
        self.i += 1
        order = 1
        if self.accept(","):
            tok = self.tok
            if tok.kind != "num":
                raise self.error("derivative order must be an integer literal")
            order = int(tok.value)
            if order > 2:
                raise self.error("derivative order above 2 is not supported", tok)
            self.i += 1
        self.expect(")")
        return _derivative(order)


def parse_differential_sum(text: str) -> DifferentialSum:
    """Parse equation text into its canonical, fully expanded sum."""
    return _Parser(_normalize_text(text)).equation()


def parse_scalar(text: str) -> GaussianRational:
    """Parse a parameter-free numeric literal such as ``-3/2`` or ``1+2*i``."""
    s = parse_differential_sum(text)
    if not s:
        return GaussianRational()
    if len(s) != 1 or s.terms[0].key != (0, 0, 0, 0) or not s.terms[0].coeff.is_constant():
        raise ParseError(f"{text!r} is not a numeric constant", text, 0)
    return s.terms[0].coeff.constant_value()
