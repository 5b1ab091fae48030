"""Surface syntax for gross-numbers: tokenizer, recursive-descent parser,
evaluator and pretty-printer.

Grammar, lowest precedence first::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := NUMBER GROSSONE ('^' unary)?      # "2①^3" means 2*(①^3)
            | atom ('^' unary)?
    atom   := NUMBER | GROSSONE | '(' expr ')'

``GROSSONE`` is ``①``, ``G`` or any casing of ``grossone``.  Numbers are
integer or decimal literals and are read exactly (``3.1`` is 31/10).  The
typographic operators ``−``, ``·``, ``×`` and ``÷`` are accepted as aliases.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import (
    GROSSONE,
    GROSSONE_EXPONENT,
    GrossNumber,
    add,
    div,
    mul,
    neg,
    power,
    sub,
)
from .errors import NotRepresentable, ParseError

MAX_DEPTH = 200


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Grossone:
    pass


@dataclass(frozen=True)
class Neg:
    operand: Ast


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Ast
    right: Ast


Ast = Union[Num, Grossone, Neg, BinOp]


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, G, OP, LPAREN, RPAREN, END
    text: str
    pos: int  # 1-based character position
    value: Fraction | None = None


_OP_ALIASES = {"+": "+", "-": "-", "−": "-", "*": "*", "·": "*", "×": "*", "/": "/", "÷": "/", "^": "^"}
_NUMBER = re.compile(r"\d+(?:\.\d+)?")
_WORD = re.compile(r"[A-Za-z]+")


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch in _OP_ALIASES:
            tokens.append(Token("OP", _OP_ALIASES[ch], pos))
            i += 1
        elif ch == "(":
            tokens.append(Token("LPAREN", ch, pos))
            i += 1
        elif ch == ")":
            tokens.append(Token("RPAREN", ch, pos))
            i += 1
        elif ch == "①":
            tokens.append(Token("G", ch, pos))
            i += 1
        elif "0" <= ch <= "9":
            m = _NUMBER.match(text, i)
            tokens.append(Token("NUM", m.group(), pos, Fraction(m.group())))
            i = m.end()
        elif ch.isascii() and ch.isalpha():
            m = _WORD.match(text, i)
            word = m.group()
            if word != "G" and word.lower() != "grossone":
                raise ParseError(pos, f"unknown name {word!r}; expected a number, '①', 'G' or 'grossone'")
            tokens.append(Token("G", word, pos))
            i = m.end()
        else:
            raise ParseError(pos, f"unexpected character {ch!r}")
    tokens.append(Token("END", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def _is_op(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def _fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "END" else repr(t.text)
        raise ParseError(t.pos, f"expected {expected}, found {found}")

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError(self.tok.pos, f"expression nested deeper than {MAX_DEPTH} levels")

    def parse(self) -> Ast:
        node = self.expr()
        if self.tok.kind != "END":
            self._fail("an operator or end of input")
        return node

    def expr(self) -> Ast:
        node = self.term()
        while self._is_op("+", "-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Ast:
        node = self.unary()
        while self._is_op("*", "/"):
            op = self._advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Ast:
        self._enter()
        try:
            if self._is_op("-"):
                self._advance()
                return Neg(self.unary())
            return self.power()
        finally:
            self.depth -= 1

    def power(self) -> Ast:
        t = self.tok
        if t.kind == "NUM" and self.tokens[self.i + 1].kind == "G":
            self._advance()
            self._advance()
            g: Ast = Grossone()
            if self._is_op("^"):
                self._advance()
                g = BinOp("^", g, self.unary())
            return BinOp("*", Num(t.value), g)
        node = self.atom()
        if self._is_op("^"):
            self._advance()
            node = BinOp("^", node, self.unary())
        return node

    def atom(self) -> Ast:
        t = self.tok
        if t.kind == "NUM":
            self._advance()
            return Num(t.value)
        if t.kind == "G":
            self._advance()
            return Grossone()
        if t.kind == "LPAREN":
            self._advance()
            self._enter()
            try:
                node = self.expr()
            finally:
                self.depth -= 1
            if self.tok.kind != "RPAREN":
                self._fail("')'")
            self._advance()
            return node
        self._fail("a number, grossone or '('")


def parse(text: Union[str, bytes]) -> Ast:
    """Parse an expression; raises :class:`ParseError` on any bad input."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(exc.start + 1, "input is not valid UTF-8") from None
    return _Parser(text).parse()


def _eval_power(base: GrossNumber, exponent: GrossNumber) -> GrossNumber:
    if exponent == GROSSONE:
        return power(base, GROSSONE_EXPONENT)
    if not exponent.is_rational():
        raise NotRepresentable(f"exponent {exponent} is not a finite rational")
    return power(base, exponent.as_rational())


_BINARY = {"+": add, "-": sub, "*": mul, "/": div, "^": _eval_power}


def eval_ast(ast: Ast) -> GrossNumber:
    """Evaluate bottom-up with an explicit stack (long sums nest deeply)."""
    stack: list[tuple[Ast, bool]] = [(ast, False)]
    values: list[GrossNumber] = []
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Num):
            values.append(GrossNumber.from_scalar(node.value))
        elif isinstance(node, Grossone):
            values.append(GROSSONE)
        elif isinstance(node, Neg):
            if ready:
                values.append(neg(values.pop()))
            else:
                stack += [(node, True), (node.operand, False)]
        elif ready:
            right = values.pop()
            left = values.pop()
            values.append(_BINARY[node.op](left, right))
        else:
            stack += [(node, True), (node.right, False), (node.left, False)]
    return values[0]


def evaluate(text: Union[str, bytes]) -> GrossNumber:
    """Parse and evaluate in one step."""
    return eval_ast(parse(text))


# printing

STYLES = ("unicode", "ascii", "machine")


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _format_magnitude(c: Fraction, e: Fraction, unit: str) -> str:
    # c > 0 here; the sign is printed by the caller
    if e == 0:
        return str(c)
    g = unit if e == 1 else f"{unit}^{_format_exponent(e)}"
    head = g if c.numerator == 1 else f"{c.numerator}{g}"
    return head if c.denominator == 1 else f"{head}/{c.denominator}"


def rational_record(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def number_record(x: GrossNumber) -> dict:
    return {"terms": [{"c": rational_record(c), "p": rational_record(e)} for c, e in x.terms]}


def number_from_record(record: dict) -> GrossNumber:
    """Inverse of :func:`number_record`; input is validated to be canonical."""
    terms = tuple((Fraction(t["c"]), Fraction(t["p"])) for t in record["terms"])
    exps = [e for _, e in terms]
    if any(c == 0 for c, _ in terms) or any(a <= b for a, b in zip(exps, exps[1:])):
        raise ValueError("record is not in canonical form")
    return GrossNumber(terms)


def format_number(x: GrossNumber, style: str = "unicode") -> str:
    """Render a gross-number.

    ``unicode`` and ``ascii`` produce text the parser reads back to the
    same value; ``machine`` produces the JSON term record.
    """
    if style == "machine":
        return json.dumps(number_record(x), separators=(",", ":"))
    if style not in ("unicode", "ascii"):
        raise ValueError(f"unknown style {style!r}")
    if not x.terms:
        return "0"
    unit = "①" if style == "unicode" else "G"
    parts = []
    for i, (c, e) in enumerate(x.terms):
        body = _format_magnitude(abs(c), e, unit)
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)
