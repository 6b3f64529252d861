"""Grey-number expression calculator: tokenizer, parser, evaluator.

Grammar (whitespace insignificant, operators left-associative, '*' and '/'
bind tighter than '+' and '-'):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := interval | number | '(' expr ')'
    interval := '[' number ',' number ']'

A bare number x denotes the white number [x, x]. A '-' directly followed by
a digit starts a negative number literal when it cannot be a binary minus
(start of input, or right after an operator, '(', '[' or ',').
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .grey import GreyNumber, IntervalError, ZeroDivisorError


class GnSyntaxError(ValueError):
    """Unparseable expression text; ``position`` is the offset of the fault."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class Literal:
    value: GreyNumber


@dataclass(frozen=True)
class BinaryOp:
    op: str  # one of + - * /
    left: GnExpression
    right: GnExpression


GnExpression = Union[Literal, BinaryOp]


@dataclass(frozen=True)
class _Token:
    kind: str  # "number", "+", "-", "*", "/", "(", ")", "[", "]", ",", "end"
    text: str
    position: int


_NUMBER = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_SIGN_CONTEXT = {None, "+", "-", "*", "/", "(", "[", ","}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+*/()[],":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch == "-":
            prev = tokens[-1].kind if tokens else None
            if prev in _SIGN_CONTEXT and i + 1 < len(text) and (
                text[i + 1].isdigit() or text[i + 1] == "."
            ):
                match = _NUMBER.match(text, i + 1)
                assert match is not None
                tokens.append(_Token("number", "-" + match.group(), i))
                i = match.end()
                continue
            tokens.append(_Token("-", "-", i))
            i += 1
            continue
        match = _NUMBER.match(text, i)
        if match:
            tokens.append(_Token("number", match.group(), i))
            i = match.end()
            continue
        raise GnSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self._tokens = tokens
        self._index = 0

    @property
    def _current(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._current
        self._index += 1
        return token

    def _expect(self, kind: str, what: str) -> _Token:
        token = self._current
        if token.kind != kind:
            raise GnSyntaxError(f"expected {what}", token.position)
        return self._advance()

    def parse(self) -> GnExpression:
        expression = self._expr()
        trailing = self._current
        if trailing.kind != "end":
            raise GnSyntaxError(f"unexpected {trailing.text!r} after expression", trailing.position)
        return expression

    def _expr(self) -> GnExpression:
        node = self._term()
        while self._current.kind in ("+", "-"):
            op = self._advance().kind
            node = BinaryOp(op, node, self._term())
        return node

    def _term(self) -> GnExpression:
        node = self._factor()
        while self._current.kind in ("*", "/"):
            op = self._advance().kind
            node = BinaryOp(op, node, self._factor())
        return node

    def _factor(self) -> GnExpression:
        token = self._current
        if token.kind == "number":
            self._advance()
            value = float(token.text)
            return Literal(GreyNumber(value, value))
        if token.kind == "[":
            return self._interval()
        if token.kind == "(":
            self._advance()
            node = self._expr()
            self._expect(")", "')'")
            return node
        raise GnSyntaxError("expected a number, an interval or '('", token.position)

    def _interval(self) -> Literal:
        opening = self._expect("[", "'['")
        lower = float(self._expect("number", "a number").text)
        self._expect(",", "','")
        upper = float(self._expect("number", "a number").text)
        self._expect("]", "']'")
        try:
            return Literal(GreyNumber(lower, upper))
        except IntervalError as exc:
            raise GnSyntaxError(f"invalid interval literal: {exc}", opening.position) from None


def parse_expression(text: str) -> GnExpression:
    """Parse expression text into a tree of literals and binary operations."""
    return _Parser(_tokenize(text)).parse()


def eval_expression(expression: GnExpression) -> GreyNumber:
    """Evaluate a parse tree bottom-up with grey-number arithmetic."""
    if isinstance(expression, Literal):
        return expression.value
    left = eval_expression(expression.left)
    right = eval_expression(expression.right)
    if expression.op == "+":
        return left + right
    if expression.op == "-":
        return left - right
    if expression.op == "*":
        return left * right
    try:
        return left / right
    except ZeroDivisorError:
        raise ZeroDivisorError(
            f"division by interval containing zero in {format_expression(expression)}"
        ) from None


def calc(text: str) -> GreyNumber:
    """Parse and evaluate in one step."""
    return eval_expression(parse_expression(text))


def format_expression(expression: GnExpression) -> str:
    """Render a tree back to parseable text (parse round-trips exactly).

    White-number literals print as bare numbers, other intervals as
    ``[lower, upper]``; binary operations are fully parenthesized.
    """
    if isinstance(expression, Literal):
        gn = expression.value
        if gn.is_white:
            return repr(gn.lower)
        return f"[{gn.lower!r}, {gn.upper!r}]"
    left = format_expression(expression.left)
    right = format_expression(expression.right)
    return f"({left} {expression.op} {right})"
