"""Parsers for field presentations, field elements and differential polynomials.

Field presentations::

    GF(5)(;t)        GF(5)(t), dt = 1
    GF(3)(c;t)       GF(3)(c)(t), dc = 0, dt = 1
    GF(2)(t1,t2)     trivial derivation

Expressions use ``+ - * / ^`` and parentheses; derivatives are written
``x'``, ``x''`` or ``d(x,k)``.  Division is only allowed by elements of K.
"""

from __future__ import annotations

import re

from . import errors
from .diffpoly import DiffRing
from .field import FieldPresentation

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FIELD = re.compile(r"\s*GF\(\s*(\d+)\s*\)\s*\((.*)\)\s*\Z")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def parse_field(text):
    match = _FIELD.match(text)
    if not match:
        raise errors.ParseError("expected GF(<p>)(<gens>[;t])", 0, text)
    p = int(match.group(1))
    inner = match.group(2)
    inner_pos = match.start(2)
    head, sep, tail = inner.partition(";")
    if sep and tail.strip() != "t":
        raise errors.ParseError("only 't' may follow ';'", inner_pos + len(head) + 1, text)
    names = []
    offset = inner_pos
    if head.strip():
        for piece in head.split(","):
            name = piece.strip()
            if not _IDENT.match(name):
                raise errors.ParseError(f"invalid generator name {name!r}", offset, text)
            names.append(name)
            offset += len(piece) + 1
    try:
        return FieldPresentation(p, tuple(names), bool(sep))
    except errors.PreconditionError as exc:
        err = errors.ParseError(str(exc), match.start(1) if isinstance(
            exc, errors.NonPrimeCharacteristic) else inner_pos, text)
        err._kind = exc.kind
        raise err from exc


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match.group(0).strip() == "":
            break
        start = match.start(match.lastindex)
        if match.group(1) is not None:
            tokens.append(("num", int(match.group(1)), start))
        elif match.group(2) is not None:
            tokens.append(("ident", match.group(2), start))
        else:
            ch = match.group(3)
            if ch not in "+-*/^(),'":
                raise errors.ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.tokens[self.i + k]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return errors.ParseError(message, tok[2], self.text)

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise self.error(f"expected {kind!r}", tok)
        return tok

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.next()
            rhs = self.factor()
            if op[0] == "*":
                value = value * rhs
            else:
                if not rhs.in_K() or rhs.is_zero():
                    raise self.error("division only by nonzero elements of the field", op)
                value = value.scale(rhs.constant_value().inverse())
        return value

    def factor(self):
        if self.peek()[0] == "-":
            self.next()
            return -self.factor()
        if self.peek()[0] == "+":
            self.next()
            return self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.next()
            if tok[0] != "num":
                raise self.error("exponent must be a nonnegative integer", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.next()
        kind, value, _ = tok
        ring = self.ring
        if kind == "num":
            return ring.const(value)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "ident":
            if value == "d" and self.peek()[0] == "(" and "d" not in ring.names:
                self.next()
                name_tok = self.expect("ident")
                self.expect(",")
                order_tok = self.expect("num")
                self.expect(")")
                return self._variable(name_tok, order_tok[1])
            primes = 0
            while self.peek()[0] == "'":
                self.next()
                primes += 1
            if value in ring.names:
                return self._variable(tok, primes)
            if primes:
                raise self.error("derivative marks apply only to differential variables", tok)
            if value in ring.field.gens:
                return ring.const(ring.field.gen(value))
            raise self.error(f"unknown symbol {value!r}", tok)
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {value!r}", tok)

    def _variable(self, tok, order):
        name = tok[1]
        if name not in self.ring.names:
            raise self.error(f"{name!r} is not a differential variable", tok)
        return self.ring.var(self.ring.names.index(name), order)


def parse_dpoly(text, ring):
    if not isinstance(ring, DiffRing):
        ring = DiffRing(ring)
    return _Parser(text, ring).parse()


def parse_element(text, field):
    value = _Parser(text, DiffRing(field, ())).parse()
    return value.constant_value()


def split_top_level(text, sep=","):
    """Split on separators outside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [part.strip() for part in parts if part.strip()]


def parse_element_tuple(text, field):
    return tuple(parse_element(part, field) for part in split_top_level(text))
