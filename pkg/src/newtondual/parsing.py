"""Polynomial expression parser and canonical renderer.

Grammar: terms joined by + and -.  A term is an optional rational
coefficient ("3", "2/5") and "*"-separated powers "x0^2", "y1".  No implicit
multiplication; whitespace is insignificant.  Variables are x0..x_{nx-1} and,
when a y-block is declared, y0..y_{ny-1}; a y_j maps to flat index nx + j.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, UndeclaredVariableError
from .poly import Polynomial


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text, nx, ny):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.nx = nx
        self.ny = ny
        self.nvars = nx + ny

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def parse(self):
        acc = {}
        sign = 1
        tok = self.peek()
        if tok.kind in "+-":
            self.take()
            sign = -1 if tok.kind == "-" else 1
        self._term(acc, sign)
        while True:
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.kind not in "+-":
                raise ParseError(f"expected '+' or '-', found {tok.text!r}",
                                 tok.line, tok.col)
            self.take()
            self._term(acc, -1 if tok.kind == "-" else 1)
        return Polynomial.from_dict(acc, self.nvars)

    def _term(self, acc, sign):
        coeff = Fraction(sign)
        expo = [0] * self.nvars
        tok = self.peek()
        if tok.kind == "int":
            coeff *= self._rational()
            if self.peek().kind == "*":
                self.take()
                self._powers(expo)
        elif tok.kind == "name":
            self._powers(expo)
        else:
            raise ParseError(f"expected a term, found {tok.text!r}", tok.line, tok.col)
        key = tuple(expo)
        acc[key] = acc.get(key, Fraction(0)) + coeff

    def _rational(self):
        tok = self.expect("int")
        value = Fraction(int(tok.text))
        if self.peek().kind == "/":
            self.take()
            den = self.expect("int")
            if int(den.text) == 0:
                raise ParseError("zero denominator", den.line, den.col)
            value /= int(den.text)
        return value

    def _powers(self, expo):
        self._power(expo)
        while self.peek().kind == "*":
            self.take()
            self._power(expo)

    def _power(self, expo):
        tok = self.expect("name")
        index = self._variable_index(tok)
        exponent = 1
        if self.peek().kind == "^":
            self.take()
            etok = self.expect("int")
            exponent = int(etok.text)
        expo[index] += exponent

    def _variable_index(self, tok):
        name = tok.text
        head, tail = name[0], name[1:]
        if head not in ("x", "y") or not tail.isdigit():
            raise ParseError(f"unknown symbol {name!r}", tok.line, tok.col)
        idx = int(tail)
        if head == "x":
            if idx >= self.nx:
                raise UndeclaredVariableError(
                    f"variable {name!r} outside declared x0..x{self.nx - 1}",
                    tok.line, tok.col)
            return idx
        if self.ny == 0:
            raise UndeclaredVariableError(
                f"no y-block declared for {name!r}", tok.line, tok.col)
        if idx >= self.ny:
            raise UndeclaredVariableError(
                f"variable {name!r} outside declared y0..y{self.ny - 1}",
                tok.line, tok.col)
        return self.nx + idx


def parse_polynomial(text, nx, ny=0):
    """Parse an expression over x0..x_{nx-1} (and y0..y_{ny-1} if ny > 0)."""
    return _Parser(text, nx, ny).parse()


def variable_name(index, nx):
    return f"x{index}" if index < nx else f"y{index - nx}"


def render_polynomial(p, nx=None, ny=0):
    """Canonical text form; parse_polynomial inverts it exactly."""
    if nx is None:
        nx = p.nvars - ny
    if nx + ny != p.nvars:
        raise ValueError(f"nx + ny = {nx + ny} does not match nvars = {p.nvars}")
    if not p.terms:
        return "0"
    chunks = []
    for expo, coeff in p.terms:
        factors = [f"{variable_name(i, nx)}^{e}" if e > 1 else variable_name(i, nx)
                   for i, e in enumerate(expo) if e]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        chunks.append(("- " if coeff < 0 else "+ ") + body)
    first = chunks[0]
    text = ("-" + first[2:]) if first.startswith("- ") else first[2:]
    for chunk in chunks[1:]:
        text += " " + chunk
    return text
