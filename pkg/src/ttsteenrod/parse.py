"""Expression parser for polynomials and generator lists.

Grammar (whitespace-insensitive)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := 'xi(' uint ')' | 'h(' uint ',' uint ')' | '0' | '1' | '(' expr ')'

``parse_poly_list`` accepts ``expr (',' expr)*`` for ideal generators.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

from .algebra import AlgebraError, Generator, Poly, RingPresentation, h, xi

CONTEXTS = ("ext", "steenrod", "mixed")


class ParseError(AlgebraError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


class _Parser:
    def __init__(self, text: str, context: str, ring: Optional[RingPresentation]):
        if context not in CONTEXTS:
            raise AlgebraError(f"unknown parse context {context!r}")
        self.text = text
        self.pos = 0
        self.context = context
        self.ring = ring

    # -- lexing helpers
    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _error(self, msg: str, pos: Optional[int] = None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def _expect(self, tok: str):
        self._skip()
        if not self.text.startswith(tok, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self._error(f"expected {tok!r}, found {found!r}")
        self.pos += len(tok)

    def _uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._error("expected a non-negative integer")
        return int(self.text[start:self.pos])

    # -- grammar
    def expr(self) -> Poly:
        acc = self.term()
        while self._peek() == "+":
            self.pos += 1
            acc = acc + self.term()
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self._peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self._peek() == "^":
            self.pos += 1
            at = self.pos
            e = self._uint()
            if e == 0:
                self._error("exponent 0 is not allowed", at)
            base = base ** e
        return base

    def atom(self) -> Poly:
        c = self._peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            inner = self.expr()
            self._expect(")")
            return inner
        if c == "0" or c == "1":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                self._error("integer literals are 0 or 1", start)
            return Poly.one() if c == "1" else Poly.zero()
        if self.text.startswith("xi", self.pos):
            self.pos += 2
            self._expect("(")
            n = self._uint()
            self._expect(")")
            return Poly.gen(self._generator(lambda: xi(n), start))
        if c == "h":
            self.pos += 1
            self._expect("(")
            t = self._uint()
            self._expect(",")
            s = self._uint()
            self._expect(")")
            return Poly.gen(self._generator(lambda: h(t, s), start))
        if not c:
            self._error("unexpected end of input")
        self._error(f"unexpected character {c!r}")

    def _generator(self, make, start: int) -> Generator:
        try:
            g = make()
        except AlgebraError as exc:
            self._error(str(exc), start)
        if g.kind == "xi" and self.context == "ext":
            self._error("xi-generators are not elements of an Ext ring", start)
        if g.kind == "h" and self.context == "steenrod":
            self._error("h-generators are not elements of the Steenrod algebra", start)
        if self.ring is not None and g.kind == "h" and g not in self.ring.varset:
            self._error(f"{g} is not a generator of the active ring", start)
        return g

    def finish(self):
        self._skip()
        if self.pos != len(self.text):
            self._error(f"unexpected {self.text[self.pos]!r}")


def parse_poly(text: str, ring: Optional[RingPresentation] = None, context: str = "ext") -> Poly:
    """Parse one polynomial; with a ring, the result is reduced modulo its relations."""
    p = _Parser(text, context, ring)
    out = p.expr()
    p.finish()
    return ring.normal_form(out) if ring is not None else out


def parse_poly_list(text: str, ring: Optional[RingPresentation] = None,
                    context: str = "ext") -> List[Poly]:
    """Comma-separated polynomials (commas inside ``h(t,s)`` belong to the generator)."""
    p = _Parser(text, context, ring)
    out = []
    if p._peek() == "":
        return out
    while True:
        e = p.expr()
        out.append(ring.normal_form(e) if ring is not None else e)
        if p._peek() != ",":
            break
        p.pos += 1
    p.finish()
    return out


def parse_generator(text: str) -> Generator:
    p = parse_poly(text, context="mixed")
    gens = p.generators
    if len(p.terms) != 1 or len(gens) != 1 or next(iter(p.terms)).total_degree != 1:
        raise ParseError(f"{text!r} is not a single generator", text, 0)
    return next(iter(gens))


def format_ideal(gens) -> str:
    return "(" + ", ".join(str(g) for g in gens) + ")"
