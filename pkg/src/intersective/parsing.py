"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insensitive, integers arbitrary precision):

    poly   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := 'x' | 'T' | integer | '(' poly ')'

'T' is legal only over F_q[T], where integer literals reduce mod p.
Implicit multiplication is rejected ("2x" is a syntax error), so integer
literals and 'T' can sit next to each other unambiguously.  Errors carry
the 0-based offset into the input.
"""

from .errors import EmptyInput, PolySyntaxError, UnknownSymbol
from .upoly import UPoly


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, message):
        raise PolySyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def parse(self):
        self.skip_ws()
        if self.peek() is None:
            raise EmptyInput()
        p = self.poly()
        self.skip_ws()
        if self.peek() is not None:
            self.error(f"unexpected '{self.peek()}'")
        return p

    def poly(self):
        self.skip_ws()
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            self.skip_ws()
            op = self.peek()
            if op == "+":
                self.pos += 1
                acc = acc + self.term()
            elif op == "-":
                self.pos += 1
                acc = acc - self.term()
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        b = self.base()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            return b ** self.uint()
        return b

    def base(self):
        self.skip_ws()
        ch = self.peek()
        if ch is None:
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            p = self.poly()
            self.skip_ws()
            self.expect(")")
            return p
        if ch.isdigit():
            return UPoly.constant(self.ring, self.ring.from_int(self.uint()))
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "x":
                return UPoly.gen(self.ring)
            if name == "T":
                if not self.ring.is_function_field:
                    raise UnknownSymbol("'T' is not legal over the integers", start)
                return UPoly.constant(self.ring, self.ring.T)
            raise UnknownSymbol(f"unknown symbol '{name}'", start)
        self.error(f"unexpected '{ch}'")

    def uint(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])


def parse_poly(text, ring):
    """Parse polynomial text into an expanded canonical UPoly over the ring."""
    return _Parser(text, ring).parse()
