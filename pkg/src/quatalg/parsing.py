"""Expression language for polynomials and quaternions, plus formatters.

Grammar (whitespace between tokens ignored; juxtaposition is NOT
multiplication, an explicit '*' is required):

    poly     := term (('+' | '-') term)*
    term     := ('-')? factor ('*' factor)*
    factor   := atom ('^' nat)?
    atom     := rational | 'i' | 'j' | 'k' | 'z' | '(' poly ')'
    rational := int ('/' posint)?

'k' denotes the basis element ij on input and output.  The formatter
orders terms by (degree, lexicographic index word) and prints every
coefficient as a reduced rational, so parse(format(p)) == p.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import BASIS_NAMES, AlgebraParams, Quat
from .errors import DivisionByZeroLiteral, ParseError
from .freepoly import FreePoly
from .genpoly import GenPoly


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take(self):
        ch = self.peek()
        if ch is not None:
            self.pos += 1
        return ch

    def expect(self, ch: str):
        self.skip_ws()
        pos = self.pos
        got = self.take()
        if got != ch:
            raise ParseError(f"expected {ch!r}, found {got!r}", pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


class _Parser:
    def __init__(self, text: str, params: AlgebraParams):
        self.scan = _Scanner(text)
        self.params = params

    def parse(self) -> GenPoly:
        poly = self.poly()
        self.scan.skip_ws()
        if self.scan.pos != len(self.scan.text):
            raise ParseError(
                f"unexpected {self.scan.text[self.scan.pos]!r}", self.scan.pos
            )
        return poly

    def poly(self) -> GenPoly:
        acc = self.term()
        while True:
            ch = self.scan.peek()
            if ch == "+":
                self.scan.take()
                acc = acc + self.term()
            elif ch == "-":
                self.scan.take()
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> GenPoly:
        negate = False
        if self.scan.peek() == "-":
            self.scan.take()
            negate = True
        acc = self.factor()
        while self.scan.peek() == "*":
            self.scan.take()
            acc = acc * self.factor()
        return -acc if negate else acc

    def factor(self) -> GenPoly:
        base = self.atom()
        if self.scan.peek() == "^":
            self.scan.take()
            exponent = self.scan.integer()
            return base ** exponent
        return base

    def atom(self) -> GenPoly:
        ch = self.scan.peek()
        pos = self.scan.pos
        if ch is None:
            raise ParseError("unexpected end of input", pos)
        if ch == "(":
            self.scan.take()
            inner = self.poly()
            self.scan.expect(")")
            return inner
        if ch.isdigit():
            return self.rational()
        if ch in ("i", "j", "k"):
            self.scan.take()
            index = {"i": 1, "j": 2, "k": 3}[ch]
            return GenPoly.from_quat(Quat.basis(self.params, index))
        if ch == "z":
            self.scan.take()
            return GenPoly.z(self.params)
        raise ParseError(f"unexpected {ch!r}", pos)

    def rational(self) -> GenPoly:
        num = self.scan.integer()
        if self.scan.peek() == "/":
            self.scan.take()
            pos = self.scan.pos
            den = self.scan.integer()
            if den == 0:
                raise DivisionByZeroLiteral("rational literal with denominator zero", pos)
            return GenPoly.constant(self.params, Fraction(num, den))
        return GenPoly.constant(self.params, Fraction(num))


def parse_poly(text: str, params: AlgebraParams) -> GenPoly:
    """Parse an expression into a general polynomial."""
    return _Parser(text, params).parse()


def parse_quat(text: str, params: AlgebraParams) -> Quat:
    """Parse a z-free expression into an algebra element."""
    poly = parse_poly(text, params)
    degree = poly.degree()
    if degree is not None and degree > 0:
        raise ParseError("expression contains z but a constant was expected")
    coords = [Fraction(0)] * 4
    for word, coeff in poly.terms.items():
        coords[word[0]] = coeff
    return Quat(params, *coords)


def format_scalar(value: Fraction) -> str:
    return str(value)


def _term_text(word, coeff: Fraction) -> str:
    parts = [str(coeff)]
    for t, b in enumerate(word):
        if t > 0:
            parts.append("z")
        if b:
            parts.append(BASIS_NAMES[b])
    return "*".join(parts)


def format_poly(poly: GenPoly) -> str:
    """Canonical text: terms sorted by (degree, lexicographic word)."""
    if not poly.terms:
        return "0"
    items = sorted(poly.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return " + ".join(_term_text(w, c) for w, c in items)


def format_quat(q: Quat) -> str:
    return format_poly(GenPoly.from_quat(q))


def _free_term_text(beta, word, coeff: Fraction) -> str:
    parts = [str(coeff)]
    if beta:
        parts.append(BASIS_NAMES[beta])
    parts.extend(f"x{v}" for v in word)
    return "*".join(parts)


def format_free_poly(poly: FreePoly) -> str:
    """Canonical text for free polynomials, terms like 2*i*x2*x4."""
    if not poly.terms:
        return "0"
    items = sorted(poly.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0]))
    return " + ".join(_free_term_text(b, w, c) for (b, w), c in items)
