"""Parser for the symmetric-polynomial expression language.

Grammar (whitespace is insignificant)::

    expr  := [sign] term (sign term)*
    sign  := '+' | '-'
    term  := [coeff '*'] basis '[' int (',' int)* ']'
    coeff := int | int '/' int
    basis := 'm' | 's'

All terms must use the same basis letter and partitions of the same size.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatchError, DomainError, ParseError, ValidationError
from .partitions import Partition
from .symfunc import MONOMIAL, SCHUR, SymPoly

_LETTER_TO_BASIS = {"m": MONOMIAL, "s": SCHUR}


@dataclass(frozen=True)
class SymTerm:
    coeff: Fraction
    basis: str
    partition: Partition


@dataclass(frozen=True)
class SymExpr:
    terms: tuple[SymTerm, ...]

    @property
    def degree(self) -> int:
        return self.terms[0].partition.size()

    @property
    def basis_letter(self) -> str:
        return self.terms[0].basis

    def to_sympoly(self) -> SymPoly:
        coeffs: dict[Partition, Fraction] = {}
        for t in self.terms:
            coeffs[t.partition] = coeffs.get(t.partition, Fraction(0)) + t.coeff
        return SymPoly(self.degree, _LETTER_TO_BASIS[self.basis_letter], coeffs)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise ParseError(f"expected an integer, found {found!r}", start)
        return int(self.text[start:self.pos])


def _term(sc: _Scanner, sign: int) -> SymTerm:
    coeff = Fraction(1)
    if sc.peek().isdigit():
        num = sc.integer()
        den = 1
        if sc.peek() == "/":
            sc.pos += 1
            den_pos = sc.pos
            den = sc.integer()
            if den == 0:
                raise ParseError("zero denominator", den_pos)
        coeff = Fraction(num, den)
        sc.expect("*")
    letter_pos = sc.pos
    letter = sc.peek()
    if letter not in _LETTER_TO_BASIS:
        raise ParseError(f"expected basis letter 'm' or 's', found {letter or 'end of input'!r}", letter_pos)
    sc.pos += 1
    sc.expect("[")
    bracket_pos = sc.pos
    parts = [sc.integer()]
    while sc.peek() == ",":
        sc.pos += 1
        parts.append(sc.integer())
    sc.expect("]")
    try:
        if any(p <= 0 for p in parts):
            raise DomainError("parts must be positive")
        lam = Partition(parts)
    except DomainError:
        raise ValidationError(f"{parts} is not a partition (need weakly decreasing positive parts)",
                              bracket_pos) from None
    return SymTerm(sign * coeff, letter, lam)


def parse_symexpr(text: str) -> SymExpr:
    sc = _Scanner(text)
    terms: list[SymTerm] = []
    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    while True:
        term_pos = sc.pos
        term = _term(sc, sign)
        if terms:
            if term.basis != terms[0].basis:
                raise DegreeMismatchError("cannot mix m[...] and s[...] terms", term_pos)
            if term.partition.size() != terms[0].partition.size():
                raise DegreeMismatchError(
                    f"term of degree {term.partition.size()} in a degree {terms[0].partition.size()} expression",
                    term_pos,
                )
        terms.append(term)
        nxt = sc.peek()
        if not nxt:
            break
        if nxt not in "+-":
            raise ParseError(f"expected '+' or '-', found {nxt!r}", sc.pos)
        sign = -1 if nxt == "-" else 1
        sc.pos += 1
    return SymExpr(tuple(terms))
