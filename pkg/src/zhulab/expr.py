"""Parser and printer for vector expressions such as

    L(-2)L(-2)|0> - 3/5 L(-4)|0>

Grammar (whitespace insignificant)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := [rational ['*']] modeapp* '|0>'
    modeapp := gen '(' int ')'        gen in {'a', 'L'}
    rational:= int ['/' posint]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .linalg import ONE, Q, Vec, add_to, fmt_rational
from .voa import VOA, vkey_order

GENS = ("a", "L")


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: Sequence[str]):
        self.text = text
        self.pos = pos
        self.expected = list(expected)
        found = text[pos] if pos < len(text) else "end of input"
        super().__init__(
            f"at position {pos}: expected {' or '.join(self.expected)}, found {found!r}")


@dataclass(frozen=True)
class Term:
    coeff: Q
    modes: Tuple[Tuple[str, int], ...]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, *expected):
        self.skip()
        raise ParseError(self.text, self.pos, expected)

    def eat(self, tok: str) -> bool:
        self.skip()
        if self.text.startswith(tok, self.pos):
            self.pos += len(tok)
            return True
        return False

    def integer(self, signed: bool) -> int:
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
            self.skip()
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("integer")
        return int(self.text[start:self.pos].replace(" ", ""))

    def parse(self) -> List[Term]:
        terms = []
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        terms.append(self.term(sign))
        while True:
            if self.eat("+"):
                terms.append(self.term(1))
            elif self.eat("-"):
                terms.append(self.term(-1))
            elif self.peek() == "":
                return terms
            else:
                self.error("'+'", "'-'", "end of input")

    def term(self, sign: int) -> Term:
        coeff = Q(sign)
        if self.peek().isdigit():
            num = self.integer(signed=False)
            den = 1
            if self.eat("/"):
                if not self.peek().isdigit():
                    self.error("positive integer")
                den = self.integer(signed=False)
                if den == 0:
                    self.error("positive integer")
            coeff *= Q(num, den)
            self.eat("*")
        modes = []
        while True:
            ch = self.peek()
            if ch in GENS:
                self.pos += 1
                if not self.eat("("):
                    self.error("'('")
                m = self.integer(signed=True)
                if not self.eat(")"):
                    self.error("')'")
                modes.append((ch, m))
            elif self.eat("|0>"):
                return Term(coeff, tuple(modes))
            else:
                self.error("'a('", "'L('", "'|0>'")


def parse_terms(text: str) -> List[Term]:
    return _Parser(text).parse()


def parse_vector(text: str, P: VOA) -> Vec:
    """Evaluate an expression in presentation ``P`` (modes act right to left)."""
    out: Vec = {}
    for t in parse_terms(text):
        v: Vec = {(): ONE}
        for g, m in reversed(t.modes):
            if g != P.gen:
                raise ValueError(f"generator {g!r} does not belong to {P.kind}")
            v = P.generator_mode_apply(m, v)
            if not v:
                break
        add_to(out, v, t.coeff)
    return out


def format_vector(v: Vec, gen: str) -> str:
    if not v:
        return "0|0>"
    parts = []
    for k in sorted(v, key=vkey_order):
        c = v[k]
        body = "".join(f"{gen}({-n})" for n in k) + "|0>"
        mag = abs(c)
        text = body if mag == 1 else f"{fmt_rational(mag)}*{body}"
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append(("- " if c < 0 else "+ ") + text)
    return " ".join(parts)
