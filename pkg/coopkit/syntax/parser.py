"""Recursive-descent parser for the ASCII formula syntax.

    imp     := conj ['-o' imp]
    conj    := postfix {'*' postfix}
    postfix := atom {'/' '2' | '^'}
    atom    := '0' | '1' | identifier | '(' imp ')'

``A^`` is read as ``A -o 1``.
"""
import re
from dataclasses import dataclass
from typing import List, Optional

from coopkit.exceptions import FormulaSyntaxError

from .formula import ONE, ZERO, Conj, Formula, Half, Imp, Sequent, Var

TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<imp>-o)|(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[*/^()]))"
)
TURNSTILE = "|-"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        raise FormulaSyntaxError(message, self.text, token.position)

    def expect(self, kind: str, value: Optional[str] = None) -> Token:
        token = self.current
        if token.kind != kind or (value is not None and token.value != value):
            wanted = value or kind
            found = token.value or "end of input"
            self.fail(f"expected {wanted!r}, found {found!r}")
        return self.advance()

    def parse(self) -> Formula:
        formula = self.implication()
        if self.current.kind != "end":
            self.fail(f"unexpected {self.current.value!r}")
        return formula

    def implication(self) -> Formula:
        left = self.conjunction()
        if self.current.kind == "imp":
            self.advance()
            return Imp(left, self.implication())
        return left

    def conjunction(self) -> Formula:
        formula = self.postfix()
        while self.current.kind == "sym" and self.current.value == "*":
            self.advance()
            formula = Conj(formula, self.postfix())
        return formula

    def postfix(self) -> Formula:
        formula = self.atom()
        while self.current.kind == "sym" and self.current.value in ("/", "^"):
            if self.advance().value == "^":
                formula = Imp(formula, ONE)
                continue
            token = self.current
            if token.kind != "num" or token.value != "2":
                self.fail("only halving '/2' is supported")
            self.advance()
            formula = Half(formula)
        return formula

    def atom(self) -> Formula:
        token = self.current
        if token.kind == "num":
            self.advance()
            if token.value == "0":
                return ZERO
            if token.value == "1":
                return ONE
            self.fail(f"unknown constant {token.value!r}", token)
        if token.kind == "ident":
            self.advance()
            return Var(token.value)
        if token.kind == "sym" and token.value == "(":
            self.advance()
            formula = self.implication()
            self.expect("sym", ")")
            return formula
        found = token.value or "end of input"
        self.fail(f"expected a formula, found {found!r}")


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()


def _split_antecedent(text: str, offset: int) -> List[tuple]:
    """Split on top-level commas, keeping each part's offset"""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:i], offset + start))
            start = i + 1
    parts.append((text[start:], offset + start))
    return parts


def _parse_part(part: str, offset: int, whole: str) -> Formula:
    try:
        return parse_formula(part)
    except FormulaSyntaxError as e:
        raise FormulaSyntaxError(str(e).split(" at position")[0], whole, offset + e.position) from None


def parse_sequent(text: str) -> Sequent:
    """Parse ``A, B |- C``; an empty antecedent is written ``|- C``"""
    if text.count(TURNSTILE) != 1:
        raise FormulaSyntaxError("expected exactly one '|-'", text, text.find(TURNSTILE) if TURNSTILE in text else len(text))
    cut = text.index(TURNSTILE)
    left, right = text[:cut], text[cut + len(TURNSTILE):]
    antecedent = []
    if left.strip():
        for part, offset in _split_antecedent(left, 0):
            if not part.strip():
                raise FormulaSyntaxError("empty antecedent formula", text, offset)
            antecedent.append(_parse_part(part, offset, text))
    succedent = _parse_part(right, cut + len(TURNSTILE), text)
    return Sequent(tuple(antecedent), succedent)
