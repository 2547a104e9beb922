"""Quantifier-free matrices over coop terms.

    matrix  := disj ['=>' matrix]
    disj    := conj {'or' conj}
    conj    := neg {'and' neg}
    neg     := 'not' neg | atom | '(' matrix ')'
    atom    := term ('=' | '!=' | '<=' | '>=' | '<' | '>') term
    term    := sum ['->' term]
    sum     := postfix {'+' postfix}
    postfix := primary {'/2'}
    primary := '0' | '1' | identifier | '(' term ')'

Terms become formulas (+ as ⊗, -> as ⊸). A matrix is read universally
closed over its variables.
"""
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from coopkit.algebra import AlgebraModel, eval_formula
from coopkit.exceptions import FormulaSyntaxError
from coopkit.syntax import ONE, ZERO, Conj, Formula, Half, Imp, Var, render_formula, variables

KEYWORDS = frozenset({"not", "and", "or"})

_TOKEN = re.compile(
    r"\s*(?:(?P<op>=>|->|<=|>=|!=|=|<|>|\+|/|\(|\))|(?P<num>\d+)|(?P<word>[A-Za-z][A-Za-z0-9_]*))"
)


@dataclass(frozen=True)
class Cmp:
    """left op right with op one of '=', '<=', '<'"""

    left: Formula
    op: str
    right: Formula

    def __str__(self) -> str:
        return f"{render_term(self.left)} {self.op} {render_term(self.right)}"


@dataclass(frozen=True)
class Not:
    body: "Matrix"


@dataclass(frozen=True)
class And:
    parts: Tuple["Matrix", ...]


@dataclass(frozen=True)
class Or:
    parts: Tuple["Matrix", ...]


Matrix = Union[Cmp, Not, And, Or]


def implies(premise: Matrix, conclusion: Matrix) -> Matrix:
    return Or((Not(premise), conclusion))


def render_term(f: Formula) -> str:
    """Term syntax: + for ⊗ and -> for ⊸"""
    return render_formula(f).replace(" * ", " + ").replace(" -o ", " -> ")


def matrix_terms(m: Matrix) -> List[Formula]:
    if isinstance(m, Cmp):
        return [m.left, m.right]
    if isinstance(m, Not):
        return matrix_terms(m.body)
    return [t for part in m.parts for t in matrix_terms(part)]


def matrix_variables(m: Matrix) -> List[str]:
    return sorted({v for t in matrix_terms(m) for v in variables(t)})


def compare_values(model: AlgebraModel, x, y, op: str) -> bool:
    if op == "=":
        return x == y
    if op == "<=":
        return model.leq(x, y)
    return model.leq(x, y) and x != y


def matrix_holds(m: Matrix, assignment: Mapping[str, Any], model: AlgebraModel) -> bool:
    if isinstance(m, Cmp):
        x, y = eval_formula(m.left, assignment, model), eval_formula(m.right, assignment, model)
        return compare_values(model, x, y, m.op)
    if isinstance(m, Not):
        return not matrix_holds(m.body, assignment, model)
    if isinstance(m, And):
        return all(matrix_holds(p, assignment, model) for p in m.parts)
    return any(matrix_holds(p, assignment, model) for p in m.parts)


Literal = Tuple[Formula, str, Formula]


def negation_dnf(m: Matrix) -> List[List[Literal]]:
    """Disjunctive normal form of not-m, literals restricted to =, <= and <"""
    return _dnf(m, negate=True)


def _dnf(m: Matrix, negate: bool) -> List[List[Literal]]:
    if isinstance(m, Not):
        return _dnf(m.body, not negate)
    if isinstance(m, Cmp):
        if not negate:
            return [[(m.left, m.op, m.right)]]
        if m.op == "=":
            return [[(m.left, "<", m.right)], [(m.right, "<", m.left)]]
        if m.op == "<=":
            return [[(m.right, "<", m.left)]]
        return [[(m.right, "<=", m.left)]]
    conjunctive = isinstance(m, And) != negate
    branches = [_dnf(p, negate) for p in m.parts]
    if not conjunctive:
        return [conj for branch in branches for conj in branch]
    result: List[List[Literal]] = [[]]
    for branch in branches:
        result = [left + right for left in result for right in branch]
    return result


class _MatrixParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = self._tokenize(text)
        self.index = 0

    def _tokenize(self, text: str) -> List[Tuple[str, str, int]]:
        tokens, pos = [], 0
        while text[pos:].strip():
            match = _TOKEN.match(text, pos)
            if not match:
                offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise FormulaSyntaxError(f"unexpected character {text[offset]!r}", text, offset)
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        tokens.append(("end", "", len(text)))
        return tokens

    @property
    def current(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def at(self, value: str) -> bool:
        return self.current[1] == value and self.current[0] != "end"

    def take(self, value: Optional[str] = None):
        token = self.current
        if value is not None and not self.at(value):
            self.fail(f"expected {value!r}, found {token[1] or 'end of input'!r}")
        self.index += 1
        return token

    def fail(self, message: str):
        raise FormulaSyntaxError(message, self.text, self.current[2])

    def parse(self) -> Matrix:
        m = self.matrix()
        if self.current[0] != "end":
            self.fail(f"unexpected {self.current[1]!r}")
        return m

    def matrix(self) -> Matrix:
        left = self.disjunction()
        if self.at("=>"):
            self.take()
            return implies(left, self.matrix())
        return left

    def disjunction(self) -> Matrix:
        parts = [self.conjunction()]
        while self.at("or"):
            self.take()
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conjunction(self) -> Matrix:
        parts = [self.negation()]
        while self.at("and"):
            self.take()
            parts.append(self.negation())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def negation(self) -> Matrix:
        if self.at("not"):
            self.take()
            return Not(self.negation())
        start = self.index
        try:
            return self.atom()
        except FormulaSyntaxError:
            if self.tokens[start][1] != "(":
                raise
            self.index = start
        self.take("(")
        m = self.matrix()
        self.take(")")
        return m

    def atom(self) -> Matrix:
        left = self.term()
        op = self.current[1]
        if op not in ("=", "!=", "<=", ">=", "<", ">"):
            self.fail(f"expected a comparison, found {op or 'end of input'!r}")
        self.take()
        right = self.term()
        if op == "!=":
            return Not(Cmp(left, "=", right))
        if op in (">=", ">"):
            return Cmp(right, op.replace(">", "<"), left)
        return Cmp(left, op, right)

    def term(self) -> Formula:
        left = self.sum()
        if self.at("->"):
            self.take()
            return Imp(left, self.term())
        return left

    def sum(self) -> Formula:
        f = self.postfix()
        while self.at("+"):
            self.take()
            f = Conj(f, self.postfix())
        return f

    def postfix(self) -> Formula:
        f = self.primary()
        while self.at("/"):
            self.take()
            if self.current[:2] != ("num", "2"):
                self.fail("only halving '/2' is supported")
            self.take()
            f = Half(f)
        return f

    def primary(self) -> Formula:
        kind, value, _ = self.current
        if kind == "num" and value in ("0", "1"):
            self.take()
            return ZERO if value == "0" else ONE
        if kind == "word" and value not in KEYWORDS:
            self.take()
            return Var(value)
        if self.at("("):
            self.take()
            f = self.term()
            self.take(")")
            return f
        self.fail(f"expected a term, found {value or 'end of input'!r}")


def parse_matrix(text: str) -> Matrix:
    return _MatrixParser(text).parse()


def parse_term(text: str) -> Formula:
    parser = _MatrixParser(text)
    f = parser.term()
    if parser.current[0] != "end":
        parser.fail(f"unexpected {parser.current[1]!r}")
    return f


def matrix_to_text(m: Matrix) -> str:
    if isinstance(m, Cmp):
        return str(m)
    if isinstance(m, Not):
        return f"not ({matrix_to_text(m.body)})"
    joiner = " and " if isinstance(m, And) else " or "
    return joiner.join(f"({matrix_to_text(p)})" for p in m.parts)


def assignment_values(m: Matrix, assignment: Dict[str, Any], model: AlgebraModel) -> Dict[str, Any]:
    """Value of every distinct term of m, keyed by its text"""
    return {render_term(t): eval_formula(t, assignment, model) for t in matrix_terms(m)}
