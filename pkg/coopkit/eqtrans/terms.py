"""Terms over the hoop signature (0, +, ->).

Sums are n-ary and stored as built: nested sums and zero summands are
allowed, so a position (a path of child indices) always refers to the raw
tree. ``ac_normalize`` gives the canonical representative modulo
associativity, commutativity and the unit of +.

Text syntax: ``0``, atoms, ``s + t`` and ``s -> t``; -> is right
associative and + binds tighter, so ``g + a -> a`` is ``(g + a) -> a``.
"""
import re
from dataclasses import dataclass
from functools import cached_property, reduce, total_ordering
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from coopkit.algebra import AlgebraModel
from coopkit.exceptions import ChainFormatError, CoopkitError, UnsupportedConnective
from coopkit.syntax import Conj, Formula, Imp, Var, Zero
from coopkit.utils.validators import validate_identifier

Path = Tuple[int, ...]


@total_ordering
class AlgTerm:
    @property
    def sort_key(self) -> tuple:
        raise NotImplementedError

    def children(self) -> Tuple["AlgTerm", ...]:
        return ()

    def __lt__(self, other: "AlgTerm") -> bool:
        if not isinstance(other, AlgTerm):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return render_term(self)


@dataclass(frozen=True)
class ZeroTerm(AlgTerm):
    @property
    def sort_key(self) -> tuple:
        return (0,)


@dataclass(frozen=True)
class Atom(AlgTerm):
    name: str

    @property
    def sort_key(self) -> tuple:
        return (1, self.name)


@dataclass(frozen=True)
class Sum(AlgTerm):
    args: Tuple[AlgTerm, ...]

    def __post_init__(self):
        if len(self.args) < 2:
            raise CoopkitError("a sum needs at least two summands")

    @cached_property
    def sort_key(self) -> tuple:
        return (2, tuple(a.sort_key for a in self.args))

    def children(self) -> Tuple[AlgTerm, ...]:
        return self.args


@dataclass(frozen=True)
class Arrow(AlgTerm):
    left: AlgTerm
    right: AlgTerm

    @cached_property
    def sort_key(self) -> tuple:
        return (3, self.left.sort_key, self.right.sort_key)

    def children(self) -> Tuple[AlgTerm, ...]:
        return (self.left, self.right)


ZERO_TERM = ZeroTerm()


def plus(*terms: AlgTerm) -> AlgTerm:
    """Raw sum of the terms: 0 for none, the term itself for one"""
    if not terms:
        return ZERO_TERM
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


def summands(t: AlgTerm) -> List[AlgTerm]:
    """Summands of a normal form (none for 0)"""
    if isinstance(t, ZeroTerm):
        return []
    if isinstance(t, Sum):
        return list(t.args)
    return [t]


def ac_normalize(t: AlgTerm) -> AlgTerm:
    if isinstance(t, Arrow):
        return Arrow(ac_normalize(t.left), ac_normalize(t.right))
    if isinstance(t, Sum):
        flat: List[AlgTerm] = []
        for arg in t.args:
            flat.extend(summands(ac_normalize(arg)))
        return plus(*sorted(flat))
    return t


def ac_equal(s: AlgTerm, t: AlgTerm) -> bool:
    return ac_normalize(s) == ac_normalize(t)


def subterm(t: AlgTerm, path: Sequence[int]) -> AlgTerm:
    for i in path:
        kids = t.children()
        if not 0 <= i < len(kids):
            raise ChainFormatError(f"position {list(path)} does not exist in {render_term(t)}")
        t = kids[i]
    return t


def replace_at(t: AlgTerm, path: Sequence[int], new: AlgTerm) -> AlgTerm:
    if not path:
        return new
    i, rest = path[0], path[1:]
    kids = list(t.children())
    if not 0 <= i < len(kids):
        raise ChainFormatError(f"position {list(path)} does not exist in {render_term(t)}")
    kids[i] = replace_at(kids[i], rest, new)
    if isinstance(t, Sum):
        return Sum(tuple(kids))
    return Arrow(kids[0], kids[1])


def insert_summand(t: AlgTerm, path: Sequence[int], new: AlgTerm) -> Tuple[AlgTerm, Path]:
    """Add new as the last summand of the node at path; returns the term and new's position"""
    node = subterm(t, path)
    if isinstance(node, Sum):
        grown, index = Sum(node.args + (new,)), len(node.args)
    else:
        grown, index = Sum((node, new)), 1
    return replace_at(t, path, grown), tuple(path) + (index,)


def substitute(t: AlgTerm, subst: Dict[str, AlgTerm]) -> AlgTerm:
    if isinstance(t, Atom):
        return subst.get(t.name, t)
    if isinstance(t, Sum):
        return Sum(tuple(substitute(a, subst) for a in t.args))
    if isinstance(t, Arrow):
        return Arrow(substitute(t.left, subst), substitute(t.right, subst))
    return t


def atoms(t: AlgTerm) -> List[str]:
    found = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Atom):
            found.add(u.name)
        stack.extend(u.children())
    return sorted(found)


def term_size(t: AlgTerm) -> int:
    return 1 + sum(term_size(c) for c in t.children())


def formula_to_term(f: Formula) -> AlgTerm:
    """0, ⊗ and ⊸ read as 0, + and ->"""
    if isinstance(f, Zero):
        return ZERO_TERM
    if isinstance(f, Var):
        return Atom(f.name)
    if isinstance(f, Conj):
        return Sum((formula_to_term(f.left), formula_to_term(f.right)))
    if isinstance(f, Imp):
        return Arrow(formula_to_term(f.left), formula_to_term(f.right))
    raise UnsupportedConnective(f"{f} is outside the hoop signature")


def eval_term(t: AlgTerm, assignment: Dict[str, Any], model: AlgebraModel) -> Any:
    if isinstance(t, ZeroTerm):
        return model.zero
    if isinstance(t, Atom):
        try:
            return assignment[t.name]
        except KeyError:
            raise CoopkitError(f"no value for atom {t.name}") from None
    if isinstance(t, Sum):
        return reduce(model.plus, (eval_term(a, assignment, model) for a in t.args))
    return model.imp(eval_term(t.left, assignment, model), eval_term(t.right, assignment, model))


def render_term(t: AlgTerm) -> str:
    if isinstance(t, ZeroTerm):
        return "0"
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Sum):
        return " + ".join(f"({render_term(a)})" if isinstance(a, (Sum, Arrow)) else render_term(a) for a in t.args)
    left = render_term(t.left)
    if isinstance(t.left, Arrow):
        left = f"({left})"
    return f"{left} -> {render_term(t.right)}"


_TOKEN = re.compile(r"\s*(?:(?P<arrow>->)|(?P<sym>[+()])|(?P<zero>0)|(?P<ident>[A-Za-z][A-Za-z0-9_]*))")


def _tokens(text: str) -> Iterator[Tuple[str, str, int]]:
    pos = 0
    while text[pos:].strip():
        match = _TOKEN.match(text, pos)
        if not match:
            raise ChainFormatError(f"unexpected character in term {text!r} at position {pos}")
        yield match.lastgroup, match.group(match.lastgroup), match.start(match.lastgroup)
        pos = match.end()
    yield "end", "", len(text)


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(_tokens(text))
        self.index = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def take(self) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str):
        raise ChainFormatError(f"{message} at position {self.peek()[2]} in term {self.text!r}")

    def parse(self) -> AlgTerm:
        t = self.arrow()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return t

    def arrow(self) -> AlgTerm:
        left = self.sum()
        if self.peek()[0] == "arrow":
            self.take()
            return Arrow(left, self.arrow())
        return left

    def sum(self) -> AlgTerm:
        args = [self.atom()]
        while self.peek()[:2] == ("sym", "+"):
            self.take()
            args.append(self.atom())
        return plus(*args)

    def atom(self) -> AlgTerm:
        kind, value, _ = self.peek()
        if kind == "zero":
            self.take()
            return ZERO_TERM
        if kind == "ident" and validate_identifier(value):
            self.take()
            return Atom(value)
        if (kind, value) == ("sym", "("):
            self.take()
            t = self.arrow()
            if self.peek()[:2] != ("sym", ")"):
                self.fail("expected ')'")
            self.take()
            return t
        self.fail(f"expected a term, found {value or 'end of input'!r}")


def parse_term(text: str) -> AlgTerm:
    return _TermParser(text).parse()
