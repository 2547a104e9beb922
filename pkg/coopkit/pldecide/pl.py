"""Piecewise-linear normal forms of coop terms over the rational models.

Nonneg reads + as addition on the nonnegative rationals; Interval caps it
at 1 on [0, 1]. In both, x -> y is max(0, y - x) and x/2 halves. Every
max or min splits a piece along the hyperplane where its arguments meet;
a side whose open half is infeasible is dropped, since the other side
already covers the boundary with the same value.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Sequence, Tuple, Union

from coopkit.algebra import DenseModel, ScalarKind
from coopkit.eqtrans import AlgTerm, Arrow, Atom, Sum, ZeroTerm
from coopkit.exceptions import CoopkitError, UnsupportedSymbol
from coopkit.syntax import Conj, Formula, Half, Imp, One, Var, Zero, variables

from .linear import Constraint, LinearExpr, fm_feasible

ZERO_EXPR = LinearExpr.constant(0)
ONE_EXPR = LinearExpr.constant(1)


class Ambient(str, Enum):
    NONNEG = "nonneg"
    INTERVAL = "interval"

    @classmethod
    def parse(cls, text: str) -> List["Ambient"]:
        """An ambient name, or 'wajsberg' for both"""
        key = text.strip().lower()
        if key == "wajsberg":
            return [cls.NONNEG, cls.INTERVAL]
        try:
            return [cls(key)]
        except ValueError:
            raise CoopkitError(f"unknown ambient {text!r} (nonneg, interval or wajsberg)") from None

    def model(self) -> DenseModel:
        """The exact rational model the ambient stands for"""
        if self is Ambient.INTERVAL:
            return DenseModel(ScalarKind.RATIONAL, 1)
        return DenseModel(ScalarKind.RATIONAL)

    def domain(self, names: Sequence[str]) -> Tuple[Constraint, ...]:
        bounds = []
        for name in names:
            x = LinearExpr.var(name)
            bounds.append(Constraint.geq(x, ZERO_EXPR))
            if self is Ambient.INTERVAL:
                bounds.append(Constraint.leq(x, ONE_EXPR))
        return tuple(bounds)


@dataclass(frozen=True)
class Piece:
    guard: Tuple[Constraint, ...]
    value: LinearExpr

    def __str__(self) -> str:
        return f"{{{', '.join(map(str, self.guard))}}} -> {self.value}"


@dataclass(frozen=True)
class PLTerm:
    variables: Tuple[str, ...]
    pieces: Tuple[Piece, ...]
    ambient: Ambient

    def __len__(self) -> int:
        return len(self.pieces)

    def evaluate(self, assignment: Dict[str, Fraction]) -> Fraction:
        for piece in self.pieces:
            if all(c.holds(assignment) for c in piece.guard):
                return piece.value.evaluate(assignment)
        raise CoopkitError("assignment lies outside every piece")

    def is_identically(self, value: Union[int, Fraction] = 0) -> bool:
        """Every piece takes the given value throughout its guard"""
        target = LinearExpr.constant(value)
        return all(
            not fm_feasible(piece.guard + (Constraint.gt(piece.value, target),))
            and not fm_feasible(piece.guard + (Constraint.lt(piece.value, target),))
            for piece in self.pieces
        )

    def values_in_range(self) -> bool:
        """No piece leaves [0, 1] (Interval) or [0, ∞) (Nonneg) over its guard"""
        for piece in self.pieces:
            if fm_feasible(piece.guard + (Constraint.lt(piece.value, ZERO_EXPR),)):
                return False
            if self.ambient is Ambient.INTERVAL and fm_feasible(piece.guard + (Constraint.gt(piece.value, ONE_EXPR),)):
                return False
        return True


CoopTerm = Union[Formula, AlgTerm]


def as_formula(t: CoopTerm) -> Formula:
    """Hoop terms read as formulas: + as ⊗, -> as ⊸"""
    if isinstance(t, Formula):
        return t
    if isinstance(t, ZeroTerm):
        return Zero()
    if isinstance(t, Atom):
        return Var(t.name)
    if isinstance(t, Sum):
        result = as_formula(t.args[0])
        for arg in t.args[1:]:
            result = Conj(result, as_formula(arg))
        return result
    if isinstance(t, Arrow):
        return Imp(as_formula(t.left), as_formula(t.right))
    raise CoopkitError(f"not a term: {t!r}")


def _split(guard: Tuple[Constraint, ...], value: LinearExpr, bound: LinearExpr, keep_above: bool) -> List[Piece]:
    """Pieces of max(value, bound) (keep_above) or min(value, bound) over guard"""
    above = fm_feasible(guard + (Constraint.gt(value, bound),))
    below = fm_feasible(guard + (Constraint.lt(value, bound),))
    high, low = (value, bound) if keep_above else (bound, value)
    if above and below:
        return [
            Piece(guard + (Constraint.geq(value, bound),), high),
            Piece(guard + (Constraint.leq(value, bound),), low),
        ]
    if below:
        return [Piece(guard, low)]
    return [Piece(guard, high)]


def _combine(left: List[Piece], right: List[Piece]):
    for a, b in cartesian(left, right):
        guard = a.guard + tuple(c for c in b.guard if c not in a.guard)
        if fm_feasible(guard):
            yield guard, a.value, b.value


def _compile(f: Formula, ambient: Ambient, domain: Tuple[Constraint, ...]) -> List[Piece]:
    if isinstance(f, Var):
        return [Piece(domain, LinearExpr.var(f.name))]
    if isinstance(f, Zero):
        return [Piece(domain, ZERO_EXPR)]
    if isinstance(f, One):
        if ambient is Ambient.NONNEG:
            raise UnsupportedSymbol("the constant 1 has no value in the nonneg ambient")
        return [Piece(domain, ONE_EXPR)]
    if isinstance(f, Half):
        return [Piece(p.guard, p.value.scale(Fraction(1, 2))) for p in _compile(f.body, ambient, domain)]
    left, right = _compile(f.left, ambient, domain), _compile(f.right, ambient, domain)
    pieces: List[Piece] = []
    for guard, a, b in _combine(left, right):
        if isinstance(f, Conj):
            if ambient is Ambient.INTERVAL:
                pieces.extend(_split(guard, a + b, ONE_EXPR, keep_above=False))
            else:
                pieces.append(Piece(guard, a + b))
        else:
            pieces.extend(_split(guard, b - a, ZERO_EXPR, keep_above=True))
    return pieces


def compile_pl(t: CoopTerm, ambient: Union[Ambient, str], names: Sequence[str] = ()) -> PLTerm:
    """Piecewise-linear form of t; names adds variables beyond those of t"""
    ambient = Ambient(ambient)
    f = as_formula(t)
    all_names = tuple(sorted(set(variables(f)) | set(names)))
    pieces = _compile(f, ambient, ambient.domain(all_names))
    return PLTerm(all_names, tuple(pieces), ambient)
