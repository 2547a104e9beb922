"""Exact rational linear arithmetic and Fourier-Motzkin elimination.

A constraint reads ``expr >= 0`` or, when strict, ``expr > 0``. Eliminating a
variable combines every lower bound with every upper bound; a combination
is strict when either side is. The systems met here have a handful of
variables, so the quadratic growth per step stays small once duplicates
are removed.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from math import ceil, floor
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from coopkit.utils.formatters import format_scalar
from coopkit.utils.metrics import metrics


@dataclass(frozen=True)
class LinearExpr:
    """Σ coeffs[v]·v + const"""

    coeffs: Tuple[Tuple[str, Fraction], ...] = ()
    const: Fraction = Fraction(0)

    @classmethod
    def of(cls, coeffs: Optional[Mapping[str, Fraction]] = None, const=0) -> "LinearExpr":
        items = tuple(sorted((v, Fraction(c)) for v, c in (coeffs or {}).items() if c != 0))
        return cls(items, Fraction(const))

    @classmethod
    def var(cls, name: str) -> "LinearExpr":
        return cls.of({name: 1})

    @classmethod
    def constant(cls, value) -> "LinearExpr":
        return cls.of({}, value)

    @property
    def mapping(self) -> Dict[str, Fraction]:
        return dict(self.coeffs)

    def coefficient(self, name: str) -> Fraction:
        return self.mapping.get(name, Fraction(0))

    @property
    def variables(self) -> List[str]:
        return [v for v, _ in self.coeffs]

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LinearExpr") -> "LinearExpr":
        total = self.mapping
        for v, c in other.coeffs:
            total[v] = total.get(v, 0) + c
        return LinearExpr.of(total, self.const + other.const)

    def __neg__(self) -> "LinearExpr":
        return self.scale(-1)

    def __sub__(self, other: "LinearExpr") -> "LinearExpr":
        return self + (-other)

    def scale(self, factor) -> "LinearExpr":
        factor = Fraction(factor)
        return LinearExpr.of({v: c * factor for v, c in self.coeffs}, self.const * factor)

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        return self.const + sum((c * Fraction(assignment[v]) for v, c in self.coeffs), Fraction(0))

    def substitute(self, name: str, value: Fraction) -> "LinearExpr":
        c = self.coefficient(name)
        if c == 0:
            return self
        rest = {v: k for v, k in self.coeffs if v != name}
        return LinearExpr.of(rest, self.const + c * value)

    def __str__(self) -> str:
        parts = []
        for v, c in self.coeffs:
            if c == 1:
                parts.append(v)
            elif c == -1:
                parts.append(f"-{v}")
            else:
                parts.append(f"{format_scalar(c)}{v}")
        if self.const != 0 or not parts:
            parts.append(format_scalar(self.const))
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Constraint:
    expr: LinearExpr
    strict: bool = False

    @classmethod
    def geq(cls, left: LinearExpr, right: LinearExpr) -> "Constraint":
        return cls(left - right)

    @classmethod
    def gt(cls, left: LinearExpr, right: LinearExpr) -> "Constraint":
        return cls(left - right, strict=True)

    @classmethod
    def leq(cls, left: LinearExpr, right: LinearExpr) -> "Constraint":
        return cls(right - left)

    @classmethod
    def lt(cls, left: LinearExpr, right: LinearExpr) -> "Constraint":
        return cls(right - left, strict=True)

    def holds(self, assignment: Mapping[str, Fraction]) -> bool:
        value = self.expr.evaluate(assignment)
        return value > 0 if self.strict else value >= 0

    def normalized(self) -> "Constraint":
        """Scaled so the largest absolute coefficient is 1"""
        top = max((abs(c) for _, c in self.expr.coeffs), default=Fraction(0))
        if top == 0:
            return self
        return Constraint(self.expr.scale(1 / top), self.strict)

    @property
    def trivial(self) -> Optional[bool]:
        """Truth value of a constant constraint, None otherwise"""
        if not self.expr.is_constant:
            return None
        c = self.expr.const
        return c > 0 if self.strict else c >= 0

    def __str__(self) -> str:
        return f"{self.expr} {'>' if self.strict else '>='} 0"


def equality(left: LinearExpr, right: LinearExpr) -> List[Constraint]:
    return [Constraint.geq(left, right), Constraint.leq(left, right)]


def _simplify(constraints: Iterable[Constraint]) -> Optional[List[Constraint]]:
    """Drop tautologies and duplicates; None when a constant constraint is false"""
    kept: Dict[Tuple, Constraint] = {}
    for c in constraints:
        verdict = c.trivial
        if verdict is False:
            return None
        if verdict is True:
            continue
        c = c.normalized()
        key = (c.expr.coeffs, c.expr.const)
        # a strict copy subsumes the non-strict one
        if key not in kept or c.strict:
            kept[key] = c
    return list(kept.values())


def _eliminate(constraints: Sequence[Constraint], name: str) -> Optional[List[Constraint]]:
    lower, upper, rest = [], [], []
    for c in constraints:
        k = c.expr.coefficient(name)
        (lower if k > 0 else upper if k < 0 else rest).append(c)
    combined = list(rest)
    for lo in lower:
        a = lo.expr.coefficient(name)
        for up in upper:
            b = -up.expr.coefficient(name)
            combined.append(Constraint(lo.expr.scale(b) + up.expr.scale(a), lo.strict or up.strict))
    return _simplify(combined)


@dataclass
class _Elimination:
    order: List[str]
    stages: List[List[Constraint]] = field(default_factory=list)
    feasible: bool = True


def _run(constraints: Sequence[Constraint]) -> _Elimination:
    names = sorted({v for c in constraints for v in c.expr.variables})
    run = _Elimination(order=names)
    current = _simplify(constraints)
    for name in names:
        if current is None:
            break
        run.stages.append(current)
        current = _eliminate(current, name)
    run.feasible = current is not None and all(c.trivial is not False for c in current)
    return run


def fm_feasible(constraints: Sequence[Constraint]) -> bool:
    feasible = _run(constraints).feasible
    metrics.record_lp_check(feasible)
    return feasible


def simplest_between(
    low: Optional[Fraction], low_strict: bool, high: Optional[Fraction], high_strict: bool
) -> Fraction:
    """The rational of least denominator in the interval, nearest 0 among those"""
    if low is not None and high is not None and low == high:
        return low
    for d in count(1):
        n_min = n_max = None
        if low is not None:
            n_min = floor(low * d) + 1 if low_strict else ceil(low * d)
        if high is not None:
            n_max = ceil(high * d) - 1 if high_strict else floor(high * d)
        if n_min is not None and n_max is not None and n_min > n_max:
            continue
        n = 0
        if n_min is not None:
            n = max(n, n_min)
        if n_max is not None:
            n = min(n, n_max)
        return Fraction(n, d)


def _bounds(constraints: Sequence[Constraint], name: str, known: Mapping[str, Fraction]):
    low, low_strict, high, high_strict = None, False, None, False
    for c in constraints:
        expr = c.expr
        for v, value in known.items():
            expr = expr.substitute(v, value)
        k = expr.coefficient(name)
        if k == 0:
            continue
        bound = -expr.const / k
        if k > 0 and (low is None or bound > low or (bound == low and c.strict)):
            low, low_strict = bound, c.strict
        elif k < 0 and (high is None or bound < high or (bound == high and c.strict)):
            high, high_strict = bound, c.strict
    return low, low_strict, high, high_strict


def fm_witness(constraints: Sequence[Constraint]) -> Optional[Dict[str, Fraction]]:
    """A satisfying assignment, or None when the system is infeasible"""
    run = _run(constraints)
    metrics.record_lp_check(run.feasible)
    if not run.feasible:
        return None
    assignment: Dict[str, Fraction] = {}
    for name, stage in reversed(list(zip(run.order, run.stages))):
        assignment[name] = simplest_between(*_bounds(stage, name, assignment))
    missing = [c for c in constraints if not c.holds(assignment)]
    if missing:
        logger.error(f"back-substitution produced a point violating {missing[0]}")
        return None
    return assignment
