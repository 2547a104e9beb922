"""The five hoop equations and single-step rewriting.

A step names an equation, a direction, a substitution for the template
atoms and a position. The node at the position is read as a multiset of
summands; the instantiated source side must be a sub-multiset of it, and
the step replaces that part by the instantiated target side. With an empty
source side (0 read right to left) this adds a new summand.
"""
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from coopkit.exceptions import ChainFormatError

from .terms import (
    ZERO_TERM,
    AlgTerm,
    Arrow,
    Atom,
    Path,
    Sum,
    ac_normalize,
    atoms,
    plus,
    render_term,
    replace_at,
    substitute,
    subterm,
    summands,
)

X, Y, Z = Atom("x"), Atom("y"), Atom("z")


class Direction(str, Enum):
    L2R = "L2R"
    R2L = "R2L"

    def flipped(self) -> "Direction":
        return Direction.R2L if self is Direction.L2R else Direction.L2R


@dataclass(frozen=True)
class Equation:
    name: str
    left: AlgTerm
    right: AlgTerm

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted(set(atoms(self.left)) | set(atoms(self.right))))

    def sides(self, direction: Direction) -> Tuple[AlgTerm, AlgTerm]:
        return (self.left, self.right) if direction is Direction.L2R else (self.right, self.left)

    def __str__(self) -> str:
        return f"{render_term(self.left)} = {render_term(self.right)}"


EQUATIONS: Dict[str, Equation] = {
    eq.name: eq
    for eq in [
        Equation("Eq1", Arrow(X, X), ZERO_TERM),
        Equation("Eq2", Arrow(X, ZERO_TERM), ZERO_TERM),
        Equation("Eq3", Arrow(ZERO_TERM, X), X),
        Equation("Eq4", Arrow(Sum((X, Y)), Z), Arrow(X, Arrow(Y, Z))),
        Equation("Eq5", Sum((X, Arrow(X, Y))), Sum((Y, Arrow(Y, X)))),
    ]
}

REARRANGE = "MonoidRearrange"
JUSTIFICATIONS = tuple(EQUATIONS) + (REARRANGE,)


@dataclass(frozen=True)
class EqStep:
    source: AlgTerm
    target: AlgTerm
    justification: str
    position: Path = ()
    direction: Direction = Direction.L2R
    substitution: Dict[str, AlgTerm] = field(default_factory=dict, hash=False)

    def __str__(self) -> str:
        where = f" at {list(self.position)}" if self.position else ""
        how = "" if self.justification == REARRANGE else f" {self.direction.value}"
        return f"= {render_term(self.target)}    [{self.justification}{how}{where}]"


@dataclass
class EqChain:
    start: AlgTerm
    steps: List[EqStep] = field(default_factory=list)
    conclusion: Optional[str] = None

    @property
    def end(self) -> AlgTerm:
        return self.steps[-1].target if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def render(self) -> str:
        lines = [f"  {render_term(self.start)}"]
        lines.extend(f"  {step}" for step in self.steps)
        return "\n".join(lines)


def _sub_multiset(part: List[AlgTerm], whole: List[AlgTerm]) -> Optional[List[AlgTerm]]:
    """whole minus part, or None when part is not contained in whole"""
    rest = Counter(whole)
    rest.subtract(Counter(part))
    if any(n < 0 for n in rest.values()):
        return None
    return sorted(rest.elements())


def rewrite_at(term: AlgTerm, equation: Equation, direction: Direction, subst: Dict[str, AlgTerm], position: Path) -> AlgTerm:
    """Apply one oriented, instantiated equation at position; ChainFormatError when it does not match"""
    missing = [v for v in equation.variables if v not in subst]
    if missing:
        raise ChainFormatError(f"{equation.name} needs a substitution for {', '.join(missing)}")
    source, target = equation.sides(direction)
    node = subterm(term, position)
    inst_source = substitute(source, subst)
    inst_target = substitute(target, subst)
    rest = _sub_multiset(summands(ac_normalize(inst_source)), summands(ac_normalize(node)))
    if rest is None:
        raise ChainFormatError(
            f"{render_term(inst_source)} does not occur in {render_term(node)}"
        )
    rebuilt = plus(*rest, inst_target) if rest else inst_target
    return replace_at(term, position, rebuilt)


def apply_step(step: EqStep) -> AlgTerm:
    """The term step's equation produces from step.source (any AC arrangement of it)"""
    if step.justification == REARRANGE:
        return step.target
    equation = EQUATIONS.get(step.justification)
    if equation is None:
        raise ChainFormatError(f"unknown justification {step.justification!r}")
    return rewrite_at(step.source, equation, step.direction, step.substitution, step.position)
