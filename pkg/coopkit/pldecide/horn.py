"""Removing halving from Horn clauses over the coop signature.

Each subterm t/2 is replaced, innermost first, by a fresh variable v with
the extra hypothesis v = v -> t. In a coop that equation has t/2 as its
only solution, so the new clause holds in a coop exactly when the old one
does.
"""
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from coopkit.algebra import AlgebraModel, eval_formula
from coopkit.config import settings
from coopkit.exceptions import CoopkitError, UnsupportedConnective
from coopkit.models.reports import PropertyCheck
from coopkit.syntax import Conj, Formula, Half, Imp, Var, subformulas, variables

from .matrix import And, Cmp, Matrix, Not, Or, implies, parse_matrix, render_term

Equation = Tuple[Formula, Formula]


@dataclass(frozen=True)
class HornClause:
    hypotheses: Tuple[Equation, ...]
    conclusion: Equation

    @classmethod
    def parse(cls, text: str) -> "HornClause":
        """``s1 = t1 and s2 = t2 => s = t`` or a bare equation"""
        return cls.from_matrix(parse_matrix(text))

    @classmethod
    def from_matrix(cls, m: Matrix) -> "HornClause":
        if isinstance(m, Cmp) and m.op == "=":
            return cls((), (m.left, m.right))
        if isinstance(m, Or) and len(m.parts) == 2 and isinstance(m.parts[0], Not):
            premise, conclusion = m.parts[0].body, m.parts[1]
            atoms = premise.parts if isinstance(premise, And) else (premise,)
            if all(isinstance(a, Cmp) and a.op == "=" for a in atoms + (conclusion,)):
                return cls(tuple((a.left, a.right) for a in atoms), (conclusion.left, conclusion.right))
        raise CoopkitError("not a Horn clause over equations")

    def equations(self) -> Tuple[Equation, ...]:
        return self.hypotheses + (self.conclusion,)

    def variables(self) -> List[str]:
        return sorted({v for s, t in self.equations() for v in variables(s) + variables(t)})

    def has_halving(self) -> bool:
        return any(isinstance(g, Half) for s, t in self.equations() for f in (s, t) for g in subformulas(f))

    def as_matrix(self) -> Matrix:
        conclusion = Cmp(self.conclusion[0], "=", self.conclusion[1])
        if not self.hypotheses:
            return conclusion
        atoms = tuple(Cmp(s, "=", t) for s, t in self.hypotheses)
        return implies(atoms[0] if len(atoms) == 1 else And(atoms), conclusion)

    def holds(self, assignment: Dict[str, Any], model: AlgebraModel) -> bool:
        def true(eq: Equation) -> bool:
            return eval_formula(eq[0], assignment, model) == eval_formula(eq[1], assignment, model)

        return not all(true(h) for h in self.hypotheses) or true(self.conclusion)

    def __str__(self) -> str:
        def show(eq: Equation) -> str:
            return f"{render_term(eq[0])} = {render_term(eq[1])}"

        head = " and ".join(show(h) for h in self.hypotheses)
        return f"{head} => {show(self.conclusion)}" if head else show(self.conclusion)


@dataclass(frozen=True)
class HalvingElimination:
    clause: HornClause
    # fresh variable name -> the halving-free term it halves
    fresh: Tuple[Tuple[str, Formula], ...]


class _Eliminator:
    def __init__(self, taken: List[str]):
        self.taken = set(taken)
        self.fresh: Dict[Formula, str] = {}
        self.order: List[Tuple[str, Formula]] = []

    def name(self) -> str:
        i = len(self.order) + 1
        while f"v{i}" in self.taken:
            i += 1
        name = f"v{i}"
        self.taken.add(name)
        return name

    def rewrite(self, f: Formula) -> Formula:
        if isinstance(f, Half):
            body = self.rewrite(f.body)
            if body not in self.fresh:
                self.fresh[body] = self.name()
                self.order.append((self.fresh[body], body))
            return Var(self.fresh[body])
        if isinstance(f, Conj):
            return Conj(self.rewrite(f.left), self.rewrite(f.right))
        if isinstance(f, Imp):
            return Imp(self.rewrite(f.left), self.rewrite(f.right))
        return f


def eliminate_halving_with_names(clause: HornClause) -> HalvingElimination:
    eliminator = _Eliminator(clause.variables())
    hypotheses = [(eliminator.rewrite(s), eliminator.rewrite(t)) for s, t in clause.hypotheses]
    conclusion = (eliminator.rewrite(clause.conclusion[0]), eliminator.rewrite(clause.conclusion[1]))
    hypotheses.extend((Var(v), Imp(Var(v), body)) for v, body in eliminator.order)
    result = HornClause(tuple(hypotheses), conclusion)
    if eliminator.order:
        logger.debug(f"halving removed: {clause} becomes {result}")
    return HalvingElimination(result, tuple(eliminator.order))


def eliminate_halving(clause: HornClause) -> HornClause:
    """Same clause over the hoop signature; unchanged when it has no halving"""
    return eliminate_halving_with_names(clause).clause


def check_horn_sample(
    original: HornClause,
    model: AlgebraModel,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> PropertyCheck:
    """Spot-check that the clause and its halving-free form agree on model.

    The fresh variables are set to the halves they name; every sampled value
    v with v = v -> t must also be t/2.
    """
    if not model.has_half:
        raise UnsupportedConnective(f"{model.name} has no halving")
    samples = settings.SAMPLE_COUNT if samples is None else samples
    rng = random.Random(f"{settings.SEED if seed is None else seed}:horn")
    elimination = eliminate_halving_with_names(original)
    names = original.variables()
    for checked in range(1, samples + 1):
        assignment = {name: model.sample(rng, settings.SAMPLE_MAX_EXPONENT) for name in names}
        extended = dict(assignment)
        for v, body in elimination.fresh:
            t = eval_formula(body, extended, model)
            extended[v] = model.half(t)
            guess = model.sample(rng, settings.SAMPLE_MAX_EXPONENT)
            if guess == model.imp(guess, t) and guess != extended[v]:
                return PropertyCheck(ok=False, checked=checked, witness={v: guess}, note="v = v -> t has a second solution")
        if original.holds(assignment, model) != elimination.clause.holds(extended, model):
            return PropertyCheck(ok=False, checked=checked, witness=assignment, note="clauses disagree")
    return PropertyCheck(ok=True, checked=samples)
