"""Deciding universal sentences over the rational models.

A matrix is valid in an ambient when the disjunctive normal form of its
negation has no satisfiable conjunct. Each conjunct is split over the
pieces of the terms it mentions; what remains is a rational linear system,
settled by Fourier-Motzkin. A satisfiable system yields an exact point
that is checked against the original matrix before it is reported.
"""
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Union

from loguru import logger

from coopkit.exceptions import CoopkitError
from coopkit.models.reports import Verdict
from coopkit.syntax import ZERO, Conj, Formula, Sequent
from coopkit.utils.formatters import format_assignment
from coopkit.utils.metrics import metrics, track_duration

from .linear import Constraint, fm_feasible, fm_witness
from .matrix import Cmp, Literal, Matrix, assignment_values, matrix_holds, matrix_variables, negation_dnf
from .pl import Ambient, CoopTerm, PLTerm, as_formula, compile_pl

AmbientSpec = Union[Ambient, str, Iterable[Ambient]]


def _ambients(spec: AmbientSpec) -> List[Ambient]:
    if isinstance(spec, Ambient):
        return [spec]
    if isinstance(spec, str):
        return Ambient.parse(spec)
    return [Ambient(a) for a in spec]


def _literal_constraints(op: str, left, right) -> List[Constraint]:
    if op == "=":
        return [Constraint.geq(left, right), Constraint.leq(left, right)]
    if op == "<=":
        return [Constraint.leq(left, right)]
    return [Constraint.lt(left, right)]


def _solve_conjunct(
    conjunct: Sequence[Literal], ambient: Ambient, forms: Dict[Formula, PLTerm]
) -> Optional[Dict[str, Fraction]]:
    terms = list(dict.fromkeys(t for left, _, right in conjunct for t in (left, right)))

    def search(i: int, guard: tuple, values: dict) -> Optional[Dict[str, Fraction]]:
        if i == len(terms):
            system = list(guard)
            for left, op, right in conjunct:
                system.extend(_literal_constraints(op, values[left], values[right]))
            return fm_witness(system)
        for piece in forms[terms[i]].pieces:
            extended = guard + tuple(c for c in piece.guard if c not in guard)
            if not fm_feasible(extended):
                continue
            found = search(i + 1, extended, {**values, terms[i]: piece.value})
            if found is not None:
                return found
        return None

    return search(0, (), {})


def _decide_in(m: Matrix, ambient: Ambient) -> Verdict:
    names = matrix_variables(m)
    conjuncts = negation_dnf(m)
    forms: Dict[Formula, PLTerm] = {}
    for conjunct in conjuncts:
        for left, _, right in conjunct:
            for t in (left, right):
                if t not in forms:
                    forms[t] = compile_pl(t, ambient, names)
    for conjunct in conjuncts:
        point = _solve_conjunct(conjunct, ambient, forms)
        if point is None:
            continue
        assignment = {name: point.get(name, Fraction(0)) for name in names}
        model = ambient.model()
        if matrix_holds(m, assignment, model):
            raise CoopkitError(f"countermodel {format_assignment(assignment)} failed re-verification")
        values = assignment_values(m, assignment, model)
        logger.debug(f"{ambient.value}: countermodel {format_assignment(assignment)}")
        return Verdict(valid=False, ambient=ambient.value, assignment=assignment, values=values)
    return Verdict.holds()


@track_duration("decide_universal", "pldecide")
def decide_universal(m: Matrix, ambients: AmbientSpec = "wajsberg") -> Verdict:
    """Valid iff m holds for all rational values in every ambient; otherwise the first countermodel"""
    verdict = Verdict.holds()
    for ambient in _ambients(ambients):
        verdict = _decide_in(m, ambient)
        metrics.record_decision(ambient.value, verdict.valid)
        if not verdict.valid:
            return verdict
    return verdict


def decide_equation(s: CoopTerm, t: CoopTerm, ambient: AmbientSpec = Ambient.NONNEG) -> Verdict:
    return decide_universal(Cmp(as_formula(s), "=", as_formula(t)), ambient)


def decide_inequation(s: CoopTerm, t: CoopTerm, ambient: AmbientSpec = Ambient.NONNEG) -> Verdict:
    """s <= t everywhere; the pocrim order is the numeric one in both ambients"""
    return decide_universal(Cmp(as_formula(s), "<=", as_formula(t)), ambient)


def sequent_sum(s: Sequent) -> Formula:
    return reduce(Conj, s.antecedent) if s.antecedent else ZERO


def decide_sequent(s: Sequent, ambient: AmbientSpec = Ambient.INTERVAL) -> Verdict:
    """The antecedent sum bounds the succedent from above"""
    return decide_inequation(s.succedent, sequent_sum(s), ambient)


def describe_verdict(verdict: Verdict) -> str:
    if verdict.valid:
        return "valid"
    values = ", ".join(f"{text} = {value}" for text, value in verdict.values.items())
    return f"countermodel in {verdict.ambient}: {format_assignment(verdict.assignment)} ({values})"
