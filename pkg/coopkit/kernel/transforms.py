"""Derived rules: weakening and the three deduction-theorem shapes."""
from enum import Enum
from typing import List, Optional, Sequence

from coopkit.exceptions import ShapeError
from coopkit.syntax import Conj, Formula, Imp, Sequent

from .logics import AxiomSchema
from .proof import AxiomLeaf, Proof, Rule, RuleNode


class Shape(str, Enum):
    CURRIED = "Curried"        # ⊢ A1 ⊸ … ⊸ Am ⊸ B
    UNCURRIED = "Uncurried"    # A1, …, Am ⊢ B
    CONJ_FORM = "ConjForm"     # ⊢ A1 ⊗ … ⊗ Am ⊸ B, ⊗ nested to the left


def weaken(proof: Proof, extra: Formula) -> Proof:
    """Add extra to the antecedent by pushing it up the first-premise path"""
    conclusion = proof.conclusion.with_extra(extra)
    if isinstance(proof, AxiomLeaf):
        return AxiomLeaf(proof.schema, conclusion)
    first, *rest = proof.premises
    return RuleNode(proof.rule, (weaken(first, extra), *rest), conclusion)


def _assume(f: Formula) -> AxiomLeaf:
    return AxiomLeaf(AxiomSchema.ASM, Sequent((f,), f))


def _conjoin(formulas: Sequence[Formula]) -> Formula:
    result = formulas[0]
    for f in formulas[1:]:
        result = Conj(result, f)
    return result


def _conjuncts(f: Formula) -> List[Formula]:
    """Left spine of a left-nested conjunction"""
    parts = []
    while isinstance(f, Conj):
        parts.append(f.right)
        f = f.left
    parts.append(f)
    return parts[::-1]


def _discharge(proof: Proof, formula: Formula) -> Proof:
    s = proof.conclusion
    return RuleNode(Rule.IMP_I, (proof,), Sequent(s.without(formula).antecedent, Imp(formula, s.succedent)))


def _curry(proof: Proof) -> Proof:
    """Γ ⊢ B into ⊢ A1 ⊸ … ⊸ Am ⊸ B, discharging the antecedent from the last"""
    for f in reversed(proof.conclusion.antecedent):
        proof = _discharge(proof, f)
    return proof


def _fold_conjunction(proof: Proof, formulas: Sequence[Formula]) -> Proof:
    """From A1, …, Am, Δ ⊢ B derive A1 ⊗ … ⊗ Am, Δ ⊢ B"""
    if len(formulas) == 1:
        return proof
    *front, last = formulas
    inner = _fold_conjunction(proof, front)
    whole = Conj(_conjoin(front), last)
    s = inner.conclusion
    residual = s.without(_conjoin(front)).without(last)
    return RuleNode(Rule.CONJ_E, (_assume(whole), inner), Sequent((whole,) + residual.antecedent, s.succedent))


def _to_conj_form(proof: Proof) -> Proof:
    formulas = list(proof.conclusion.antecedent)
    folded = _fold_conjunction(proof, formulas)
    return _discharge(folded, _conjoin(formulas))


def _modus_ponens(minor: Proof, major: Proof) -> Proof:
    s = major.conclusion
    if not isinstance(s.succedent, Imp) or s.succedent.left != minor.conclusion.succedent:
        raise ShapeError(f"cannot apply {s.succedent} to {minor.conclusion.succedent}")
    antecedent = minor.conclusion.antecedent + s.antecedent
    return RuleNode(Rule.IMP_E, (minor, major), Sequent(antecedent, s.succedent.right))


def _uncurry(proof: Proof, arity: Optional[int]) -> Proof:
    steps = 0
    while isinstance(proof.conclusion.succedent, Imp) and (arity is None or steps < arity):
        hypothesis = proof.conclusion.succedent.left
        proof = _modus_ponens(_assume(hypothesis), proof)
        steps += 1
    if arity is not None and steps < arity:
        raise ShapeError(f"{proof.conclusion} has fewer than {arity} implications to uncurry")
    return proof


def _join_conjuncts(formulas: Sequence[Formula]) -> Proof:
    """A1, …, Am ⊢ A1 ⊗ … ⊗ Am"""
    proof: Proof = _assume(formulas[0])
    for f in formulas[1:]:
        s = proof.conclusion
        proof = RuleNode(Rule.CONJ_I, (proof, _assume(f)), Sequent(s.antecedent + (f,), Conj(s.succedent, f)))
    return proof


def _split_conj_form(proof: Proof) -> Proof:
    premise = proof.conclusion.succedent.left
    return _modus_ponens(_join_conjuncts(_conjuncts(premise)), proof)


def apply_deduction(proof: Proof, target, arity: Optional[int] = None) -> Proof:
    """Convert between the three equivalent shapes of a sequent.

    A proof with a nonempty antecedent is read as the uncurried shape. A
    proof with an empty antecedent whose succedent is an implication from a
    conjunction is read as the conjunction shape (so asking for the curried
    shape splits the conjunction), any other implication as the curried
    shape; ``arity`` limits how many implications are uncurried
    (all of them by default).
    """
    target = Shape(target)
    s = proof.conclusion
    if s.antecedent:
        if target is Shape.UNCURRIED:
            return proof
        return _curry(proof) if target is Shape.CURRIED else _to_conj_form(proof)
    succ = s.succedent
    if not isinstance(succ, Imp):
        if target is Shape.UNCURRIED and arity != 0:
            raise ShapeError(f"cannot uncurry {s}: the succedent is not an implication")
        return proof
    if isinstance(succ.left, Conj) and arity is None:
        if target is Shape.CONJ_FORM:
            return proof
        split = _split_conj_form(proof)
        return split if target is Shape.UNCURRIED else _curry(split)
    if target is Shape.CURRIED:
        return proof
    uncurried = _uncurry(proof, arity)
    return uncurried if target is Shape.UNCURRIED else _to_conj_form(uncurried)
