"""Translate LLu proofs into equational chains over the hoop equations.

The chain for a proof of Γ ⊢ A starts at the term (Γ -> A) and ends at 0,
one rewrite at a time. A premise's chain is reused in one of two ways:
forward, where its start term occurs verbatim inside the current term, or
reversed, where it is read from 0 back to its start and so inserts that
term as a new summand (x = x + 0 = x + t).

Every step changes the current term only inside the subterm at its
position; reversing a chain relies on this.
"""
from typing import Dict, List, Optional, Tuple

from loguru import logger

from coopkit.exceptions import ProofFormatError, TranslationError, UnsupportedAxiom, UnsupportedConnective
from coopkit.kernel import AxiomLeaf, AxiomSchema, LogicId, Proof, Rule, RuleNode, check_proof, walk
from coopkit.kernel.checker import LANGUAGE_VIOLATION
from coopkit.syntax import Conj, Imp, Sequent
from coopkit.utils.metrics import track_duration

from .equations import EQUATIONS, REARRANGE, Direction, EqChain, EqStep, rewrite_at
from .terms import (
    ZERO_TERM,
    AlgTerm,
    Arrow,
    Path,
    ac_equal,
    formula_to_term,
    insert_summand,
    plus,
    render_term,
    replace_at,
    subterm,
)

TRANSLATABLE = frozenset({AxiomSchema.ASM, AxiomSchema.CWC})
L2R, R2L = Direction.L2R, Direction.R2L


def antecedent_term(formulas) -> Optional[AlgTerm]:
    """Sum of the antecedent's terms in sorted order, None when empty"""
    if not formulas:
        return None
    return plus(*(formula_to_term(f) for f in formulas))


def sequent_term(s: Sequent) -> AlgTerm:
    """Γ -> A, or just A when Γ is empty"""
    succ = formula_to_term(s.succedent)
    gamma = antecedent_term(s.antecedent)
    return succ if gamma is None else Arrow(gamma, succ)


class ChainBuilder:
    def __init__(self, start: AlgTerm):
        self.start = start
        self.current = start
        self.steps: List[EqStep] = []

    def _push(self, step: EqStep):
        self.steps.append(step)
        self.current = step.target

    def rewrite(
        self,
        name: str,
        direction: Direction,
        subst: Dict[str, AlgTerm],
        position: Path = (),
        node: Optional[AlgTerm] = None,
    ):
        """One equation step; ``node`` restates the rewritten subterm in another AC arrangement"""
        produced = rewrite_at(self.current, EQUATIONS[name], direction, subst, position)
        if node is not None:
            if not ac_equal(subterm(produced, position), node):
                raise TranslationError(f"{render_term(node)} is not the result of {name}")
            produced = replace_at(self.current, position, node)
        self._push(EqStep(self.current, produced, name, tuple(position), direction, dict(subst)))

    def rearrange(self, target: AlgTerm):
        if target == self.current:
            return
        if not ac_equal(target, self.current):
            raise TranslationError(f"{render_term(target)} is not a rearrangement of {render_term(self.current)}")
        self._push(EqStep(self.current, target, REARRANGE))

    def splice(self, chain: EqChain, position: Path = ()):
        """Run chain forward on the subterm at position"""
        if subterm(self.current, position) != chain.start:
            self.rearrange(replace_at(self.current, position, chain.start))
        for step in chain.steps:
            self._push(
                EqStep(
                    self.current,
                    replace_at(self.current, position, step.target),
                    step.justification,
                    tuple(position) + step.position,
                    step.direction,
                    step.substitution,
                )
            )

    def insert(self, chain: EqChain, position: Path) -> Optional[Path]:
        """Run chain backwards from 0, adding its start term as a summand of the node at position.

        Returns the position of the new summand, or None for a chain with no steps.
        """
        if not chain.steps:
            return None
        last = chain.steps[-1]
        if last.position != ():
            raise TranslationError("a chain used in reverse must end with a step at the root")
        terms = [chain.start] + [step.target for step in chain.steps]
        grown, slot = insert_summand(self.current, position, terms[-2])
        self._push(EqStep(self.current, grown, last.justification, tuple(position), last.direction.flipped(), last.substitution))
        for j in range(len(chain.steps) - 2, -1, -1):
            step = chain.steps[j]
            self._push(
                EqStep(
                    self.current,
                    replace_at(self.current, slot, terms[j]),
                    step.justification,
                    slot + step.position,
                    step.direction.flipped(),
                    step.substitution,
                )
            )
        return slot

    def build(self, conclusion: Optional[str] = None) -> EqChain:
        return EqChain(self.start, list(self.steps), conclusion)


def _open_antecedent(builder: ChainBuilder, s: Sequent):
    """Make the current term an implication: A becomes 0 -> A"""
    if not s.antecedent:
        builder.rewrite("Eq3", R2L, {"x": formula_to_term(s.succedent)})


def _close(builder: ChainBuilder, x: AlgTerm, y: AlgTerm):
    """x + y -> y  =  x -> y -> y  =  x -> 0  =  0"""
    builder.rewrite("Eq4", L2R, {"x": x, "y": y, "z": y})
    builder.rewrite("Eq1", L2R, {"x": y}, (1,))
    builder.rewrite("Eq2", L2R, {"x": x})


def _asm(s: Sequent) -> EqChain:
    a = formula_to_term(s.succedent)
    builder = ChainBuilder(sequent_term(s))
    rest = antecedent_term(s.without(s.succedent).antecedent)
    if rest is None:
        builder.rewrite("Eq1", L2R, {"x": a})
    else:
        _close(builder, rest, a)
    return builder.build()


def _cwc(s: Sequent) -> EqChain:
    # Γ, A ⊗ (A ⊸ B) ⊢ B ⊗ (B ⊸ A)
    target = s.succedent
    b, a = formula_to_term(target.left), formula_to_term(target.right.right)
    pair = Conj(target.right.right, Imp(target.right.right, target.left))
    builder = ChainBuilder(sequent_term(s))
    builder.rewrite("Eq5", L2R, {"x": a, "y": b}, (0,))
    rest = antecedent_term(s.without(pair).antecedent)
    _close(builder, rest or ZERO_TERM, formula_to_term(target))
    return builder.build()


def _imp_i(s: Sequent, premise: EqChain) -> EqChain:
    builder = ChainBuilder(sequent_term(s))
    gamma = antecedent_term(s.antecedent)
    if gamma is not None:
        a, b = formula_to_term(s.succedent.left), formula_to_term(s.succedent.right)
        builder.rewrite("Eq4", R2L, {"x": gamma, "y": a, "z": b}, node=premise.start)
    builder.splice(premise)
    return builder.build()


def _imp_e(s: Sequent, minor: Sequent, minor_chain: EqChain, major: Sequent, major_chain: EqChain) -> EqChain:
    a, b = formula_to_term(minor.succedent), formula_to_term(s.succedent)
    gamma, delta = antecedent_term(minor.antecedent), antecedent_term(major.antecedent)
    builder = ChainBuilder(sequent_term(s))
    _open_antecedent(builder, s)
    builder.insert(minor_chain, (0,))
    rest: List[AlgTerm] = []
    if gamma is not None:
        # γ + (γ -> a) = a + (a -> γ)
        builder.rewrite("Eq5", L2R, {"x": gamma, "y": a}, (0,))
        rest.append(Arrow(a, gamma))
        builder.rearrange(Arrow(plus(*rest, *([delta] if delta is not None else []), a), b))
    slot = builder.insert(major_chain, (0,))
    if delta is not None:
        # δ -> a -> b = δ + a -> b
        builder.rewrite("Eq4", R2L, {"x": delta, "y": a, "z": b}, slot)
        x = plus(delta, a)
    else:
        x = a
    builder.rewrite("Eq5", L2R, {"x": x, "y": b}, (0,))
    q = plus(*rest, Arrow(b, x))
    builder.rearrange(Arrow(plus(q, b), b))
    _close(builder, q, b)
    return builder.build()


def _conj_i(s: Sequent, left: Sequent, left_chain: EqChain, right: Sequent, right_chain: EqChain) -> EqChain:
    a, b = formula_to_term(left.succedent), formula_to_term(right.succedent)
    c = formula_to_term(s.succedent)
    builder = ChainBuilder(sequent_term(s))
    _open_antecedent(builder, s)
    builder.insert(left_chain, (0,))
    builder.insert(right_chain, (0,))
    rest: List[AlgTerm] = []
    for hyp, value in ((left, a), (right, b)):
        gamma = antecedent_term(hyp.antecedent)
        if gamma is not None:
            builder.rewrite("Eq5", L2R, {"x": gamma, "y": value}, (0,))
            rest.append(Arrow(value, gamma))
    if rest:
        builder.rearrange(Arrow(plus(*rest, a, b), c))
    _close(builder, plus(*rest), c)
    return builder.build()


def _conj_e(s: Sequent, major: Sequent, major_chain: EqChain, minor: Sequent, minor_chain: EqChain) -> EqChain:
    pair, c = formula_to_term(major.succedent), formula_to_term(s.succedent)
    gamma = antecedent_term(major.antecedent)
    builder = ChainBuilder(sequent_term(s))
    _open_antecedent(builder, s)
    builder.insert(major_chain, (0,))
    rest: List[AlgTerm] = []
    if gamma is not None:
        # γ + (γ -> a + b) = a + b + (a + b -> γ)
        builder.rewrite("Eq5", L2R, {"x": gamma, "y": pair}, (0,))
        rest.append(Arrow(pair, gamma))
    hypothesis = minor_chain.start
    y = hypothesis.left
    builder.rearrange(Arrow(plus(*rest, y), c))
    x = plus(*rest)
    builder.rewrite("Eq4", L2R, {"x": x, "y": y, "z": c})
    builder.splice(minor_chain, (1,))
    builder.rewrite("Eq2", L2R, {"x": x})
    return builder.build()


def _translate(proof: Proof) -> EqChain:
    s = proof.conclusion
    if isinstance(proof, AxiomLeaf):
        return _asm(s) if proof.schema is AxiomSchema.ASM else _cwc(s)
    chains = [_translate(p) for p in proof.premises]
    premises = [p.conclusion for p in proof.premises]
    if proof.rule is Rule.IMP_I:
        return _imp_i(s, chains[0])
    if proof.rule is Rule.IMP_E:
        return _imp_e(s, premises[0], chains[0], premises[1], chains[1])
    if proof.rule is Rule.CONJ_I:
        return _conj_i(s, premises[0], chains[0], premises[1], chains[1])
    return _conj_e(s, premises[0], chains[0], premises[1], chains[1])


@track_duration("translate_proof", "eqtrans")
def translate_proof(proof: Proof) -> EqChain:
    """Equational chain from tr(conclusion) to 0 for an LLu proof using ASM and CWC leaves only"""
    for path, node in walk(proof):
        if isinstance(node, AxiomLeaf) and node.schema not in TRANSLATABLE:
            raise UnsupportedAxiom(node.schema.value, path)
    report = check_proof(proof, LogicId.LLu)
    if not report.ok:
        first = report.first_failure
        where = first.path or "root"
        if first.reason == LANGUAGE_VIOLATION:
            raise UnsupportedConnective(f"node {where} uses 1 or halving")
        raise ProofFormatError(f"proof does not check in LLu: {first.reason} at node {where}")
    chain = _translate(proof)
    chain.conclusion = str(proof.conclusion)
    logger.info(f"translated proof of {proof.conclusion} into {len(chain)} steps")
    return chain


def chain_length_bound(proof: Proof) -> int:
    return 10 * sum(1 for _ in walk(proof))
