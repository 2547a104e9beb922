"""Proof checking for the twelve logics.

The checker trusts nothing in the tree: each leaf is matched against its
schema, every formula is tested against the logic's language and every rule
node is re-derived from its premises with multiset bookkeeping.
"""
from collections import Counter
from typing import Callable, Dict, List, Optional, Union

from loguru import logger

from coopkit.models.reports import CheckReport, Failure
from coopkit.syntax import (
    Conj,
    Half,
    Imp,
    One,
    Sequent,
    language_contains,
    multiset_contains,
    neg,
    sequent_language,
)
from coopkit.utils.metrics import metrics, track_duration

from .logics import AxiomSchema, LogicId
from .proof import AxiomLeaf, Proof, Rule, RuleNode, walk

BAD_AXIOM = "bad axiom"
AXIOM_NOT_IN_LOGIC = "axiom not in logic"
LANGUAGE_VIOLATION = "language violation"
MULTISET_MISMATCH = "multiset mismatch"
SHAPE_MISMATCH = "rule-shape mismatch"
ARITY_MISMATCH = "arity mismatch"


def _asm(s: Sequent) -> bool:
    return s.succedent in s.antecedent


def _efq(s: Sequent) -> bool:
    return any(isinstance(f, One) for f in s.antecedent)


def _dne(s: Sequent) -> bool:
    return neg(neg(s.succedent)) in s.antecedent


def _cwc(s: Sequent) -> bool:
    c = s.succedent
    if not (isinstance(c, Conj) and isinstance(c.right, Imp) and c.right.left == c.left):
        return False
    b, a = c.left, c.right.right
    return Conj(a, Imp(a, b)) in s.antecedent


def _csd(s: Sequent) -> bool:
    c = s.succedent
    if not (isinstance(c, Imp) and isinstance(c.left, Imp) and c.left.right == c.right):
        return False
    b, a = c.left.left, c.right
    return Imp(Imp(a, b), b) in s.antecedent


def _con(s: Sequent) -> bool:
    c = s.succedent
    return isinstance(c, Conj) and c.left == c.right and c.left in s.antecedent


def _hlb(s: Sequent) -> bool:
    half = Half(s.succedent)
    return Conj(half, half) in s.antecedent


def _hub(s: Sequent) -> bool:
    c = s.succedent
    return isinstance(c, Half) and Imp(c, c.body) in s.antecedent


_MATCHERS: Dict[AxiomSchema, Callable[[Sequent], bool]] = {
    AxiomSchema.ASM: _asm,
    AxiomSchema.EFQ: _efq,
    AxiomSchema.DNE: _dne,
    AxiomSchema.CWC: _cwc,
    AxiomSchema.CSD: _csd,
    AxiomSchema.CON: _con,
    AxiomSchema.HLB: _hlb,
    AxiomSchema.HUB: _hub,
}


def match_axiom(s: Sequent, schema: Union[AxiomSchema, str]) -> bool:
    """Is s an instance of the schema with some residual antecedent?"""
    return _MATCHERS[AxiomSchema(schema)](s)


def _check_leaf(node: AxiomLeaf, logic: LogicId) -> Optional[str]:
    if node.schema not in logic.axioms:
        return AXIOM_NOT_IN_LOGIC
    if not match_axiom(node.conclusion, node.schema):
        return BAD_AXIOM
    return None


def _check_imp_i(conclusion: Sequent, premise: Sequent) -> Optional[str]:
    succ = conclusion.succedent
    if not isinstance(succ, Imp) or premise.succedent != succ.right:
        return SHAPE_MISMATCH
    if premise.multiset != conclusion.multiset + Counter([succ.left]):
        return MULTISET_MISMATCH
    return None


def _check_imp_e(conclusion: Sequent, minor: Sequent, major: Sequent) -> Optional[str]:
    if major.succedent != Imp(minor.succedent, conclusion.succedent):
        return SHAPE_MISMATCH
    if conclusion.multiset != minor.multiset + major.multiset:
        return MULTISET_MISMATCH
    return None


def _check_conj_i(conclusion: Sequent, left: Sequent, right: Sequent) -> Optional[str]:
    if conclusion.succedent != Conj(left.succedent, right.succedent):
        return SHAPE_MISMATCH
    if conclusion.multiset != left.multiset + right.multiset:
        return MULTISET_MISMATCH
    return None


def _check_conj_e(conclusion: Sequent, major: Sequent, minor: Sequent) -> Optional[str]:
    pair = major.succedent
    if not isinstance(pair, Conj) or minor.succedent != conclusion.succedent:
        return SHAPE_MISMATCH
    used = Counter([pair.left, pair.right])
    if not multiset_contains(minor.multiset, used):
        return MULTISET_MISMATCH
    if conclusion.multiset != major.multiset + (minor.multiset - used):
        return MULTISET_MISMATCH
    return None


_RULE_CHECKS = {
    Rule.IMP_I: _check_imp_i,
    Rule.IMP_E: _check_imp_e,
    Rule.CONJ_I: _check_conj_i,
    Rule.CONJ_E: _check_conj_e,
}


def _check_rule(node: RuleNode) -> Optional[str]:
    if len(node.premises) != node.rule.arity:
        return ARITY_MISMATCH
    return _RULE_CHECKS[node.rule](node.conclusion, *(p.conclusion for p in node.premises))


def check_node(node: Proof, logic: LogicId) -> Optional[str]:
    """Reason the node itself is wrong in logic, or None"""
    if not language_contains(logic.language, sequent_language(node.conclusion)):
        return LANGUAGE_VIOLATION
    if isinstance(node, AxiomLeaf):
        return _check_leaf(node, logic)
    return _check_rule(node)


@track_duration("check_proof", "kernel")
def check_proof(proof: Proof, logic: Union[LogicId, str]) -> CheckReport:
    """Check every node; failures are listed in pre-order, root first"""
    logic = LogicId.parse(logic) if isinstance(logic, str) else logic
    failures: List[Failure] = []
    for path, node in walk(proof):
        reason = check_node(node, logic)
        if reason is not None:
            failures.append(Failure(path=path, reason=reason))
    report = CheckReport.from_failures(failures)
    metrics.record_proof_check(logic.value, report.ok)
    if report.ok:
        logger.debug(f"proof of {proof.conclusion} checks in {logic.value}")
    else:
        first = report.first_failure
        logger.debug(f"proof of {proof.conclusion} fails in {logic.value}: {first.reason} at {first.path or 'root'}")
    return report
