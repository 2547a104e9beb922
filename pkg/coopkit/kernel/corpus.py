"""The shipped proof corpus.

Each entry builds its proof from scratch and names the least logic of the
lattice it is meant to check in. The same trees are kept as JSON under
``corpus/proofs/`` in the repository root.
"""
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List

from coopkit.exceptions import CoopkitError
from coopkit.syntax import parse_sequent

from .logics import LogicId
from .proof import AxiomLeaf, Proof, RuleNode, axiom, rule
from .transforms import Shape, apply_deduction

CORPUS_DIR = Path(__file__).resolve().parents[2] / "corpus" / "proofs"


def _asm(text: str) -> AxiomLeaf:
    return axiom("ASM", parse_sequent(text))


def _ax(schema: str, text: str) -> AxiomLeaf:
    return axiom(schema, parse_sequent(text))


def _by(kind: str, text: str, *premises: Proof) -> RuleNode:
    return rule(kind, parse_sequent(text), *premises)


def identity() -> Proof:
    return _by("ImpI", "|- P -o P", _asm("P |- P"))


def deduction_uncurried() -> Proof:
    return _asm("P, Q |- P")


def deduction_curried() -> Proof:
    return apply_deduction(deduction_uncurried(), Shape.CURRIED)


def deduction_conj_form() -> Proof:
    return apply_deduction(deduction_uncurried(), Shape.CONJ_FORM)


def modus_ponens() -> Proof:
    return _by("ImpE", "P, P -o Q |- Q", _asm("P |- P"), _asm("P -o Q |- P -o Q"))


def transitivity() -> Proof:
    chained = _by("ImpE", "P, P -o Q, Q -o R |- R", modus_ponens(), _asm("Q -o R |- Q -o R"))
    return _by("ImpI", "P -o Q, Q -o R |- P -o R", chained)


def suffixing() -> Proof:
    """⊢ (P ⊸ Q) ⊸ (Q ⊸ R) ⊸ P ⊸ R"""
    step = _by("ImpI", "P -o Q |- (Q -o R) -o P -o R", transitivity())
    return _by("ImpI", "|- (P -o Q) -o (Q -o R) -o P -o R", step)


def commuted_disjunction_law() -> Proof:
    """⊢ ((P ⊸ Q) ⊸ Q) ⊸ (Q ⊸ P) ⊸ P, a CSD instance"""
    leaf = _ax("CSD", "(P -o Q) -o Q |- (Q -o P) -o P")
    return _by("ImpI", "|- ((P -o Q) -o Q) -o (Q -o P) -o P", leaf)


def contraposition() -> Proof:
    """⊢ (P^⊥ ⊸ Q^⊥) ⊸ Q ⊸ P"""
    negated = _by("ImpE", "P^, P^ -o Q^ |- Q^", _asm("P^ |- P^"), _asm("P^ -o Q^ |- P^ -o Q^"))
    absurd = _by("ImpE", "Q, P^, P^ -o Q^ |- 1", _asm("Q |- Q"), negated)
    doubled = _by("ImpI", "Q, P^ -o Q^ |- P^^", absurd)
    dne = _by("ImpI", "|- P^^ -o P", _ax("DNE", "P^^ |- P"))
    recovered = _by("ImpE", "Q, P^ -o Q^ |- P", doubled, dne)
    return _by("ImpI", "|- (P^ -o Q^) -o Q -o P", _by("ImpI", "P^ -o Q^ |- Q -o P", recovered))


def half_upper_bound() -> Proof:
    """⊢ (P/2 ⊸ P) ⊸ P/2"""
    return _by("ImpI", "|- (P/2 -o P) -o P/2", _ax("HUB", "P/2 -o P |- P/2"))


def half_lower_bound() -> Proof:
    """⊢ P/2 ⊸ P/2 ⊸ P"""
    pair = _by("ConjI", "P/2, P/2 |- P/2 * P/2", _asm("P/2 |- P/2"), _asm("P/2 |- P/2"))
    hlb = _by("ImpI", "|- P/2 * P/2 -o P", _ax("HLB", "P/2 * P/2 |- P"))
    both = _by("ImpE", "P/2, P/2 |- P", pair, hlb)
    return _by("ImpI", "|- P/2 -o P/2 -o P", _by("ImpI", "P/2 |- P/2 -o P", both))


def commutative_weak_conjunction() -> Proof:
    leaf = _ax("CWC", "P * (P -o Q) |- Q * (Q -o P)")
    return _by("ImpI", "|- P * (P -o Q) -o Q * (Q -o P)", leaf)


def shared_premise() -> Proof:
    """P, Q ⊸ P ⊢ Q ⊸ P ⊗ P"""
    mp = _by("ImpE", "Q, Q -o P |- P", _asm("Q |- Q"), _asm("Q -o P |- Q -o P"))
    both = _by("ConjI", "P, Q, Q -o P |- P * P", _asm("P |- P"), mp)
    return _by("ImpI", "P, Q -o P |- Q -o P * P", both)


def conj_commutativity() -> Proof:
    swap = _by("ConjI", "Q, P |- Q * P", _asm("Q |- Q"), _asm("P |- P"))
    opened = _by("ConjE", "P * Q |- Q * P", _asm("P * Q |- P * Q"), swap)
    return _by("ImpI", "|- P * Q -o Q * P", opened)


def currying() -> Proof:
    """⊢ (P ⊗ Q ⊸ R) ⊸ P ⊸ Q ⊸ R"""
    pair = _by("ConjI", "P, Q |- P * Q", _asm("P |- P"), _asm("Q |- Q"))
    applied = _by("ImpE", "P, Q, P * Q -o R |- R", pair, _asm("P * Q -o R |- P * Q -o R"))
    step = _by("ImpI", "P, P * Q -o R |- Q -o R", applied)
    step = _by("ImpI", "P * Q -o R |- P -o Q -o R", step)
    return _by("ImpI", "|- (P * Q -o R) -o P -o Q -o R", step)


def uncurrying() -> Proof:
    """⊢ (P ⊸ Q ⊸ R) ⊸ P ⊗ Q ⊸ R"""
    first = _by("ImpE", "P, P -o Q -o R |- Q -o R", _asm("P |- P"), _asm("P -o Q -o R |- P -o Q -o R"))
    second = _by("ImpE", "Q, P, P -o Q -o R |- R", _asm("Q |- Q"), first)
    opened = _by("ConjE", "P * Q, P -o Q -o R |- R", _asm("P * Q |- P * Q"), second)
    step = _by("ImpI", "P -o Q -o R |- P * Q -o R", opened)
    return _by("ImpI", "|- (P -o Q -o R) -o P * Q -o R", step)


def contraction_leaf() -> Proof:
    return _ax("CON", "P |- P * P")


def explosion_leaf() -> Proof:
    return _ax("EFQ", "1 |- P")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    logic: LogicId
    build: Callable[[], Proof]
    description: str

    @property
    def path(self) -> Path:
        return CORPUS_DIR / f"{self.name}.json"

    def proof(self) -> Proof:
        return _built(self.name)


_ENTRIES: List[CorpusEntry] = [
    CorpusEntry("identity", LogicId.ALu, identity, "|- A -o A"),
    CorpusEntry("deduction-uncurried", LogicId.ALu, deduction_uncurried, "A1, A2 |- B"),
    CorpusEntry("a1", LogicId.ALu, deduction_curried, "|- A -o B -o A (curried deduction shape)"),
    CorpusEntry("deduction-conj", LogicId.ALu, deduction_conj_form, "|- A1 * A2 -o B"),
    CorpusEntry("a2", LogicId.ALu, suffixing, "|- (A -o B) -o (B -o C) -o A -o C"),
    CorpusEntry("transitivity", LogicId.ALu, transitivity, "A -o B, B -o C |- A -o C"),
    CorpusEntry("a3", LogicId.LLc, commuted_disjunction_law, "|- ((A -o B) -o B) -o (B -o A) -o A"),
    CorpusEntry("a4", LogicId.ALc, contraposition, "|- (A^ -o B^) -o B -o A"),
    CorpusEntry("a5", LogicId.CLu, half_upper_bound, "|- (A/2 -o A) -o A/2"),
    CorpusEntry("a6", LogicId.CLu, half_lower_bound, "|- A/2 -o A/2 -o A"),
    CorpusEntry("cwc", LogicId.LLu, commutative_weak_conjunction, "CWC as a theorem"),
    CorpusEntry("shared-premise", LogicId.ALu, shared_premise, "P, Q -o P |- Q -o P * P"),
    CorpusEntry("conj-commutativity", LogicId.ALu, conj_commutativity, "|- A * B -o B * A"),
    CorpusEntry("currying", LogicId.ALu, currying, "|- (A * B -o C) -o A -o B -o C"),
    CorpusEntry("uncurrying", LogicId.ALu, uncurrying, "|- (A -o B -o C) -o A * B -o C"),
    CorpusEntry("modus-ponens", LogicId.ALu, modus_ponens, "A, A -o B |- B"),
    CorpusEntry("contraction-leaf", LogicId.ILu, contraction_leaf, "A |- A * A"),
    CorpusEntry("explosion-leaf", LogicId.ALi, explosion_leaf, "1 |- A"),
]

CORPUS: Dict[str, CorpusEntry] = {entry.name: entry for entry in _ENTRIES}


@lru_cache(maxsize=None)
def _built(name: str) -> Proof:
    return CORPUS[name].build()


def corpus_entries() -> List[CorpusEntry]:
    return list(_ENTRIES)


def corpus_entry(name: str) -> CorpusEntry:
    try:
        return CORPUS[name]
    except KeyError:
        raise CoopkitError(f"no corpus proof named {name!r}") from None
