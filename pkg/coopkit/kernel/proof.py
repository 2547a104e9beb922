"""Natural-deduction proof trees.

Nodes are immutable. Every node stores its concluding sequent; nothing is
inferred from labels, so a tree read from a file can be checked as is.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple, Union

from coopkit.exceptions import ProofFormatError
from coopkit.syntax import Formula, Sequent

from .logics import AxiomSchema


class Rule(str, Enum):
    IMP_I = "ImpI"
    IMP_E = "ImpE"
    CONJ_I = "ConjI"
    CONJ_E = "ConjE"

    @property
    def arity(self) -> int:
        return 1 if self is Rule.IMP_I else 2

    @classmethod
    def parse(cls, text: str) -> "Rule":
        try:
            return cls(text)
        except ValueError:
            raise ProofFormatError(f"unknown rule {text!r}") from None


@dataclass(frozen=True)
class AxiomLeaf:
    schema: AxiomSchema
    conclusion: Sequent

    @property
    def premises(self) -> Tuple["Proof", ...]:
        return ()


@dataclass(frozen=True)
class RuleNode:
    rule: Rule
    premises: Tuple["Proof", ...]
    conclusion: Sequent


Proof = Union[AxiomLeaf, RuleNode]


def axiom(schema: Union[AxiomSchema, str], conclusion: Sequent) -> AxiomLeaf:
    return AxiomLeaf(AxiomSchema(schema), conclusion)


def rule(kind: Union[Rule, str], conclusion: Sequent, *premises: Proof) -> RuleNode:
    return RuleNode(Rule(kind), tuple(premises), conclusion)


def walk(proof: Proof, path: str = "") -> Iterator[Tuple[str, Proof]]:
    """(path, node) pairs in pre-order; paths are dotted premise indices"""
    yield path, proof
    for i, premise in enumerate(proof.premises):
        yield from walk(premise, f"{path}.{i}" if path else str(i))


def proof_size(proof: Proof) -> int:
    return sum(1 for _ in walk(proof))


def proof_depth(proof: Proof) -> int:
    return 1 + max((proof_depth(p) for p in proof.premises), default=0)


def proof_formulas(proof: Proof) -> Iterator[Formula]:
    """Every formula of every conclusion in the tree"""
    for _, node in walk(proof):
        yield from node.conclusion.formulas()


def axioms_used(proof: Proof) -> Tuple[AxiomSchema, ...]:
    return tuple(sorted({node.schema for _, node in walk(proof) if isinstance(node, AxiomLeaf)}, key=list(AxiomSchema).index))


def node_at(proof: Proof, path: str) -> Proof:
    node = proof
    for part in filter(None, path.split(".")):
        index = int(part)
        if index >= len(node.premises):
            raise ProofFormatError(f"no premise {path!r}")
        node = node.premises[index]
    return node
