from .checker import check_node, check_proof, match_axiom
from .corpus import CORPUS, CORPUS_DIR, CorpusEntry, corpus_entries, corpus_entry
from .io import dump_proof, load_proof, parse_proof, proof_from_file, proof_to_file
from .logics import LATTICE_ARROWS, AxiomSchema, LogicId, extensions, model_class, non_extensions
from .proof import (
    AxiomLeaf,
    Proof,
    Rule,
    RuleNode,
    axiom,
    axioms_used,
    node_at,
    proof_depth,
    proof_formulas,
    proof_size,
    rule,
    walk,
)
from .transforms import Shape, apply_deduction, weaken

__all__ = [
    'check_node', 'check_proof', 'match_axiom',
    'CORPUS', 'CORPUS_DIR', 'CorpusEntry', 'corpus_entries', 'corpus_entry',
    'dump_proof', 'load_proof', 'parse_proof', 'proof_from_file', 'proof_to_file',
    'LATTICE_ARROWS', 'AxiomSchema', 'LogicId', 'extensions', 'model_class', 'non_extensions',
    'AxiomLeaf', 'Proof', 'Rule', 'RuleNode', 'axiom', 'axioms_used', 'node_at', 'proof_depth',
    'proof_formulas', 'proof_size', 'rule', 'walk',
    'Shape', 'apply_deduction', 'weaken',
]
