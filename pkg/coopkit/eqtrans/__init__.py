from .chain import chain_from_file, chain_from_path, chain_to_file, chain_to_path, chain_verdict, dump_chain, load_chain, verify_chain
from .equations import EQUATIONS, JUSTIFICATIONS, REARRANGE, Direction, EqChain, EqStep, Equation, apply_step, rewrite_at
from .terms import (
    ZERO_TERM,
    AlgTerm,
    Arrow,
    Atom,
    Sum,
    ZeroTerm,
    ac_equal,
    ac_normalize,
    atoms,
    eval_term,
    formula_to_term,
    parse_term,
    plus,
    render_term,
    subterm,
    term_size,
)
from .translate import ChainBuilder, chain_length_bound, sequent_term, translate_proof

__all__ = [
    'chain_from_file', 'chain_from_path', 'chain_to_file', 'chain_to_path', 'chain_verdict', 'dump_chain',
    'load_chain', 'verify_chain',
    'EQUATIONS', 'JUSTIFICATIONS', 'REARRANGE', 'Direction', 'EqChain', 'EqStep', 'Equation', 'apply_step', 'rewrite_at',
    'ZERO_TERM', 'AlgTerm', 'Arrow', 'Atom', 'Sum', 'ZeroTerm', 'ac_equal', 'ac_normalize', 'atoms', 'eval_term',
    'formula_to_term', 'parse_term', 'plus', 'render_term', 'subterm', 'term_size',
    'ChainBuilder', 'chain_length_bound', 'sequent_term', 'translate_proof',
]
