from .formula import (
    ONE,
    ZERO,
    Conj,
    Formula,
    Half,
    Imp,
    LanguageId,
    One,
    Sequent,
    Var,
    Zero,
    classify_language,
    formula_size,
    language_contains,
    language_join,
    multiset_contains,
    neg,
    sequent_language,
    subformulas,
    variables,
)
from .parser import parse_formula, parse_sequent, tokenize
from .printer import render_formula, render_sequent

__all__ = [
    'ONE', 'ZERO', 'Conj', 'Formula', 'Half', 'Imp', 'LanguageId', 'One', 'Sequent', 'Var', 'Zero',
    'classify_language', 'formula_size', 'language_contains', 'language_join', 'multiset_contains',
    'neg', 'sequent_language', 'subformulas', 'variables',
    'parse_formula', 'parse_sequent', 'tokenize', 'render_formula', 'render_sequent',
]
