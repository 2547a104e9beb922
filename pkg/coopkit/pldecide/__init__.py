from .decide import decide_equation, decide_inequation, decide_sequent, decide_universal, describe_verdict, sequent_sum
from .horn import HalvingElimination, HornClause, check_horn_sample, eliminate_halving, eliminate_halving_with_names
from .linear import Constraint, LinearExpr, equality, fm_feasible, fm_witness, simplest_between
from .matrix import And, Cmp, Matrix, Not, Or, implies, matrix_holds, matrix_to_text, matrix_variables, parse_matrix, parse_term
from .oracle import grid_max_abs
from .pl import Ambient, Piece, PLTerm, as_formula, compile_pl

__all__ = [
    'decide_equation', 'decide_inequation', 'decide_sequent', 'decide_universal', 'describe_verdict', 'sequent_sum',
    'HalvingElimination', 'HornClause', 'check_horn_sample', 'eliminate_halving', 'eliminate_halving_with_names',
    'Constraint', 'LinearExpr', 'equality', 'fm_feasible', 'fm_witness', 'simplest_between',
    'And', 'Cmp', 'Matrix', 'Not', 'Or', 'implies', 'matrix_holds', 'matrix_to_text', 'matrix_variables',
    'parse_matrix', 'parse_term',
    'grid_max_abs',
    'Ambient', 'Piece', 'PLTerm', 'as_formula', 'compile_pl',
]
