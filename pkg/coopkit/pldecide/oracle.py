"""Brute-force reference values on the dyadic grid of [0, 1]^n."""
from fractions import Fraction
from itertools import product as cartesian
from typing import Optional, Tuple

from coopkit.algebra import DenseModel, ScalarKind, eval_formula
from coopkit.syntax import variables

from .pl import CoopTerm, as_formula


def grid_max_abs(t: CoopTerm, exponent: int) -> Tuple[Fraction, Optional[dict]]:
    """Largest value of t over the points i/2^exponent in the unit box, with a point reaching it"""
    f = as_formula(t)
    model = DenseModel(ScalarKind.RATIONAL, 1)
    names = variables(f)
    points = [Fraction(i, 1 << exponent) for i in range((1 << exponent) + 1)]
    best, where = Fraction(0), None
    for values in cartesian(points, repeat=len(names)):
        assignment = dict(zip(names, values))
        value = abs(eval_formula(f, assignment, model))
        if value > best:
            best, where = value, assignment
    return best, where
