from enum import Enum

from coopkit.algebra import AlgebraModel


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def compare_in(model: AlgebraModel, x, y) -> Ordering:
    """Compare in the pocrim order of model"""
    above, below = model.geq(x, y), model.leq(x, y)
    if above and below:
        return Ordering.EQUAL
    if above:
        return Ordering.GREATER
    if below:
        return Ordering.LESS
    return Ordering.INCOMPARABLE
