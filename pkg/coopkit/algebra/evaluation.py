from typing import Any, Mapping

from coopkit.exceptions import InvalidModelError, UnsupportedConnective
from coopkit.syntax import Conj, Formula, Half, Imp, One, Sequent, Var, Zero, classify_language

from .models import AlgebraModel


def eval_formula(f: Formula, assignment: Mapping[str, Any], model: AlgebraModel) -> Any:
    """Value of f under assignment: 0, *, -o, /2 and 1 as 0, +, ->, halving and the annihilator"""
    if isinstance(f, Var):
        try:
            return assignment[f.name]
        except KeyError:
            raise InvalidModelError(f"no value assigned to {f.name}") from None
    if isinstance(f, Zero):
        return model.zero
    if isinstance(f, One):
        if not model.has_one:
            raise UnsupportedConnective(f"{model.name} cannot interpret the constant 1")
        return model.one
    if isinstance(f, Conj):
        return model.plus(eval_formula(f.left, assignment, model), eval_formula(f.right, assignment, model))
    if isinstance(f, Imp):
        return model.imp(eval_formula(f.left, assignment, model), eval_formula(f.right, assignment, model))
    if isinstance(f, Half):
        if not model.has_half:
            raise UnsupportedConnective(f"{model.name} cannot interpret halving")
        return model.half(eval_formula(f.body, assignment, model))
    raise TypeError(f"not a formula: {f!r}")


def antecedent_value(s: Sequent, assignment: Mapping[str, Any], model: AlgebraModel) -> Any:
    return model.sum(eval_formula(f, assignment, model) for f in s.antecedent)


def check_sequent(s: Sequent, assignment: Mapping[str, Any], model: AlgebraModel) -> bool:
    """The antecedent sum is >= the succedent in the pocrim order"""
    return model.geq(antecedent_value(s, assignment, model), eval_formula(s.succedent, assignment, model))


def supports(model: AlgebraModel, formula: Formula) -> bool:
    """Whether every connective of formula is interpretable in model"""
    language = classify_language(formula)
    return (model.has_one or not language.has_one) and (model.has_half or not language.has_half)


def supports_sequent(model: AlgebraModel, s: Sequent) -> bool:
    return all(supports(model, f) for f in s.formulas())
