"""Reading command arguments: models, proofs, statements and assignments."""
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from coopkit.algebra import AlgebraModel, FiniteAlgebra, find_model, load_algebra
from coopkit.exceptions import CoopkitError, InvalidModelError
from coopkit.kernel import CORPUS, Proof, load_proof
from coopkit.syntax import Formula, Sequent, parse_formula, parse_sequent

TURNSTILE = "|-"


def load_model(ref: str) -> AlgebraModel:
    """A JSON algebra file, or a standard model name (``L3``, ``G4``, ``dyadic-capped:1``)"""
    if ref.endswith(".json") or Path(ref).is_file():
        return load_algebra(ref)
    model = find_model(ref)
    if model is None:
        raise InvalidModelError(f"no model named {ref!r} and no such file")
    return model


def load_finite(ref: str) -> FiniteAlgebra:
    model = load_model(ref)
    if not isinstance(model, FiniteAlgebra):
        raise InvalidModelError(f"{model.name} is not a finite algebra")
    return model


def load_proof_ref(ref: str) -> Proof:
    """A proof file, or the name of a corpus proof"""
    if ref in CORPUS and not Path(ref).exists():
        return CORPUS[ref].proof()
    return load_proof(ref)


def parse_statement(text: str) -> Union[Formula, Sequent]:
    return parse_sequent(text) if TURNSTILE in text else parse_formula(text)


def parse_assignments(pairs: Optional[Sequence[str]], model: AlgebraModel, names: List[str]) -> Dict[str, Any]:
    """NAME=VALUE pairs read into carrier elements; every name must be bound"""
    assignment: Dict[str, Any] = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep or not name.strip():
            raise CoopkitError(f"expected NAME=VALUE, got {pair!r}")
        assignment[name.strip()] = model.coerce(value.strip())
    missing = [name for name in names if name not in assignment]
    if missing:
        raise CoopkitError(f"no value for {', '.join(missing)}")
    return assignment
