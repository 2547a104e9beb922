from pathlib import Path
from typing import Union

from loguru import logger
from pydantic import ValidationError

from coopkit.exceptions import FormulaSyntaxError, ProofFormatError
from coopkit.models.proof import NodeKind, ProofFile
from coopkit.syntax import parse_sequent, render_sequent

from .logics import AxiomSchema
from .proof import AxiomLeaf, Proof, Rule, RuleNode


def proof_from_file(data: ProofFile, path: str = "") -> Proof:
    try:
        conclusion = parse_sequent(data.conclusion)
    except FormulaSyntaxError as e:
        raise ProofFormatError(f"node {path or 'root'}: {e}") from e
    if data.kind is NodeKind.AXIOM:
        try:
            schema = AxiomSchema(data.axiom_schema)
        except ValueError:
            raise ProofFormatError(f"node {path or 'root'}: unknown axiom schema {data.axiom_schema!r}") from None
        return AxiomLeaf(schema, conclusion)
    premises = tuple(
        proof_from_file(p, f"{path}.{i}" if path else str(i)) for i, p in enumerate(data.premises)
    )
    return RuleNode(Rule.parse(data.rule), premises, conclusion)


def proof_to_file(proof: Proof) -> ProofFile:
    conclusion = render_sequent(proof.conclusion)
    if isinstance(proof, AxiomLeaf):
        return ProofFile(kind=NodeKind.AXIOM, conclusion=conclusion, axiom_schema=proof.schema.value)
    return ProofFile(
        kind=NodeKind.RULE,
        conclusion=conclusion,
        rule=proof.rule.value,
        premises=[proof_to_file(p) for p in proof.premises],
    )


def parse_proof(text: str) -> Proof:
    try:
        data = ProofFile.model_validate_json(text)
    except ValidationError as e:
        error = e.errors()[0]
        where = ".".join(str(part) for part in error["loc"])
        raise ProofFormatError(f"malformed proof file at {where or 'top level'}: {error['msg']}") from e
    return proof_from_file(data)


def load_proof(path: Union[str, Path]) -> Proof:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ProofFormatError(f"cannot read {path}: {e.strerror}") from e
    proof = parse_proof(text)
    logger.debug(f"Loaded proof of {proof.conclusion} from {path}")
    return proof


def dump_proof(proof: Proof) -> str:
    return proof_to_file(proof).to_json()
