from enum import Enum
from typing import List, Optional

from pydantic import Field, model_validator

from .base import CoopkitModel


class NodeKind(str, Enum):
    AXIOM = "axiom"
    RULE = "rule"


class ProofFile(CoopkitModel):
    """One node of a proof tree; the conclusion is in sequent text syntax"""

    kind: NodeKind
    conclusion: str = Field(..., description="e.g. 'P, Q |- P'")
    axiom_schema: Optional[str] = Field(None, alias="schema")
    rule: Optional[str] = None
    premises: List["ProofFile"] = Field(default_factory=list)

    @model_validator(mode="after")
    def _kind_fields(self):
        if self.kind is NodeKind.AXIOM:
            if not self.axiom_schema:
                raise ValueError("axiom nodes need a schema")
            if self.rule or self.premises:
                raise ValueError("axiom nodes take no rule or premises")
        else:
            if not self.rule:
                raise ValueError("rule nodes need a rule")
            if self.axiom_schema:
                raise ValueError("rule nodes take no schema")
        return self


ProofFile.model_rebuild()
