from typing import Dict, List, Optional

from pydantic import Field

from .base import CoopkitModel


class ChainStepFile(CoopkitModel):
    """The term reached by one step and how it was reached"""

    term: str
    justification: str = Field(..., description="Eq1..Eq5 or MonoidRearrange")
    position: List[int] = Field(default_factory=list, description="Path from the root of the previous term")
    direction: str = Field("L2R", pattern="^(L2R|R2L)$")
    substitution: Dict[str, str] = Field(default_factory=dict)


class ChainFile(CoopkitModel):
    start: str
    steps: List[ChainStepFile] = Field(default_factory=list)
    conclusion: Optional[str] = Field(None, description="Sequent the chain was translated from")
