from typing import List, Optional

from pydantic import Field, model_validator

from coopkit.utils.validators import validate_table

from .base import CoopkitModel


class AlgebraFile(CoopkitModel):
    """Finite algebra on disk: operation tables over 0..size-1"""

    size: int = Field(..., ge=1, description="Carrier size")
    zero: int = Field(0, ge=0)
    plus: List[List[int]]
    imp: List[List[int]]
    one: Optional[int] = Field(None, ge=0, description="Annihilator, when bounded")
    half: Optional[List[int]] = None
    name: Optional[str] = None
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _tables_total(self):
        for table_name in ("plus", "imp"):
            if not validate_table(getattr(self, table_name), self.size):
                raise ValueError(f"{table_name} must be a total {self.size}x{self.size} table over 0..{self.size - 1}")
        for index_name in ("zero", "one"):
            value = getattr(self, index_name)
            if value is not None and value >= self.size:
                raise ValueError(f"{index_name} index {value} outside carrier")
        if self.half is not None and (len(self.half) != self.size or any(not 0 <= v < self.size for v in self.half)):
            raise ValueError("half must map the carrier into itself")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("labels must name every element")
        return self
