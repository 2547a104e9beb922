from typing import Any, Dict

from pydantic import BaseModel, ConfigDict

from coopkit.utils.formatters import format_json, jsonable


class CoopkitModel(BaseModel):
    """Base for file formats and reports"""

    model_config = ConfigDict(
        populate_by_name=True,
        arbitrary_types_allowed=True,
        extra="forbid",
    )

    def to_payload(self) -> Dict[str, Any]:
        """JSON-ready dict with exact scalars rendered as 'p/q'"""
        return jsonable(self.model_dump(by_alias=True, exclude_none=True))

    def to_json(self) -> str:
        return format_json(self.to_payload())
