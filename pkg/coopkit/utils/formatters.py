import json
from fractions import Fraction
from typing import Any, Dict, Mapping


def format_scalar(value: Any) -> str:
    """Format an exact scalar as 'p/q' (or 'p' when integral)"""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    to_fraction = getattr(value, "to_fraction", None)
    if to_fraction is not None:
        return format_scalar(to_fraction())
    return str(value)


def format_assignment(assignment: Mapping[str, Any]) -> str:
    """Format a variable assignment as 'P=1/2, Q=0' in name order"""
    return ", ".join(f"{name}={format_scalar(assignment[name])}" for name in sorted(assignment))


def jsonable(value: Any) -> Any:
    """Turn exact values and nested containers into JSON-friendly data"""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction) or hasattr(value, "to_fraction"):
        return format_scalar(value)
    if isinstance(value, Mapping):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    model_dump = getattr(value, "model_dump", None)
    if model_dump is not None:
        return jsonable(model_dump(mode="json"))
    return str(value)


def format_json(payload: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, exact fractions as strings"""
    return json.dumps(jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False)


def format_table(table) -> str:
    """Render an operation table as aligned rows"""
    width = max((len(str(v)) for row in table for v in row), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in table)
