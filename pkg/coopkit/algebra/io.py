from pathlib import Path
from typing import Union

from loguru import logger
from pydantic import ValidationError

from coopkit.exceptions import InvalidModelError
from coopkit.models.algebra import AlgebraFile

from .models import FiniteAlgebra


def algebra_from_file(data: AlgebraFile) -> FiniteAlgebra:
    return FiniteAlgebra(
        data.size,
        data.plus,
        data.imp,
        zero=data.zero,
        one=data.one,
        half=data.half,
        name=data.name or "finite",
        labels=data.labels,
    )


def algebra_to_file(algebra: FiniteAlgebra) -> AlgebraFile:
    return AlgebraFile(
        size=algebra.size,
        zero=algebra.zero,
        plus=[list(row) for row in algebra.plus_table],
        imp=[list(row) for row in algebra.imp_table],
        one=algebra.one if algebra.has_one else None,
        half=list(algebra.half_table) if algebra.has_half else None,
        name=algebra.name,
        labels=list(algebra.labels),
    )


def parse_algebra(text: str) -> FiniteAlgebra:
    try:
        data = AlgebraFile.model_validate_json(text)
    except ValidationError as e:
        raise InvalidModelError(f"malformed algebra: {e.errors()[0]['msg']}") from e
    return algebra_from_file(data)


def load_algebra(path: Union[str, Path]) -> FiniteAlgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidModelError(f"cannot read {path}: {e.strerror}") from e
    algebra = parse_algebra(text)
    if algebra.name == "finite":
        algebra.name = path.stem
    logger.debug(f"Loaded {algebra.size}-element algebra from {path}")
    return algebra


def dump_algebra(algebra: FiniteAlgebra) -> str:
    return algebra_to_file(algebra).to_json()
