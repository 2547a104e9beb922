"""The twelve logics, their axioms, languages, lattice and model classes."""
from enum import Enum
from typing import Dict, FrozenSet, List, Set, Tuple

from coopkit.algebra.laws import AlgebraClass
from coopkit.exceptions import CoopkitError
from coopkit.syntax import LanguageId


class AxiomSchema(str, Enum):
    ASM = "ASM"
    EFQ = "EFQ"
    DNE = "DNE"
    CWC = "CWC"
    CSD = "CSD"
    CON = "CON"
    HLB = "HLB"
    HUB = "HUB"


class LogicId(str, Enum):
    ALu = "ALu"
    ALi = "ALi"
    ALc = "ALc"
    LLu = "LLu"
    LLi = "LLi"
    LLc = "LLc"
    ILu = "ILu"
    IL = "IL"
    BL = "BL"
    CLu = "CLu"
    CLi = "CLi"
    CLc = "CLc"

    @classmethod
    def parse(cls, text: str) -> "LogicId":
        for logic in cls:
            if logic.value.lower() == text.strip().lower():
                return logic
        raise CoopkitError(f"unknown logic {text!r} (known: {', '.join(l.value for l in cls)})")

    @property
    def declared_axioms(self) -> FrozenSet[AxiomSchema]:
        return _DECLARED[self]

    @property
    def axioms(self) -> FrozenSet[AxiomSchema]:
        """Axioms usable in the logic: its own and those of every logic it extends"""
        allowed: Set[AxiomSchema] = set()
        for logic in LogicId:
            if self in extensions(logic):
                allowed |= logic.declared_axioms
        return frozenset(allowed)

    @property
    def language(self) -> LanguageId:
        has_half = self in (LogicId.CLu, LogicId.CLi, LogicId.CLc)
        has_one = bool(self.declared_axioms & {AxiomSchema.EFQ, AxiomSchema.DNE, AxiomSchema.CSD})
        return LanguageId.from_flags(has_one, has_half)

    @property
    def model_class(self) -> AlgebraClass:
        return _MODELS[self]


A = AxiomSchema
_ALU = frozenset({A.ASM})
_ALI = _ALU | {A.EFQ}
_LLU = _ALU | {A.CWC}
_LLI = _LLU | {A.EFQ}
_LLC = _ALI | {A.CSD}
_IL = _ALI | {A.CON}

_DECLARED: Dict[LogicId, FrozenSet[AxiomSchema]] = {
    LogicId.ALu: _ALU,
    LogicId.ALi: _ALI,
    LogicId.ALc: _ALI | {A.DNE},
    LogicId.LLu: _LLU,
    LogicId.LLi: _LLI,
    LogicId.LLc: _LLC,
    LogicId.ILu: _ALU | {A.CON},
    LogicId.IL: _IL,
    LogicId.BL: _IL | {A.DNE},
    LogicId.CLu: _LLU | {A.HLB, A.HUB},
    LogicId.CLi: _LLI | {A.HLB, A.HUB},
    LogicId.CLc: _LLC | {A.HLB, A.HUB},
}

_MODELS: Dict[LogicId, AlgebraClass] = {
    LogicId.ALu: AlgebraClass.POCRIM,
    LogicId.ALi: AlgebraClass.BOUNDED_POCRIM,
    LogicId.ALc: AlgebraClass.INVOLUTIVE_POCRIM,
    LogicId.LLu: AlgebraClass.HOOP,
    LogicId.LLi: AlgebraClass.BOUNDED_HOOP,
    LogicId.LLc: AlgebraClass.INVOLUTIVE_HOOP,
    LogicId.ILu: AlgebraClass.IDEMPOTENT_POCRIM,
    LogicId.IL: AlgebraClass.BOUNDED_IDEMPOTENT_POCRIM,
    LogicId.BL: AlgebraClass.INVOLUTIVE_IDEMPOTENT_POCRIM,
    LogicId.CLu: AlgebraClass.COOP,
    LogicId.CLi: AlgebraClass.BOUNDED_COOP,
    LogicId.CLc: AlgebraClass.INVOLUTIVE_COOP,
}

L = LogicId
LATTICE_ARROWS: List[Tuple[LogicId, LogicId]] = [
    (L.ALu, L.ALi), (L.ALi, L.ALc),
    (L.LLu, L.LLi), (L.LLi, L.LLc),
    (L.CLu, L.CLi), (L.CLi, L.CLc),
    (L.ILu, L.IL), (L.IL, L.BL),
    (L.ALu, L.LLu), (L.LLu, L.CLu),
    (L.ALi, L.LLi), (L.LLi, L.CLi),
    (L.ALc, L.LLc), (L.LLc, L.CLc),
    (L.LLu, L.ILu), (L.LLi, L.IL), (L.LLc, L.BL),
]


def extensions(logic: LogicId) -> List[LogicId]:
    """Reflexive-transitive closure of the lattice arrows out of logic, in declaration order"""
    reached = {logic}
    frontier = [logic]
    while frontier:
        current = frontier.pop()
        for low, high in LATTICE_ARROWS:
            if low == current and high not in reached:
                reached.add(high)
                frontier.append(high)
    return [l for l in LogicId if l in reached]


def non_extensions(logic: LogicId) -> List[LogicId]:
    reached = set(extensions(logic))
    return [l for l in LogicId if l not in reached]


def model_class(logic: LogicId) -> AlgebraClass:
    return logic.model_class
