from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import Field, model_validator

from .base import CoopkitModel


class Failure(CoopkitModel):
    path: str = Field(..., description="Premise indices from the root, '' for the root")
    reason: str


class CheckReport(CoopkitModel):
    ok: bool
    failures: List[Failure] = Field(default_factory=list)

    @model_validator(mode="after")
    def _ok_iff_no_failures(self):
        if self.ok != (not self.failures):
            raise ValueError("ok must hold exactly when there are no failures")
        return self

    @classmethod
    def from_failures(cls, failures: List[Failure]) -> "CheckReport":
        return cls(ok=not failures, failures=failures)

    @property
    def first_failure(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None


class LawStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not applicable"


class LawVerdict(CoopkitModel):
    law: str
    status: LawStatus
    checked: int = Field(0, description="Number of tuples examined")
    witness: Optional[Tuple[Any, ...]] = None


class LawReport(CoopkitModel):
    model: str
    mode: str
    verdicts: Dict[str, LawVerdict]

    def status(self, law: str) -> LawStatus:
        return self.verdicts[law].status

    def passed(self, law: str) -> bool:
        return self.verdicts[law].status is LawStatus.PASS

    @property
    def failed_laws(self) -> List[str]:
        return [name for name, v in self.verdicts.items() if v.status is LawStatus.FAIL]

    def satisfies(self, laws) -> bool:
        """All of the given laws pass (``laws`` may be an AlgebraClass)"""
        required = getattr(laws, "laws", laws)
        return all(self.passed(law) for law in required)


class PropertyCheck(CoopkitModel):
    ok: bool
    checked: int = 0
    witness: Optional[Any] = None
    note: Optional[str] = None


class PropertyReport(CoopkitModel):
    title: str
    checks: Dict[str, PropertyCheck] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [name for name, check in self.checks.items() if not check.ok]

    def record(self, name: str, ok: bool, checked: int = 0, witness: Any = None, note: Optional[str] = None):
        self.checks[name] = PropertyCheck(ok=ok, checked=checked, witness=witness, note=note)


class ClassifyRecord(CoopkitModel):
    simple: bool
    archimedean: bool
    linear: bool
    subdirectly_irreducible: bool
    depths: Dict[str, int]


class ChainVerdict(CoopkitModel):
    ok: bool
    failed_step: Optional[int] = None
    reason: Optional[str] = None
    expected: Optional[str] = None
    actual: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


class Verdict(CoopkitModel):
    """Valid, or an exact countermodel found in one ambient"""

    valid: bool
    ambient: Optional[str] = None
    assignment: Dict[str, Fraction] = Field(default_factory=dict)
    values: Dict[str, Fraction] = Field(default_factory=dict)

    @classmethod
    def holds(cls) -> "Verdict":
        return cls(valid=True)

    def __bool__(self) -> bool:
        return self.valid
