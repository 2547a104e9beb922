"""Law checking for pocrims, hoops and coops.

Each law is a predicate over a tuple of carrier elements. Finite algebras are
checked exhaustively; dense models at seeded random tuples. A failing law
keeps the first tuple that violates it, and that witness re-verifies with
``violates``.
"""
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, Optional, Tuple, Union

from loguru import logger

from coopkit.config import settings
from coopkit.exceptions import InvalidModelError
from coopkit.models.reports import LawReport, LawStatus, LawVerdict
from coopkit.utils.metrics import metrics, track_duration

from .models import AlgebraModel


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    holds: Callable[..., bool]
    description: str
    needs_one: bool = False
    needs_half: bool = False

    def applies_to(self, model: AlgebraModel) -> bool:
        return (model.has_one or not self.needs_one) and (model.has_half or not self.needs_half)


def _implies(premise: bool, conclusion: bool) -> bool:
    return conclusion or not premise


LAWS: Dict[str, Law] = {
    law.name: law
    for law in [
        Law("m1", 3, lambda m, x, y, z: m.plus(m.plus(x, y), z) == m.plus(x, m.plus(y, z)), "(x + y) + z = x + (y + z)"),
        Law("m2", 2, lambda m, x, y: m.plus(x, y) == m.plus(y, x), "x + y = y + x"),
        Law("m3", 1, lambda m, x: m.plus(x, m.zero) == x, "x + 0 = x"),
        Law("o1", 1, lambda m, x: m.geq(x, x), "x >= x"),
        Law("o2", 3, lambda m, x, y, z: _implies(m.geq(x, y) and m.geq(y, z), m.geq(x, z)), "x >= y, y >= z => x >= z"),
        Law("o3", 2, lambda m, x, y: _implies(m.geq(x, y) and m.geq(y, x), x == y), "x >= y, y >= x => x = y"),
        Law("o4", 3, lambda m, x, y, z: _implies(m.geq(x, y), m.geq(m.plus(x, z), m.plus(y, z))), "x >= y => x + z >= y + z"),
        Law("le", 1, lambda m, x: m.geq(x, m.zero), "x >= 0"),
        Law("r", 3, lambda m, x, y, z: m.geq(m.plus(x, y), z) == m.geq(x, m.imp(y, z)), "x + y >= z <=> x >= y -> z"),
        Law("cwc", 2, lambda m, x, y: m.plus(x, m.imp(x, y)) == m.plus(y, m.imp(y, x)), "x + (x -> y) = y + (y -> x)"),
        Law("idem", 1, lambda m, x: m.plus(x, x) == x, "x + x = x"),
        Law("ann", 1, lambda m, x: m.plus(x, m.one) == m.one, "x + 1 = 1", needs_one=True),
        Law("inv", 1, lambda m, x: m.negate(m.negate(x)) == x, "(x -> 1) -> 1 = x", needs_one=True),
        Law("h", 1, lambda m, x: m.half(x) == m.imp(m.half(x), x), "x/2 = x/2 -> x", needs_half=True),
        Law("csd", 2, lambda m, x, y: m.imp(m.imp(x, y), y) == m.imp(m.imp(y, x), x), "(x -> y) -> y = (y -> x) -> x"),
    ]
}

POCRIM_LAWS = frozenset({"m1", "m2", "m3", "o1", "o2", "o3", "o4", "le", "r"})


class AlgebraClass(str, Enum):
    POCRIM = "pocrim"
    BOUNDED_POCRIM = "bounded-pocrim"
    INVOLUTIVE_POCRIM = "involutive-pocrim"
    HOOP = "hoop"
    BOUNDED_HOOP = "bounded-hoop"
    INVOLUTIVE_HOOP = "involutive-hoop"
    IDEMPOTENT_POCRIM = "idempotent-pocrim"
    BOUNDED_IDEMPOTENT_POCRIM = "bounded-idempotent-pocrim"
    INVOLUTIVE_IDEMPOTENT_POCRIM = "involutive-idempotent-pocrim"
    COOP = "coop"
    BOUNDED_COOP = "bounded-coop"
    INVOLUTIVE_COOP = "involutive-coop"
    WAJSBERG_HOOP = "wajsberg-hoop"

    @property
    def laws(self) -> FrozenSet[str]:
        return _CLASS_LAWS[self]

    @property
    def bounded(self) -> bool:
        return "ann" in self.laws

    @property
    def has_halving(self) -> bool:
        return "h" in self.laws


_BOUNDED = frozenset({"ann"})
_INVOLUTIVE = frozenset({"ann", "inv"})
_HOOP = POCRIM_LAWS | {"cwc"}
_IDEMPOTENT = POCRIM_LAWS | {"idem"}
_COOP = _HOOP | {"h"}

_CLASS_LAWS: Dict[AlgebraClass, FrozenSet[str]] = {
    AlgebraClass.POCRIM: POCRIM_LAWS,
    AlgebraClass.BOUNDED_POCRIM: POCRIM_LAWS | _BOUNDED,
    AlgebraClass.INVOLUTIVE_POCRIM: POCRIM_LAWS | _INVOLUTIVE,
    AlgebraClass.HOOP: _HOOP,
    AlgebraClass.BOUNDED_HOOP: _HOOP | _BOUNDED,
    AlgebraClass.INVOLUTIVE_HOOP: _HOOP | _INVOLUTIVE,
    AlgebraClass.IDEMPOTENT_POCRIM: _IDEMPOTENT,
    AlgebraClass.BOUNDED_IDEMPOTENT_POCRIM: _IDEMPOTENT | _BOUNDED,
    AlgebraClass.INVOLUTIVE_IDEMPOTENT_POCRIM: _IDEMPOTENT | _INVOLUTIVE,
    AlgebraClass.COOP: _COOP,
    AlgebraClass.BOUNDED_COOP: _COOP | _BOUNDED,
    AlgebraClass.INVOLUTIVE_COOP: _COOP | _INVOLUTIVE,
    AlgebraClass.WAJSBERG_HOOP: _HOOP | {"csd"},
}

# Accepted spellings on the command line
CLASS_ALIASES = {
    "idempotent-hoop": AlgebraClass.IDEMPOTENT_POCRIM,
    "bounded-idempotent-hoop": AlgebraClass.BOUNDED_IDEMPOTENT_POCRIM,
    "boolean": AlgebraClass.INVOLUTIVE_IDEMPOTENT_POCRIM,
}


def parse_algebra_class(text: str) -> AlgebraClass:
    key = text.strip().lower().replace("_", "-")
    if key in CLASS_ALIASES:
        return CLASS_ALIASES[key]
    try:
        return AlgebraClass(key)
    except ValueError:
        known = ", ".join(c.value for c in AlgebraClass)
        raise InvalidModelError(f"unknown algebra class {text!r} (known: {known})") from None


@dataclass(frozen=True)
class Exhaustive:
    label = "exhaustive"


@dataclass(frozen=True)
class Sampled:
    count: int = field(default_factory=lambda: settings.SAMPLE_COUNT)
    seed: int = field(default_factory=lambda: settings.SEED)
    max_exponent: int = field(default_factory=lambda: settings.SAMPLE_MAX_EXPONENT)
    label = "sampled"


CheckMode = Union[Exhaustive, Sampled]


def violates(law: Union[str, Law], model: AlgebraModel, witness: Tuple) -> bool:
    law = LAWS[law] if isinstance(law, str) else law
    return not law.holds(model, *witness)


def _sampled_tuples(model: AlgebraModel, law: Law, mode: Sampled) -> Iterable[Tuple]:
    # one stream per law so a verdict does not depend on which other laws ran
    rng = random.Random(f"{mode.seed}:{law.name}")
    for _ in range(mode.count):
        yield tuple(model.sample(rng, mode.max_exponent) for _ in range(law.arity))


def check_law(model: AlgebraModel, law: Law, mode: CheckMode) -> LawVerdict:
    if not law.applies_to(model):
        return LawVerdict(law=law.name, status=LawStatus.NOT_APPLICABLE)
    if isinstance(mode, Exhaustive):
        if not model.is_finite:
            raise InvalidModelError("exhaustive checking needs a finite algebra")
        tuples = model.tuples(law.arity)
    else:
        tuples = _sampled_tuples(model, law, mode)
    checked = 0
    for xs in tuples:
        checked += 1
        if not law.holds(model, *xs):
            return LawVerdict(law=law.name, status=LawStatus.FAIL, checked=checked, witness=xs)
    return LawVerdict(law=law.name, status=LawStatus.PASS, checked=checked)


@track_duration("check_laws", "algebra")
def check_laws(
    model: AlgebraModel,
    mode: Optional[CheckMode] = None,
    laws: Optional[Iterable[str]] = None,
) -> LawReport:
    """Check the named laws (all of them by default); finite models default to exhaustive"""
    if mode is None:
        mode = Exhaustive() if model.is_finite else Sampled()
    names = list(laws) if laws is not None else list(LAWS)
    unknown = [n for n in names if n not in LAWS]
    if unknown:
        raise InvalidModelError(f"unknown laws: {', '.join(unknown)}")
    verdicts = {name: check_law(model, LAWS[name], mode) for name in names}
    report = LawReport(model=model.name, mode=mode.label, verdicts=verdicts)
    failed = report.failed_laws
    metrics.record_law_check(mode.label, not failed)
    if failed:
        logger.debug(f"{model.name}: laws failing {failed}")
    return report


def in_class(model: AlgebraModel, algebra_class: AlgebraClass, mode: Optional[CheckMode] = None) -> bool:
    """Membership established by checking exactly the class's laws"""
    if algebra_class.bounded and not model.has_one:
        return False
    if algebra_class.has_halving and not model.has_half:
        return False
    return check_laws(model, mode, sorted(algebra_class.laws)).satisfies(algebra_class)
