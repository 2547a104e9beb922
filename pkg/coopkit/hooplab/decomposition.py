"""Monolith and the support/fixed decomposition of subdirectly irreducible hoops.

With M the monolithic ideal, the fixed part is F = {f | M ⊆ IS(f)} and the
support is S = IS(F). The algebra is then the ordinal sum S⌢F; the ten
properties below are checked over the whole finite carrier.
"""
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterator, Optional, Tuple

from loguru import logger

from coopkit.algebra import AlgebraClass, Exhaustive, FiniteAlgebra, check_laws
from coopkit.exceptions import NotAHoop
from coopkit.models.reports import PropertyReport
from coopkit.utils.metrics import track_duration

from .ideals import Ideal, implicative_stabilizer, is_ideal, set_stabilizer
from .structure import is_closed, monolith

Witness = Optional[Tuple]


@dataclass(frozen=True)
class SIDecomposition:
    monolith: Ideal
    fixed: FrozenSet[int]
    support: FrozenSet[int]

    def describe(self, h: FiniteAlgebra) -> dict:
        def names(xs):
            return [h.format_element(x) for x in sorted(xs)]

        return {"monolith": names(self.monolith.elements), "fixed": names(self.fixed), "support": names(self.support)}


@track_duration("monolith_and_decomposition", "hooplab")
def monolith_and_decomposition(h: FiniteAlgebra) -> Optional[SIDecomposition]:
    """None unless h is subdirectly irreducible; raises NotAHoop off the hoop laws"""
    report = check_laws(h, Exhaustive(), sorted(AlgebraClass.HOOP.laws))
    if not report.satisfies(AlgebraClass.HOOP):
        raise NotAHoop(report.failed_laws)
    m = monolith(h)
    if m is None:
        logger.info(f"{h.name} is not subdirectly irreducible")
        return None
    fixed = frozenset(f for f in h.elements() if m.elements <= implicative_stabilizer(h, f))
    support = set_stabilizer(h, fixed)
    decomposition = SIDecomposition(m, fixed, support)
    logger.info(f"{h.name}: monolith {m}, support {len(support)}, fixed {len(fixed)}")
    return decomposition


def _first(pairs: Iterator[Tuple], holds: Callable[..., bool]) -> Tuple[int, Witness]:
    checked = 0
    for xs in pairs:
        checked += 1
        if not holds(*xs):
            return checked, xs
    return checked, None


def verify_decomposition(h: FiniteAlgebra, d: SIDecomposition) -> PropertyReport:
    """Verdicts for properties (i) to (x), plus the Wajsberg identity on the support"""
    z = h.zero
    carrier = h.elements()
    m, f_set, s_set = sorted(d.monolith.elements), sorted(d.fixed), sorted(d.support)
    nonzero_m = [a for a in m if a != z]
    nonzero_f = [f for f in f_set if f != z]
    report = PropertyReport(title=f"decomposition of {h.name}")

    def record(name, checked_witness, note=None):
        checked, witness = checked_witness
        report.record(name, witness is None, checked, witness=witness, note=note)

    record("i", _first(((x,) for x in carrier if x != z), lambda x: any(h.geq(x, a) for a in nonzero_m)))
    record("ii", _first(((f, a) for f in nonzero_f for a in m), h.geq))
    record("iii", _first(((a, f) for a in m for f in nonzero_f), lambda a, f: h.plus(a, f) == f))
    record("iv", _first(((f, x) for f in nonzero_f for x in carrier), lambda f, x: not h.geq(x, f) or x in d.fixed))
    record("v", _first(((x, f) for x in carrier for f in f_set), lambda x, f: h.imp(x, f) in d.fixed))
    record(
        "vi",
        _first(((f, x) for f in nonzero_f for x in carrier if x not in d.fixed), lambda f, x: h.geq(f, x) and f != x),
    )
    note = None if h.has_half else "halving clause skipped: no halving"
    record("vii", (1, None if is_closed(h, d.fixed) else (sorted(d.fixed),)), note)
    linear = all(h.geq(s, t) or h.geq(t, s) for s in s_set for t in s_set)
    viii = is_ideal(h, d.support) and linear and d.support & d.fixed == {z}
    record("viii", (1, None if viii else (s_set,)))
    record(
        "ix",
        _first(
            ((s, t) for s in s_set for t in s_set if t != z),
            lambda s, t: h.plus(s, t) != s or all(h.geq(s, u) for u in s_set),
        ),
    )
    ordinal = d.support | d.fixed == frozenset(carrier) and d.support & d.fixed == {z}
    if ordinal:
        record(
            "x",
            _first(
                ((s, f) for s in s_set for f in nonzero_f),
                lambda s, f: h.plus(s, f) == f and h.imp(s, f) == f and h.imp(f, s) == z,
            ),
        )
    else:
        record("x", (1, (s_set, f_set)))
    record(
        "wajsberg-support",
        _first(((s, t) for s in s_set for t in s_set), lambda s, t: h.imp(h.imp(t, s), s) == h.imp(h.imp(s, t), t)),
    )
    if not report.ok:
        logger.warning(f"{report.title}: failing {', '.join(report.failed)}")
    return report
