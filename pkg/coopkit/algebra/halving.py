"""Sampled checks of the halving theory of coops.

Every check draws seeded points from the model and records the first
violation it meets. On a coop all of them hold; a failure names the
property and keeps the offending points as the witness.
"""
import random
from typing import Any, Callable, Iterable, Optional, Tuple

from loguru import logger

from coopkit.config import settings
from coopkit.exceptions import UnsupportedConnective
from coopkit.models.reports import PropertyReport

from .constructions import dyadic_scale
from .models import AlgebraModel
from .scalars import Dyadic

DESCENT_STEPS = 8


def _points(model: AlgebraModel, rng: random.Random, count: int, arity: int) -> Iterable[Tuple]:
    if model.is_finite:
        yield from model.tuples(arity)
        return
    for _ in range(count):
        yield tuple(model.sample(rng, settings.SAMPLE_MAX_EXPONENT) for _ in range(arity))


def _run(report: PropertyReport, name: str, points: Iterable[Tuple], holds: Callable[..., bool], note: Optional[str] = None):
    checked = 0
    for xs in points:
        checked += 1
        if not holds(*xs):
            report.record(name, False, checked, witness=xs, note=note)
            logger.debug(f"{name} fails at {xs}")
            return
    report.record(name, True, checked, note=note)


def _hoop_bounds(m: AlgebraModel):
    def holds(a, b) -> bool:
        c = m.half(b)
        if c != m.imp(c, b):
            return False
        t = m.imp(a, b)
        if a == t and a != c:
            return False
        if m.geq(a, t) and not m.geq(a, c):
            return False
        if m.leq(a, t) and not m.leq(a, c):
            return False
        return True

    return holds


def _coop_bounds(m: AlgebraModel, rng: random.Random):
    def holds(a, b) -> bool:
        # a coin flip puts a exactly at b/2 so the equality clause is exercised
        if rng.randrange(4) == 0:
            a = m.half(b)
        h, t = m.half(b), m.imp(a, b)
        return (a == h) == (a == t) and m.geq(a, h) == m.geq(a, t) and m.leq(a, h) == m.leq(a, t)

    return holds


def _miscellany(m: AlgebraModel):
    def holds(a, b) -> bool:
        ha, hb = m.half(a), m.half(b)
        if ha == hb and a != b:
            return False
        if m.geq(a, b) and not m.geq(ha, hb):
            return False
        if (ha == a) != (a == m.zero):
            return False
        if not m.geq(m.plus(ha, hb), m.half(m.plus(a, b))):
            return False
        return m.imp(ha, hb) == m.half(m.imp(a, b))

    return holds


def _strict_descent(m: AlgebraModel):
    def holds(a) -> bool:
        if a == m.zero:
            return True
        current = a
        for _ in range(DESCENT_STEPS):
            nxt = m.half(current)
            if nxt == current or not m.geq(current, nxt):
                return False
            current = nxt
        return True

    return holds


def _half_of_sum(m: AlgebraModel):
    def holds(x, y) -> bool:
        total = m.plus(x, y)
        if m.half(total) == m.plus(m.half(x), m.half(y)):
            return True
        return m.has_one and total == m.one

    return holds


def _bosbach(m: AlgebraModel):
    return lambda x, y: m.imp(m.imp(x, y), m.imp(y, x)) == m.imp(y, x)


def _natural_order(m: AlgebraModel):
    return lambda x, y: not m.geq(x, y) or m.plus(y, m.imp(y, x)) == x


def _dyadic_fractions(m: AlgebraModel, rng: random.Random):
    def holds(x) -> bool:
        n = rng.randint(0, 4)
        j = rng.randint(0, 1 << n)
        i = rng.randint(0, j)
        left = m.imp(dyadic_scale(Dyadic(i, n), x, m), dyadic_scale(Dyadic(j, n), x, m))
        return left == dyadic_scale(Dyadic(j - i, n), x, m)

    return holds


def check_halving_properties(model: AlgebraModel, count: Optional[int] = None, seed: Optional[int] = None) -> PropertyReport:
    """Run the halving theory checks against a model with halving"""
    if not model.has_half:
        raise UnsupportedConnective(f"{model.name} has no halving")
    count = settings.SAMPLE_COUNT if count is None else count
    seed = settings.SEED if seed is None else seed
    report = PropertyReport(title=f"halving properties of {model.name}")

    def stream(name: str, arity: int):
        return _points(model, random.Random(f"{seed}:{name}"), count, arity)

    _run(report, "hoop-halving-bounds", stream("hoop-bounds", 2), _hoop_bounds(model))
    _run(report, "coop-halving-bounds", stream("coop-bounds", 2), _coop_bounds(model, random.Random(f"{seed}:coin")))
    _run(report, "halving-miscellany", stream("misc", 2), _miscellany(model))
    _run(report, "strict-descent", stream("descent", 1), _strict_descent(model))
    _run(
        report, "half-of-sum", stream("half-sum", 2), _half_of_sum(model),
        note="holds on semi-cancellative coops",
    )
    _run(report, "bosbach", stream("bosbach", 2), _bosbach(model))
    _run(report, "natural-order", stream("natural", 2), _natural_order(model))
    _run(report, "dyadic-fractions", stream("fractions", 1), _dyadic_fractions(model, random.Random(f"{seed}:scale")))
    logger.info(f"{report.title}: {'all hold' if report.ok else 'failing ' + ', '.join(report.failed)}")
    return report


def is_semi_cancellative(model: AlgebraModel, samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """Spot-check: x + y = x + z with y != z only at the annihilator"""
    samples = settings.SAMPLE_COUNT if samples is None else samples
    rng = random.Random(f"{settings.SEED if seed is None else seed}:semi-cancellative")
    annihilator: Any = model.one if model.has_one else None
    for x, y, z in _points(model, rng, samples, 3):
        total = model.plus(x, y)
        if total == model.plus(x, z) and y != z and total != annihilator:
            return False
        # linear form of the same condition
        if model.plus(x, y) == x and y != model.zero and x != annihilator:
            return False
    return True
