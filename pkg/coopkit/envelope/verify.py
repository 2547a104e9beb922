"""Sampled verification of both envelope constructions.

The hat checks compare Ĉ against the base through hat_embed and against the
unbounded dense model through the 2^m a reading. The difference group
checks are the group laws, 2-divisibility and the order.
"""
import random
from typing import Callable, Iterable, Optional, Tuple

from loguru import logger

from coopkit.algebra import DenseModel
from coopkit.config import settings
from coopkit.models.reports import PropertyReport
from coopkit.utils.metrics import track_duration

from .diff import DiffGroup, Sign
from .hat import HatElement, HatEnvelope
from .ordering import Ordering, compare_in

MAX_SAMPLE_EXPONENT = 3


def _check(report: PropertyReport, name: str, points: Iterable[Tuple], holds: Callable[..., bool]):
    checked = 0
    for xs in points:
        checked += 1
        if not holds(*xs):
            report.record(name, False, checked, witness=tuple(str(x) for x in xs))
            logger.debug(f"{report.title}: {name} fails at {xs}")
            return
    report.record(name, True, checked)


def _base_pairs(base: DenseModel, rng: random.Random, samples: int):
    for _ in range(samples):
        yield base.sample(rng, settings.SAMPLE_MAX_EXPONENT), base.sample(rng, settings.SAMPLE_MAX_EXPONENT)


def _hat_pairs(envelope: HatEnvelope, rng: random.Random, samples: int):
    for _ in range(samples):
        yield tuple(
            HatElement(rng.randint(0, MAX_SAMPLE_EXPONENT), envelope.base.sample(rng, settings.SAMPLE_MAX_EXPONENT), envelope.base.name)
            for _ in range(2)
        )


def _verify_hat(report: PropertyReport, base: DenseModel, samples: int, seed: int):
    envelope = HatEnvelope(base)
    oracle = DenseModel(base.kind)
    embed = envelope.hat_embed

    def stream(name: str):
        return _base_pairs(base, random.Random(f"{seed}:{name}"), samples)

    def hat_stream(name: str):
        return _hat_pairs(envelope, random.Random(f"{seed}:{name}"), samples)

    _check(report, "embedding-add", stream("embed-add"),
           lambda a, b: envelope.equal(envelope.capped_add(embed(a), embed(b)), embed(base.plus(a, b))))
    _check(report, "embedding-imp", stream("embed-imp"),
           lambda a, b: envelope.equal(envelope.imp(embed(a), embed(b)), embed(base.imp(a, b))))
    _check(report, "embedding-half", stream("embed-half"),
           lambda a, _: envelope.equal(envelope.half(embed(a)), embed(base.half(a))))
    _check(report, "embedding-order", stream("embed-order"),
           lambda a, b: envelope.compare(embed(a), embed(b)) is compare_in(base, a, b))
    _check(report, "embedding-sum-below-one", stream("embed-sum"),
           lambda a, b: base.plus(a, b) == base.one or envelope.equal(envelope.add(embed(a), embed(b)), embed(base.plus(a, b))))
    _check(report, "embedding-image", hat_stream("image"),
           lambda x, _: not envelope.geq(envelope.one, x) or envelope.equal(embed(envelope.unembed(x)), x))

    denote = envelope.denote
    _check(report, "oracle-add", hat_stream("oracle-add"),
           lambda x, y: denote(envelope.add(x, y)) == oracle.plus(denote(x), denote(y)))
    _check(report, "oracle-imp", hat_stream("oracle-imp"),
           lambda x, y: denote(envelope.imp(x, y)) == oracle.imp(denote(x), denote(y)))
    _check(report, "oracle-half", hat_stream("oracle-half"),
           lambda x, _: denote(envelope.half(x)) == oracle.half(denote(x)))
    _check(report, "oracle-compare", hat_stream("oracle-compare"),
           lambda x, y: envelope.compare(x, y) is compare_in(oracle, denote(x), denote(y)))


def _verify_diff(report: PropertyReport, base: DenseModel, samples: int, seed: int):
    group = DiffGroup(base)

    def stream(name: str, arity: int):
        rng = random.Random(f"{seed}:{name}")
        for _ in range(samples):
            yield tuple(
                group.element(rng.choice(list(Sign)), base.sample(rng, settings.SAMPLE_MAX_EXPONENT)) for _ in range(arity)
            )

    add, eq = group.add, (lambda d, e: group.compare(d, e) is Ordering.EQUAL)
    _check(report, "group-associativity", stream("assoc", 3),
           lambda d, e, f: eq(add(add(d, e), f), add(d, add(e, f))))
    _check(report, "group-commutativity", stream("comm", 2), lambda d, e: eq(add(d, e), add(e, d)))
    _check(report, "group-identity", stream("identity", 1), lambda d: eq(add(d, group.zero), d))
    _check(report, "group-inverse", stream("inverse", 1), lambda d: eq(add(d, group.neg(d)), group.zero))
    _check(report, "two-divisible", stream("half", 1), lambda d: eq(add(group.half(d), group.half(d)), d))
    _check(report, "order-total", stream("total", 2),
           lambda d, e: group.compare(d, e) is not Ordering.INCOMPARABLE)
    _check(report, "order-translation-invariant", stream("translate", 3),
           lambda d, e, f: group.compare(add(d, f), add(e, f)) is group.compare(d, e))
    pairs = _base_pairs(base, random.Random(f"{seed}:cone"), samples)
    _check(report, "nonnegative-cone", pairs,
           lambda a, b: group.is_nonnegative(group.from_pair(a, b)) == base.geq(a, b))
    pairs = _base_pairs(base, random.Random(f"{seed}:scalar"), samples)
    _check(report, "difference-value", pairs,
           lambda a, b: group.to_scalar(group.from_pair(a, b)) == a - b)


@track_duration("verify_envelope", "envelope")
def verify_envelope(
    base: Optional[DenseModel] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> PropertyReport:
    """Sampled checks of Ĉ over a capped base and of the group of differences of its unbounded counterpart"""
    base = base or DenseModel(cap=1)
    samples = settings.SAMPLE_COUNT if samples is None else samples
    seed = settings.SEED if seed is None else seed
    report = PropertyReport(title=f"envelopes over {base.name}")
    _verify_hat(report, base, samples, seed)
    _verify_diff(report, DenseModel(base.kind), samples, seed)
    logger.info(f"{report.title}: {'all hold' if report.ok else 'failing ' + ', '.join(report.failed)}")
    return report
