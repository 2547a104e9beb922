"""The enveloping coop of a bounded semi-cancellative coop.

An element (m, a) stands for 2^m times the embedded base element a. Two
elements are compared by halving the one with the smaller exponent until
the exponents agree; the base then decides. Addition lifts both operands
two exponents past the common one, so the quarter-sized bases sum strictly
below the annihilator and no information is lost.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Tuple, Union

from loguru import logger

from coopkit.algebra import DenseModel, is_semi_cancellative
from coopkit.exceptions import BaseMismatch, InvalidModelError
from coopkit.utils.formatters import format_scalar

from .ordering import Ordering, compare_in

ADD_BUMP = 2


class HatOp(str, Enum):
    ADD = "add"
    IMP = "imp"
    HALF = "half"
    COMPARE = "compare"


@dataclass(frozen=True)
class HatElement:
    exponent: int
    base: Any
    over: str = ""

    def __str__(self) -> str:
        return f"({self.exponent}, {format_scalar(self.base)})"


class HatEnvelope:
    """Ĉ over a capped dense base model"""

    def __init__(self, base: DenseModel, check: bool = True):
        if not isinstance(base, DenseModel) or not base.is_capped:
            raise InvalidModelError("the envelope needs a capped dense base model")
        if check and not is_semi_cancellative(base):
            raise InvalidModelError(f"{base.name} failed the semi-cancellative spot-check")
        self.base = base
        self.name = f"hat({base.name})"

    def element(self, exponent: int, value) -> HatElement:
        if exponent < 0:
            raise InvalidModelError(f"negative exponent {exponent}")
        return HatElement(exponent, self.base.coerce(value), self.base.name)

    def hat_embed(self, value) -> HatElement:
        return self.element(0, value)

    @property
    def zero(self) -> HatElement:
        return HatElement(0, self.base.zero, self.base.name)

    @property
    def one(self) -> HatElement:
        """1̂, the image of the base annihilator"""
        return HatElement(0, self.base.one, self.base.name)

    def _own(self, *xs: HatElement):
        for x in xs:
            if x.over != self.base.name:
                raise BaseMismatch(f"element over {x.over or 'no base'} used with {self.name}")

    def lift(self, x: HatElement, exponent: int) -> HatElement:
        """Same element written with a larger exponent"""
        if exponent < x.exponent:
            raise InvalidModelError(f"cannot lower exponent {x.exponent} to {exponent}")
        value = x.base
        for _ in range(exponent - x.exponent):
            value = self.base.half(value)
        return HatElement(exponent, value, x.over)

    def align(self, x: HatElement, y: HatElement) -> Tuple[HatElement, HatElement]:
        top = max(x.exponent, y.exponent)
        return self.lift(x, top), self.lift(y, top)

    def add(self, x: HatElement, y: HatElement) -> HatElement:
        self._own(x, y)
        top = max(x.exponent, y.exponent) + ADD_BUMP
        a, b = self.lift(x, top), self.lift(y, top)
        return HatElement(top, self.base.plus(a.base, b.base), self.base.name)

    def imp(self, x: HatElement, y: HatElement) -> HatElement:
        self._own(x, y)
        a, b = self.align(x, y)
        return HatElement(a.exponent, self.base.imp(a.base, b.base), self.base.name)

    def half(self, x: HatElement) -> HatElement:
        self._own(x)
        return HatElement(x.exponent, self.base.half(x.base), self.base.name)

    def compare(self, x: HatElement, y: HatElement) -> Ordering:
        self._own(x, y)
        a, b = self.align(x, y)
        return compare_in(self.base, a.base, b.base)

    def equal(self, x: HatElement, y: HatElement) -> bool:
        return self.compare(x, y) is Ordering.EQUAL

    def geq(self, x: HatElement, y: HatElement) -> bool:
        return self.compare(x, y) in (Ordering.GREATER, Ordering.EQUAL)

    def cap(self, x: HatElement) -> HatElement:
        """Meet with 1̂ (the base is linear, so this is min)"""
        return self.one if self.geq(x, self.one) else x

    def capped_add(self, x: HatElement, y: HatElement) -> HatElement:
        """Addition of Ĉ restricted to the interval [0, 1̂]"""
        return self.cap(self.add(x, y))

    def normalize(self, x: HatElement) -> HatElement:
        """Smallest exponent representing the same element"""
        while x.exponent > 0:
            doubled = self.base.plus(x.base, x.base)
            if doubled == self.base.one or self.base.half(doubled) != x.base:
                break
            x = HatElement(x.exponent - 1, doubled, x.over)
        return x

    def denote(self, x: HatElement):
        """2^m a as an exact scalar of the base's kind"""
        return self.base.kind.make(x.base) * (1 << x.exponent)

    def unembed(self, x: HatElement):
        """The base element a with hat_embed(a) = x; x must lie below 1̂"""
        if not self.geq(self.one, x):
            raise InvalidModelError(f"{x} lies above 1̂ and has no preimage")
        value = x.base
        for _ in range(x.exponent):
            value = self.base.plus(value, value)
        return value

    def hat_op(self, op: Union[HatOp, str], x: HatElement, y: Optional[HatElement] = None):
        op = HatOp(op)
        if op is HatOp.HALF:
            return self.half(x)
        if y is None:
            raise InvalidModelError(f"{op.value} needs two operands")
        return {HatOp.ADD: self.add, HatOp.IMP: self.imp, HatOp.COMPARE: self.compare}[op](x, y)


def hat_embed(base: DenseModel, value) -> HatElement:
    return HatEnvelope(base, check=False).hat_embed(value)


def hat_op(op: Union[HatOp, str], x: HatElement, y: Optional[HatElement] = None, base: Optional[DenseModel] = None):
    """One operation of the envelope over base (dyadic capped at 1 when omitted)"""
    envelope = HatEnvelope(base or DenseModel(cap=1), check=False)
    result = envelope.hat_op(op, x, y)
    logger.trace(f"{op} {x} {y} = {result}")
    return result
