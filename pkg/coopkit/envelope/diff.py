"""The group of differences of a linearly ordered cancellative coop.

Each element is a sign with a base magnitude: (+, c) for c and (-, c) for
its negative. b -> a is the gap between a and b when a >= b, which is all
the subtraction the construction needs.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Union

from coopkit.algebra import DenseModel
from coopkit.exceptions import BaseMismatch, InvalidModelError
from coopkit.utils.formatters import format_scalar

from .ordering import Ordering


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"

    def flipped(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class DiffOp(str, Enum):
    ADD = "add"
    NEG = "neg"
    COMPARE = "compare"
    FROM_PAIR = "from-pair"


@dataclass(frozen=True)
class DiffElement:
    sign: Sign
    magnitude: Any
    over: str = ""

    def __str__(self) -> str:
        return f"({self.sign.value}, {format_scalar(self.magnitude)})"


class DiffGroup:
    def __init__(self, base: DenseModel):
        if not isinstance(base, DenseModel) or base.is_capped:
            raise InvalidModelError("the group of differences needs an unbounded dense base model")
        self.base = base
        self.name = f"diff({base.name})"

    def element(self, sign: Union[Sign, str], magnitude) -> DiffElement:
        sign = Sign(sign)
        magnitude = self.base.coerce(magnitude)
        if magnitude == self.base.zero:
            sign = Sign.PLUS
        return DiffElement(sign, magnitude, self.base.name)

    @property
    def zero(self) -> DiffElement:
        return self.element(Sign.PLUS, self.base.zero)

    def _own(self, *ds: DiffElement):
        for d in ds:
            if d.over != self.base.name:
                raise BaseMismatch(f"element over {d.over or 'no base'} used with {self.name}")

    def embed(self, value) -> DiffElement:
        return self.element(Sign.PLUS, value)

    def from_pair(self, a, b) -> DiffElement:
        """a - b"""
        a, b = self.base.coerce(a), self.base.coerce(b)
        if self.base.geq(a, b):
            return self.element(Sign.PLUS, self.base.imp(b, a))
        return self.element(Sign.MINUS, self.base.imp(a, b))

    def neg(self, d: DiffElement) -> DiffElement:
        self._own(d)
        return self.element(d.sign.flipped(), d.magnitude)

    def add(self, d: DiffElement, e: DiffElement) -> DiffElement:
        self._own(d, e)
        if d.sign is e.sign:
            return self.element(d.sign, self.base.plus(d.magnitude, e.magnitude))
        positive, negative = (d, e) if d.sign is Sign.PLUS else (e, d)
        return self.from_pair(positive.magnitude, negative.magnitude)

    def sub(self, d: DiffElement, e: DiffElement) -> DiffElement:
        return self.add(d, self.neg(e))

    def compare(self, d: DiffElement, e: DiffElement) -> Ordering:
        gap = self.sub(d, e)
        if gap.magnitude == self.base.zero:
            return Ordering.EQUAL
        return Ordering.GREATER if gap.sign is Sign.PLUS else Ordering.LESS

    def half(self, d: DiffElement) -> DiffElement:
        """h with h + h = d"""
        self._own(d)
        return self.element(d.sign, self.base.half(d.magnitude))

    def is_nonnegative(self, d: DiffElement) -> bool:
        return d.sign is Sign.PLUS

    def to_scalar(self, d: DiffElement):
        return d.magnitude if d.sign is Sign.PLUS else -d.magnitude

    def diff_op(self, op: Union[DiffOp, str], *args):
        op = DiffOp(op)
        arity = 1 if op is DiffOp.NEG else 2
        if len(args) != arity:
            raise InvalidModelError(f"{op.value} takes {arity} operand(s)")
        handler = {DiffOp.ADD: self.add, DiffOp.NEG: self.neg, DiffOp.COMPARE: self.compare, DiffOp.FROM_PAIR: self.from_pair}[op]
        return handler(*args)


def diff_op(op: Union[DiffOp, str], *args, base: Optional[DenseModel] = None):
    """One operation of the group of differences over base (unbounded dyadics when omitted)"""
    return DiffGroup(base or DenseModel()).diff_op(op, *args)
