"""Algebra models: finite operation tables and dense exact models.

Elements of a ``FiniteAlgebra`` are the indices ``0..size-1``; elements of a
``DenseModel`` are ``Dyadic`` or ``Fraction`` values. Every model answers the
same small interface (0, +, ->, optional 1 and halving), which is all the
evaluator, the law checker and the search code rely on.
"""
import math
import random
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import reduce
from itertools import product as cartesian
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from coopkit.exceptions import InvalidModelError, UnsupportedConnective
from coopkit.utils.formatters import format_scalar
from coopkit.utils.validators import parse_fraction, validate_table

from .scalars import Dyadic, ScalarKind, to_fraction


class AlgebraModel(ABC):
    """Signature (0, +, ->) with optional annihilator 1 and halving"""

    name: str = "model"
    is_finite: bool = False

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def plus(self, x, y) -> Any: ...

    @abstractmethod
    def imp(self, x, y) -> Any: ...

    @property
    def has_one(self) -> bool:
        return False

    @property
    def one(self) -> Any:
        raise UnsupportedConnective(f"{self.name} has no constant 1")

    @property
    def has_half(self) -> bool:
        return False

    def half(self, x) -> Any:
        raise UnsupportedConnective(f"{self.name} has no halving")

    def geq(self, x, y) -> bool:
        """x >= y in the pocrim order, i.e. x -> y = 0"""
        return self.imp(x, y) == self.zero

    def leq(self, x, y) -> bool:
        return self.geq(y, x)

    def negate(self, x) -> Any:
        return self.imp(x, self.one)

    def sum(self, values: Iterable) -> Any:
        return reduce(self.plus, values, self.zero)

    def elements(self) -> List[Any]:
        raise InvalidModelError(f"{self.name} has no finite carrier")

    @abstractmethod
    def sample(self, rng: random.Random, max_exponent: int = 8) -> Any: ...

    @abstractmethod
    def coerce(self, value) -> Any:
        """Read an element from user input (number, label or index)"""

    def contains(self, x) -> bool:
        return True

    def format_element(self, x) -> str:
        return format_scalar(x)

    def tuples(self, arity: int) -> Iterable[Tuple]:
        return cartesian(self.elements(), repeat=arity)

    def __str__(self):
        return self.name


class DenseModel(AlgebraModel):
    """Nonnegative dyadics or rationals, unbounded or capped at ``cap``"""

    def __init__(self, kind: ScalarKind = ScalarKind.DYADIC, cap=None):
        self.kind = ScalarKind(kind)
        self.cap = None if cap is None else self.kind.make(cap)
        if self.cap is not None and self.cap <= 0:
            raise InvalidModelError(f"cap must be positive, got {format_scalar(self.cap)}")
        self._zero = self.kind.make(0)
        shape = "unbounded" if self.cap is None else f"capped:{format_scalar(self.cap)}"
        self.name = f"{self.kind.value}-{shape}"

    @classmethod
    def parse(cls, text: str) -> "DenseModel":
        """Read ``dyadic-capped:1``, ``rational-unbounded`` and the like"""
        head, _, arg = text.strip().lower().partition(":")
        kind_text, _, shape = head.partition("-")
        try:
            kind = ScalarKind(kind_text)
        except ValueError:
            raise InvalidModelError(f"unknown scalar kind {kind_text!r}") from None
        if shape == "unbounded" and not arg:
            return cls(kind)
        if shape == "capped":
            cap = parse_fraction(arg or "1")
            if cap is None:
                raise InvalidModelError(f"bad cap {arg!r}")
            return cls(kind, cap)
        raise InvalidModelError(f"unknown dense model {text!r}")

    @property
    def is_capped(self) -> bool:
        return self.cap is not None

    @property
    def zero(self):
        return self._zero

    def plus(self, x, y):
        total = x + y
        if self.cap is not None and total > self.cap:
            return self.cap
        return total

    def imp(self, x, y):
        return y - x if y > x else self._zero

    @property
    def has_one(self) -> bool:
        return self.cap is not None

    @property
    def one(self):
        if self.cap is None:
            raise UnsupportedConnective(f"{self.name} has no constant 1")
        return self.cap

    @property
    def has_half(self) -> bool:
        return True

    def half(self, x):
        return self.kind.half(x)

    def geq(self, x, y) -> bool:
        return x >= y

    def contains(self, x) -> bool:
        if self.kind is ScalarKind.DYADIC and not isinstance(x, Dyadic):
            return False
        return x >= 0 and (self.cap is None or x <= self.cap)

    def coerce(self, value):
        if isinstance(value, str):
            parsed = parse_fraction(value)
            if parsed is None:
                raise InvalidModelError(f"cannot read {value!r} as a number")
            value = parsed
        try:
            x = self.kind.make(value)
        except (TypeError, ValueError) as e:
            raise InvalidModelError(str(e)) from None
        if not self.contains(x):
            raise InvalidModelError(f"{format_scalar(x)} is outside the carrier of {self.name}")
        return x

    def upper_bound(self):
        """Sampling range: the cap, or 4 for unbounded models"""
        return self.cap if self.cap is not None else self.kind.make(4)

    def sample(self, rng: random.Random, max_exponent: int = 8):
        top = self.upper_bound()
        roll = rng.randrange(16)
        if roll == 0:
            return self._zero
        if roll == 1 and self.cap is not None:
            return self.cap
        if self.kind is ScalarKind.DYADIC:
            exponent = rng.randint(0, max_exponent)
            limit = math.floor(to_fraction(top) * (1 << exponent))
            return Dyadic(rng.randint(0, limit), exponent)
        denominator = rng.randint(1, 2 * max_exponent)
        limit = math.floor(top * denominator)
        return Fraction(rng.randint(0, limit), denominator)

    def grid(self, exponent: int) -> List:
        """All points i/2**exponent of the carrier (up to 4 when unbounded)"""
        top = to_fraction(self.upper_bound())
        count = math.floor(top * (1 << exponent))
        return [self.kind.make(Fraction(i, 1 << exponent)) for i in range(count + 1)]

    def __eq__(self, other):
        return isinstance(other, DenseModel) and (self.kind, self.cap) == (other.kind, other.cap)

    def __hash__(self):
        return hash((self.kind, self.cap))

    def __repr__(self):
        return f"DenseModel({self.name!r})"


def _freeze(table) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in table)


class FiniteAlgebra(AlgebraModel):
    """Operation tables over the carrier 0..size-1"""

    is_finite = True

    def __init__(
        self,
        size: int,
        plus: Sequence[Sequence[int]],
        imp: Sequence[Sequence[int]],
        zero: int = 0,
        one: Optional[int] = None,
        half: Optional[Sequence[int]] = None,
        name: str = "finite",
        labels: Optional[Sequence[str]] = None,
    ):
        if size < 1:
            raise InvalidModelError("carrier must be nonempty")
        plus, imp = [list(r) for r in plus], [list(r) for r in imp]
        if not validate_table(plus, size):
            raise InvalidModelError(f"plus table is not a total {size}x{size} table")
        if not validate_table(imp, size):
            raise InvalidModelError(f"imp table is not a total {size}x{size} table")
        for index, label in (("zero", zero), ("one", one)):
            if label is not None and not (isinstance(label, int) and 0 <= label < size):
                raise InvalidModelError(f"{index} index {label!r} outside carrier")
        if half is not None and (len(half) != size or not all(isinstance(v, int) and 0 <= v < size for v in half)):
            raise InvalidModelError("half table must map the carrier into itself")
        self.size = size
        self.plus_table = _freeze(plus)
        self.imp_table = _freeze(imp)
        self._zero = zero
        self._one = one
        self.half_table = None if half is None else tuple(half)
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(size))
        if len(self.labels) != size or len(set(self.labels)) != size:
            raise InvalidModelError("labels must name each element exactly once")

    @classmethod
    def from_operations(cls, size: int, plus, imp, **kwargs) -> "FiniteAlgebra":
        carrier = range(size)
        return cls(
            size,
            [[plus(x, y) for y in carrier] for x in carrier],
            [[imp(x, y) for y in carrier] for x in carrier],
            **kwargs,
        )

    @property
    def zero(self) -> int:
        return self._zero

    def plus(self, x: int, y: int) -> int:
        return self.plus_table[x][y]

    def imp(self, x: int, y: int) -> int:
        return self.imp_table[x][y]

    @property
    def has_one(self) -> bool:
        return self._one is not None

    @property
    def one(self) -> int:
        if self._one is None:
            raise UnsupportedConnective(f"{self.name} has no constant 1")
        return self._one

    @property
    def has_half(self) -> bool:
        return self.half_table is not None

    def half(self, x: int) -> int:
        if self.half_table is None:
            raise UnsupportedConnective(f"{self.name} has no halving")
        return self.half_table[x]

    def elements(self) -> List[int]:
        return list(range(self.size))

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    def sample(self, rng: random.Random, max_exponent: int = 8) -> int:
        return rng.randrange(self.size)

    def coerce(self, value) -> int:
        if isinstance(value, str):
            if value in self.labels:
                return self.labels.index(value)
            if value.isdigit():
                value = int(value)
        if isinstance(value, int) and not isinstance(value, bool) and self.contains(value):
            return value
        raise InvalidModelError(f"{value!r} is not an element of {self.name}")

    def format_element(self, x: int) -> str:
        return self.labels[x]

    def annihilator(self) -> Optional[int]:
        """The element u with x + u = u for all x, if any"""
        for u in self.elements():
            if all(self.plus(x, u) == u for x in self.elements()):
                return u
        return None

    def with_one(self, one: Optional[int]) -> "FiniteAlgebra":
        return FiniteAlgebra(
            self.size, self.plus_table, self.imp_table, self._zero, one, self.half_table, self.name, self.labels
        )

    def with_half(self, half: Optional[Sequence[int]]) -> "FiniteAlgebra":
        return FiniteAlgebra(
            self.size, self.plus_table, self.imp_table, self._zero, self._one, half, self.name, self.labels
        )

    def renamed(self, name: str, labels: Optional[Sequence[str]] = None) -> "FiniteAlgebra":
        return FiniteAlgebra(
            self.size, self.plus_table, self.imp_table, self._zero, self._one, self.half_table, name,
            labels if labels is not None else self.labels,
        )

    def permuted(self, perm: Sequence[int]) -> "FiniteAlgebra":
        """Relabel: element x of self becomes perm[x]"""
        inverse = [0] * self.size
        for old, new in enumerate(perm):
            inverse[new] = old
        plus = [[perm[self.plus(inverse[x], inverse[y])] for y in range(self.size)] for x in range(self.size)]
        imp = [[perm[self.imp(inverse[x], inverse[y])] for y in range(self.size)] for x in range(self.size)]
        half = None if self.half_table is None else [perm[self.half(inverse[x])] for x in range(self.size)]
        labels = [self.labels[inverse[x]] for x in range(self.size)]
        return FiniteAlgebra(
            self.size, plus, imp, perm[self._zero], None if self._one is None else perm[self._one], half,
            self.name, labels,
        )

    def table_key(self) -> tuple:
        return (
            self.plus_table,
            self.imp_table,
            self._zero,
            self._one,
            self.half_table,
        )

    def is_linear(self) -> bool:
        return all(self.geq(x, y) or self.geq(y, x) for x in self.elements() for y in self.elements())

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self.size == other.size and self.table_key() == other.table_key()

    def __hash__(self):
        return hash((self.size, self.table_key()))

    def __repr__(self):
        return f"FiniteAlgebra({self.name!r}, size={self.size})"


def check_assignment(model: AlgebraModel, assignment: dict) -> dict:
    """Coerce every value of a user assignment into the model's carrier"""
    return {name: model.coerce(value) for name, value in assignment.items()}
