"""Standard models and model constructions."""
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import FrozenSet, List, Optional, Sequence, Tuple

from coopkit.config import settings
from coopkit.exceptions import InvalidModelError
from coopkit.utils.formatters import format_scalar

from .models import AlgebraModel, DenseModel, FiniteAlgebra
from .scalars import Dyadic, ScalarKind


def trivial_algebra() -> FiniteAlgebra:
    return FiniteAlgebra(1, [[0]], [[0]], zero=0, one=0, half=[0], name="trivial", labels=["0"])


def lukasiewicz_chain(n: int) -> FiniteAlgebra:
    """The n-element MV-chain: i stands for i/(n-1), + is capped addition"""
    if n < 2:
        raise InvalidModelError("a Lukasiewicz chain needs at least 2 elements")
    top = n - 1
    labels = [format_scalar(Fraction(i, top)) for i in range(n)]
    return FiniteAlgebra.from_operations(
        n,
        lambda x, y: min(top, x + y),
        lambda x, y: max(0, y - x),
        one=top,
        name=f"L{n}",
        labels=labels,
    )


def boolean_hoop() -> FiniteAlgebra:
    return lukasiewicz_chain(2).renamed("boolean")


def godel_chain(n: int) -> FiniteAlgebra:
    """The n-element idempotent chain: + is max, x -> y is 0 when x >= y and y otherwise"""
    if n < 2:
        raise InvalidModelError("a Goedel chain needs at least 2 elements")
    letters = "abcdefghijklmnopqrstuvwxyz"
    labels = ["0"] + [letters[i] if n - 2 <= 26 else f"a{i}" for i in range(n - 2)] + ["1"]
    return FiniteAlgebra.from_operations(
        n,
        max,
        lambda x, y: 0 if x >= y else y,
        one=n - 1,
        name=f"G{n}",
        labels=labels,
    )


def product(first: FiniteAlgebra, second: FiniteAlgebra) -> FiniteAlgebra:
    """Direct product; the pair (x, y) gets index x * |second| + y"""
    m = second.size
    pairs = list(cartesian(range(first.size), range(second.size)))

    def index(x, y):
        return x * m + y

    def plus(i, j):
        (a, b), (c, d) = pairs[i], pairs[j]
        return index(first.plus(a, c), second.plus(b, d))

    def imp(i, j):
        (a, b), (c, d) = pairs[i], pairs[j]
        return index(first.imp(a, c), second.imp(b, d))

    one = index(first.one, second.one) if first.has_one and second.has_one else None
    half = None
    if first.has_half and second.has_half:
        half = [index(first.half(a), second.half(b)) for a, b in pairs]
    return FiniteAlgebra.from_operations(
        len(pairs),
        plus,
        imp,
        zero=index(first.zero, second.zero),
        one=one,
        half=half,
        name=f"{first.name}x{second.name}",
        labels=[f"({first.labels[a]},{second.labels[b]})" for a, b in pairs],
    )


class OrdinalSum(AlgebraModel):
    """S followed by F with a shared zero; every nonzero element of F absorbs S.

    Elements are ``(0, s)`` for s in S and ``(1, f)`` for nonzero f in F; the
    shared zero is ``(0, S.zero)``.
    """

    def __init__(self, first: AlgebraModel, second: AlgebraModel):
        self.first = first
        self.second = second
        self.name = f"{first.name}^{second.name}"
        self.is_finite = first.is_finite and second.is_finite

    def _tag(self, block: int, x):
        if block == 1 and x == self.second.zero:
            return (0, self.first.zero)
        return (block, x)

    @property
    def zero(self):
        return (0, self.first.zero)

    def plus(self, x, y):
        (i, a), (j, b) = x, y
        if i == j == 0:
            return (0, self.first.plus(a, b))
        if i == j == 1:
            return self._tag(1, self.second.plus(a, b))
        return x if i == 1 else y

    def imp(self, x, y):
        (i, a), (j, b) = x, y
        if i == j == 0:
            return (0, self.first.imp(a, b))
        if i == j == 1:
            return self._tag(1, self.second.imp(a, b))
        if i == 0:
            return y
        return self.zero

    @property
    def has_one(self) -> bool:
        if self._second_trivial():
            return self.first.has_one
        return self.second.has_one

    @property
    def one(self):
        if self._second_trivial():
            return (0, self.first.one)
        return self._tag(1, self.second.one)

    @property
    def has_half(self) -> bool:
        return self.first.has_half and self.second.has_half

    def half(self, x):
        i, a = x
        if i == 0:
            return (0, self.first.half(a))
        return self._tag(1, self.second.half(a))

    def _second_trivial(self) -> bool:
        return self.second.is_finite and len(self.second.elements()) == 1

    def elements(self):
        return [(0, a) for a in self.first.elements()] + [
            (1, b) for b in self.second.elements() if b != self.second.zero
        ]

    def sample(self, rng: random.Random, max_exponent: int = 8):
        if rng.randrange(2) == 0:
            return (0, self.first.sample(rng, max_exponent))
        return self._tag(1, self.second.sample(rng, max_exponent))

    def coerce(self, value):
        if isinstance(value, tuple) and len(value) == 2 and value[0] in (0, 1):
            block, x = value
            model = self.first if block == 0 else self.second
            return self._tag(block, model.coerce(x))
        if isinstance(value, str) and ":" in value:
            block, _, x = value.partition(":")
            if block in ("S", "F"):
                return self.coerce((0 if block == "S" else 1, x))
        raise InvalidModelError(f"cannot read {value!r} as an ordinal-sum element (use S:x or F:y)")

    def contains(self, x) -> bool:
        i, a = x
        return self.first.contains(a) if i == 0 else self.second.contains(a) and a != self.second.zero

    def format_element(self, x) -> str:
        i, a = x
        model = self.first if i == 0 else self.second
        return f"{'SF'[i]}:{model.format_element(a)}"

    def to_finite(self) -> FiniteAlgebra:
        """Table form: the first block keeps its order with zero moved to index 0"""
        carrier = self.elements()
        first_zero = carrier.index(self.zero)
        carrier.insert(0, carrier.pop(first_zero))
        index = {x: i for i, x in enumerate(carrier)}
        n = len(carrier)
        return FiniteAlgebra.from_operations(
            n,
            lambda x, y: index[self.plus(carrier[x], carrier[y])],
            lambda x, y: index[self.imp(carrier[x], carrier[y])],
            zero=0,
            one=index[self.one] if self.has_one else None,
            half=[index[self.half(x)] for x in carrier] if self.has_half else None,
            name=self.name,
            labels=[self.format_element(x) for x in carrier],
        )


def ordinal_sum(first: AlgebraModel, second: AlgebraModel):
    """S ⌢ F; finite inputs give a FiniteAlgebra"""
    combined = OrdinalSum(first, second)
    if combined.is_finite:
        return combined.to_finite()
    return combined


def cap_at(model: DenseModel, cap) -> DenseModel:
    if not isinstance(model, DenseModel) or model.is_capped:
        raise InvalidModelError("cap_at needs an unbounded dense model")
    return DenseModel(model.kind, cap)


def dyadic_scale(p, x, model: AlgebraModel):
    """i * (x halved n times) for p = i / 2**n"""
    p = Dyadic.of(p)
    if p < 0:
        raise InvalidModelError("scale factor must be nonnegative")
    for _ in range(p.exponent):
        x = model.half(x)
    return multiple(p.numerator, x, model)


def multiple(count: int, x, model: AlgebraModel):
    """count-fold sum x + ... + x by doubling"""
    result, addend = model.zero, x
    while count:
        if count & 1:
            result = model.plus(result, addend)
        addend = model.plus(addend, addend)
        count >>= 1
    return result


@dataclass(frozen=True)
class Poset:
    """A partial order on 0..size-1 given by its strict relation"""

    size: int
    less: FrozenSet[Tuple[int, int]]

    @classmethod
    def from_relations(cls, size: int, pairs: Sequence[Tuple[int, int]]) -> "Poset":
        """Transitive closure of the given (lower, upper) pairs"""
        if size < 0:
            raise InvalidModelError("poset size must be nonnegative")
        less = set()
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise InvalidModelError(f"pair {(a, b)} outside 0..{size - 1}")
            less.add((a, b))
        changed = True
        while changed:
            changed = False
            for (a, b) in list(less):
                for (c, d) in list(less):
                    if b == c and (a, d) not in less:
                        less.add((a, d))
                        changed = True
        if any(a == b for a, b in less):
            raise InvalidModelError("relation has a cycle, not a partial order")
        return cls(size, frozenset(less))

    @classmethod
    def chain(cls, size: int) -> "Poset":
        return cls.from_relations(size, [(i, i + 1) for i in range(size - 1)])

    @classmethod
    def antichain(cls, size: int) -> "Poset":
        return cls(size, frozenset())

    @classmethod
    def random(cls, size: int, rng: random.Random, density: float = 0.4) -> "Poset":
        # pairs only go upward in index order, so the closure is acyclic
        pairs = [(a, b) for a in range(size) for b in range(a + 1, size) if rng.random() < density]
        return cls.from_relations(size, pairs)

    def leq(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self.less


def embed_poset(poset: Poset) -> FiniteAlgebra:
    """The involutive pocrim P_X ordered 0 < r < X < X^perp < s < 1.

    Indices: 0, r = 1, X = 2..n+1, X^perp = n+2..2n+1, s = 2n+2, 1 = 2n+3.
    """
    n = poset.size
    if n > settings.POSET_MAX_SIZE:
        raise InvalidModelError(f"poset size {n} exceeds the bound {settings.POSET_MAX_SIZE}")
    size = 2 * n + 4
    r, s, top = 1, 2 * n + 2, 2 * n + 3

    def level(a: int) -> int:
        if a in (0, r):
            return a
        if a == s:
            return 4
        if a == top:
            return 5
        return 2 if a < n + 2 else 3

    def leq(a: int, b: int) -> bool:
        la, lb = level(a), level(b)
        if la != lb:
            return la < lb
        if la == 2:
            return poset.leq(a - 2, b - 2)
        if la == 3:
            return poset.leq(b - n - 2, a - n - 2)
        return a == b

    def perp(a: int) -> int:
        if a == 0:
            return top
        if a == top:
            return 0
        if a == r:
            return s
        if a == s:
            return r
        return a + n if a < n + 2 else a - n

    def plus(a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        return top if leq(perp(b), a) else s

    labels = ["0", "r"] + [f"x{i}" for i in range(n)] + [f"x{i}^" for i in range(n)] + ["s", "1"]
    return FiniteAlgebra.from_operations(
        size,
        plus,
        lambda a, b: perp(plus(a, perp(b))),
        one=top,
        name=f"P{n}",
        labels=labels,
    )


def embedding_indices(poset: Poset) -> List[int]:
    """Where each poset element lands in embed_poset(poset)"""
    return [i + 2 for i in range(poset.size)]


def standard_dense_models() -> List[DenseModel]:
    return [
        DenseModel(ScalarKind.DYADIC, 1),
        DenseModel(ScalarKind.DYADIC),
        DenseModel(ScalarKind.RATIONAL, 1),
        DenseModel(ScalarKind.RATIONAL),
    ]


def standard_finite_models() -> List[FiniteAlgebra]:
    """Small named algebras used as test beds"""
    boolean = boolean_hoop()
    models = [
        trivial_algebra(),
        boolean,
        lukasiewicz_chain(3),
        lukasiewicz_chain(4),
        godel_chain(3),
        godel_chain(4),
        product(boolean, boolean),
        product(boolean, godel_chain(3)),
        ordinal_sum(lukasiewicz_chain(3), boolean),
        embed_poset(Poset.antichain(0)),
        embed_poset(Poset.chain(2)),
        embed_poset(Poset.antichain(2)),
    ]
    return models


def find_model(name: str) -> Optional[AlgebraModel]:
    """Look up a named standard model (``L3``, ``G4``, ``boolean``, ``dyadic-capped:1``)"""
    key = name.strip()
    for model in standard_finite_models():
        if model.name.lower() == key.lower():
            return model
    if key[:1] in "LG" and key[1:].isdigit():
        n = int(key[1:])
        return lukasiewicz_chain(n) if key[0] == "L" else godel_chain(n)
    try:
        return DenseModel.parse(key)
    except InvalidModelError:
        return None
