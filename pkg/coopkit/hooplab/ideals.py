"""Ideals, implicative stabilizers and quotients of finite hoops.

An ideal is a downward-closed submonoid. Ideals and congruences correspond:
x ~ y iff x -> y and y -> x both lie in the ideal.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from coopkit.algebra import FiniteAlgebra
from coopkit.exceptions import InvalidModelError


@dataclass(frozen=True)
class Ideal:
    algebra: FiniteAlgebra
    elements: FrozenSet[int]

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_zero(self) -> bool:
        return self.elements == frozenset({self.algebra.zero})

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.algebra.size

    def labels(self) -> List[str]:
        return [self.algebra.format_element(x) for x in self]

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def _carrier(h: FiniteAlgebra, within: Optional[Iterable[int]]) -> FrozenSet[int]:
    return frozenset(h.elements() if within is None else within)


def _monoid_closure(h: FiniteAlgebra, xs: Iterable[int]) -> FrozenSet[int]:
    closed = {h.zero, *xs}
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            z = h.plus(x, y)
            if z not in closed:
                closed.add(z)
                frontier.append(z)
    return frozenset(closed)


def _downset(h: FiniteAlgebra, xs: Iterable[int], carrier: FrozenSet[int]) -> FrozenSet[int]:
    xs = list(xs)
    return frozenset(y for y in carrier if any(h.leq(y, x) for x in xs))


def generate_ideal(h: FiniteAlgebra, xs: Iterable[int], within: Optional[Iterable[int]] = None) -> Ideal:
    """Least ideal containing xs: everything below some finite sum of them.

    ``within`` restricts the carrier to a subalgebra.
    """
    carrier = _carrier(h, within)
    xs = list(xs)
    if not set(xs) <= carrier:
        raise InvalidModelError("generators must lie in the carrier")
    return Ideal(h, _downset(h, _monoid_closure(h, xs), carrier))


def is_ideal(h: FiniteAlgebra, xs: Iterable[int]) -> bool:
    xs = frozenset(xs)
    return generate_ideal(h, xs).elements == xs


def all_ideals(h: FiniteAlgebra, within: Optional[Iterable[int]] = None) -> List[Ideal]:
    """Every ideal, smallest first; each ideal is generated by its own elements"""
    carrier = sorted(_carrier(h, within))
    found = {}
    for r in range(len(carrier) + 1):
        for xs in combinations(carrier, r):
            ideal = generate_ideal(h, xs, carrier)
            found.setdefault(ideal.elements, ideal)
    return sorted(found.values(), key=lambda i: (len(i), sorted(i.elements)))


def zero_ideal(h: FiniteAlgebra) -> Ideal:
    return Ideal(h, frozenset({h.zero}))


def implicative_stabilizer(h: FiniteAlgebra, x: int) -> FrozenSet[int]:
    """IS(x) = {s | s -> x = x}"""
    return frozenset(s for s in h.elements() if h.imp(s, x) == x)


def set_stabilizer(h: FiniteAlgebra, xs: Iterable[int]) -> FrozenSet[int]:
    """IS(X), the intersection of IS(x) over X (the whole carrier for empty X)"""
    result = frozenset(h.elements())
    for x in xs:
        result &= implicative_stabilizer(h, x)
    return result


def congruence_classes(h: FiniteAlgebra, ideal: Ideal) -> List[Tuple[int, ...]]:
    """Classes of the congruence of the ideal, ordered by least member"""
    classes: List[List[int]] = []
    for x in h.elements():
        for cls in classes:
            y = cls[0]
            if h.imp(x, y) in ideal and h.imp(y, x) in ideal:
                cls.append(x)
                break
        else:
            classes.append([x])
    return [tuple(cls) for cls in classes]


def quotient_by_ideal(h: FiniteAlgebra, ideal: Ideal) -> Tuple[FiniteAlgebra, Tuple[int, ...]]:
    """H/I and the projection, given as the class index of every element"""
    classes = congruence_classes(h, ideal)
    projection = [0] * h.size
    for index, cls in enumerate(classes):
        for x in cls:
            projection[x] = index
    reps = [cls[0] for cls in classes]
    n = len(classes)
    plus = [[projection[h.plus(reps[i], reps[j])] for j in range(n)] for i in range(n)]
    imp = [[projection[h.imp(reps[i], reps[j])] for j in range(n)] for i in range(n)]
    half = [projection[h.half(r)] for r in reps] if h.has_half else None
    one = projection[h.one] if h.has_one else None
    labels = ["{" + ",".join(h.format_element(x) for x in cls) + "}" if len(cls) > 1 else h.format_element(cls[0]) for cls in classes]
    quotient = FiniteAlgebra(
        n, plus, imp, zero=projection[h.zero], one=one, half=half, name=f"{h.name}/{ideal}", labels=labels,
    )
    logger.debug(f"{h.name} / {ideal} has {n} elements")
    return quotient, tuple(projection)


def kernel(h: FiniteAlgebra, projection: Sequence[int], zero: int) -> FrozenSet[int]:
    return frozenset(x for x in h.elements() if projection[x] == zero)
