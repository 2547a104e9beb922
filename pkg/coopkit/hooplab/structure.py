"""Simplicity, archimedean and linear tests, depth, congruences, subalgebras.

The trivial algebra counts as neither simple, archimedean nor subdirectly
irreducible, so that simple and archimedean coincide on every hoop.
"""
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from loguru import logger

from coopkit.algebra import AlgebraClass, FiniteAlgebra, canonical_form, enumerate_up_to
from coopkit.exceptions import InvalidModelError
from coopkit.models.reports import ClassifyRecord, PropertyCheck
from coopkit.utils.metrics import track_duration

from .ideals import Ideal, all_ideals, generate_ideal


def multiple_of(h: FiniteAlgebra, n: int, x: int) -> int:
    total = h.zero
    for _ in range(n):
        total = h.plus(total, x)
    return total


def depth(h: FiniteAlgebra, x: int) -> int:
    """Least d with (d+1)x = dx; depth(0) = 0"""
    d, current = 0, h.zero
    while True:
        following = h.plus(current, x)
        if following == current:
            return d
        d, current = d + 1, following
        if d > h.size:
            raise InvalidModelError(f"multiples of {h.format_element(x)} never stabilise in {h.name}")


def multiples(h: FiniteAlgebra, x: int) -> FrozenSet[int]:
    """{n x | n in N}, finite because the multiples stabilise at depth(x)"""
    return frozenset(multiple_of(h, n, x) for n in range(depth(h, x) + 1))


def is_simple(h: FiniteAlgebra) -> bool:
    ideals = all_ideals(h)
    return h.size > 1 and len(ideals) == 2


def is_archimedean(h: FiniteAlgebra) -> bool:
    """Every y lies below some multiple of every nonzero x"""
    if h.size == 1:
        return False
    for x in h.elements():
        if x == h.zero:
            continue
        bounds = multiples(h, x)
        if not all(any(h.leq(y, b) for b in bounds) for y in h.elements()):
            return False
    return True


def is_linear(h: FiniteAlgebra) -> bool:
    return h.is_linear()


def monolith(h: FiniteAlgebra) -> Optional[Ideal]:
    """Intersection of the nonzero ideals, when that is nonzero"""
    nonzero = [i for i in all_ideals(h) if not i.is_zero]
    if not nonzero:
        return None
    elements = frozenset.intersection(*(i.elements for i in nonzero))
    result = Ideal(h, elements)
    return None if result.is_zero else result


def is_subdirectly_irreducible(h: FiniteAlgebra) -> bool:
    return monolith(h) is not None


@track_duration("classify", "hooplab")
def classify(h: FiniteAlgebra) -> ClassifyRecord:
    record = ClassifyRecord(
        simple=is_simple(h),
        archimedean=is_archimedean(h),
        linear=is_linear(h),
        subdirectly_irreducible=is_subdirectly_irreducible(h),
        depths={h.format_element(x): depth(h, x) for x in h.elements()},
    )
    logger.info(f"{h.name}: simple={record.simple} archimedean={record.archimedean} linear={record.linear}")
    return record


def _partitions(items: List[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def _compatible(h: FiniteAlgebra, block_of: Dict[int, int]) -> bool:
    ops = [h.plus, h.imp]
    for x, x2 in combinations(h.elements(), 2):
        if block_of[x] != block_of[x2]:
            continue
        if h.has_half and block_of[h.half(x)] != block_of[h.half(x2)]:
            return False
        for y in h.elements():
            for op in ops:
                if block_of[op(x, y)] != block_of[op(x2, y)] or block_of[op(y, x)] != block_of[op(y, x2)]:
                    return False
    return True


def congruences_by_partition(h: FiniteAlgebra) -> List[Tuple[FrozenSet[int], ...]]:
    """Every partition of the carrier compatible with the operations"""
    found = []
    for partition in _partitions(h.elements()):
        block_of = {x: i for i, block in enumerate(partition) for x in block}
        if _compatible(h, block_of):
            found.append(tuple(sorted((frozenset(b) for b in partition), key=min)))
    return found


def is_closed(h: FiniteAlgebra, xs: Iterable[int]) -> bool:
    xs = frozenset(xs)
    if h.zero not in xs:
        return False
    for x in xs:
        if h.has_half and h.half(x) not in xs:
            return False
        for y in xs:
            if h.plus(x, y) not in xs or h.imp(x, y) not in xs:
                return False
    return True


def subalgebras(h: FiniteAlgebra) -> List[FrozenSet[int]]:
    """Carriers of the subalgebras (closed under 0, +, -> and halving if present)"""
    rest = [x for x in h.elements() if x != h.zero]
    found = []
    for r in range(len(rest) + 1):
        for xs in combinations(rest, r):
            carrier = frozenset((h.zero, *xs))
            if is_closed(h, carrier):
                found.append(carrier)
    return found


def restrict(h: FiniteAlgebra, carrier: Iterable[int], name: Optional[str] = None) -> FiniteAlgebra:
    """The subalgebra on a closed carrier, elements renumbered in index order"""
    members = sorted(carrier)
    if not is_closed(h, members):
        raise InvalidModelError(f"{{{', '.join(h.format_element(x) for x in members)}}} is not a subalgebra")
    index = {x: i for i, x in enumerate(members)}
    n = len(members)
    plus = [[index[h.plus(x, y)] for y in members] for x in members]
    imp = [[index[h.imp(x, y)] for y in members] for x in members]
    half = [index[h.half(x)] for x in members] if h.has_half else None
    one = index[h.one] if h.has_one and h.one in index else None
    return FiniteAlgebra(
        n, plus, imp, zero=index[h.zero], one=one, half=half,
        name=name or f"{h.name}|{n}", labels=[h.format_element(x) for x in members],
    )


def check_cep(h: FiniteAlgebra) -> PropertyCheck:
    """Every ideal I of every subalgebra C is the trace on C of the ideal of H it generates"""
    checked = 0
    for carrier in subalgebras(h):
        for ideal in all_ideals(h, within=carrier):
            checked += 1
            trace = generate_ideal(h, ideal.elements).elements & carrier
            if trace != ideal.elements:
                return PropertyCheck(ok=False, checked=checked, witness=[sorted(carrier), sorted(ideal.elements)])
    return PropertyCheck(ok=True, checked=checked)


def check_simple_lemma(h: FiniteAlgebra) -> PropertyCheck:
    """In a simple hoop y = x -> y forces x = 0 or y = 0"""
    checked = 0
    for x in h.elements():
        for y in h.elements():
            checked += 1
            if h.imp(x, y) == y and x != h.zero and y != h.zero:
                return PropertyCheck(ok=False, checked=checked, witness=[x, y])
    return PropertyCheck(ok=True, checked=checked)


def _zero_first(h: FiniteAlgebra) -> FiniteAlgebra:
    if h.zero == 0:
        return h
    perm = list(range(h.size))
    perm[0], perm[h.zero] = h.zero, 0
    return h.permuted(perm)


def isomorphic(first: FiniteAlgebra, second: FiniteAlgebra) -> bool:
    if first.size != second.size:
        return False
    return canonical_form(_zero_first(first)).table_key() == canonical_form(_zero_first(second)).table_key()


def enumerate_hoops(n: int) -> List[FiniteAlgebra]:
    """All hoops with at most n elements up to isomorphism, smallest first"""
    return enumerate_up_to(n, AlgebraClass.HOOP)
