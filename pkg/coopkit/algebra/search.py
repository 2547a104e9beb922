"""Finite-table enumeration and countermodel search.

A finite pocrim is determined by its order and its addition: implication is
forced by residuation as the least w with y + w >= z. Enumeration therefore
walks partial orders with 0 at the bottom, then commutative monotone
additions with unit 0, derives implication and keeps the tables that pass
the requested class's laws exhaustively. Isomorphic copies are dropped by
taking the least table key over relabelings that respect the order.
"""
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from itertools import product as cartesian
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from coopkit.config import settings
from coopkit.exceptions import BudgetExhausted, InvalidModelError
from coopkit.syntax import Sequent
from coopkit.utils.metrics import metrics, track_duration

from .evaluation import antecedent_value, check_sequent, eval_formula, supports_sequent
from .laws import AlgebraClass, Exhaustive, in_class
from .models import AlgebraModel, DenseModel, FiniteAlgebra
from .scalars import Dyadic, ScalarKind

# grid searches stop refining once a level would visit more points than this
GRID_POINT_LIMIT = 2_000_000

Order = frozenset


def _orders(n: int) -> Iterator[Order]:
    """Strict orders on 0..n-1 with 0 least, labelled along a linear extension"""
    upper = [(a, b) for a, b in combinations(range(1, n), 2)]
    bottom = {(0, b) for b in range(1, n)}
    for mask in range(1 << len(upper)):
        less = {pair for i, pair in enumerate(upper) if mask >> i & 1}
        if all((a, d) in less for (a, b) in less for (c, d) in less if b == c):
            yield Order(less | bottom)


def _leq(order: Order, a: int, b: int) -> bool:
    return a == b or (a, b) in order


def _additions(n: int, order: Order) -> Iterator[List[List[int]]]:
    """Commutative, monotone, associative tables with unit 0 and x + y above x and y"""
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    choices = [[c for c in range(n) if _leq(order, i, c) and _leq(order, j, c)] for i, j in cells]
    if any(not options for options in choices):
        return
    for values in cartesian(*choices):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[0][x] = table[x][0] = x
        for (i, j), v in zip(cells, values):
            table[i][j] = table[j][i] = v
        if not _monotone(n, order, table):
            continue
        if all(table[table[x][y]][z] == table[x][table[y][z]] for x in range(1, n) for y in range(1, n) for z in range(1, n)):
            yield table


def _monotone(n: int, order: Order, table) -> bool:
    return all(
        _leq(order, table[x][z], table[y][z])
        for (x, y) in order
        for z in range(n)
    )


def _residual(n: int, order: Order, plus) -> Optional[List[List[int]]]:
    """y -> z as the least w with y + w >= z, or None when some least element is missing"""
    imp = [[0] * n for _ in range(n)]
    for y in range(n):
        for z in range(n):
            above = [w for w in range(n) if _leq(order, z, plus[y][w])]
            least = [w for w in above if all(_leq(order, w, v) for v in above)]
            if not least:
                return None
            imp[y][z] = least[0]
    return imp


def canonical_form(algebra: FiniteAlgebra) -> FiniteAlgebra:
    """Least relabeling (0 fixed, order respected) by table key"""
    n = algebra.size
    best = None
    for rest in permutations(range(1, n)):
        perm = (0,) + rest
        if any(perm[x] > perm[y] for x in range(n) for y in range(n) if x != y and algebra.leq(x, y)):
            continue
        candidate = algebra.permuted(perm)
        if best is None or candidate.table_key() < best.table_key():
            best = candidate
    return best if best is not None else algebra


def _algebras_over_order(n: int, order: Order, algebra_class: AlgebraClass) -> List[FiniteAlgebra]:
    found = []
    for plus in _additions(n, order):
        imp = _residual(n, order, plus)
        if imp is None:
            continue
        algebra = FiniteAlgebra(n, plus, imp, zero=0)
        algebra = algebra.with_one(algebra.annihilator())
        if algebra_class.has_halving:
            candidates = [algebra.with_half(list(h)) for h in cartesian(range(n), repeat=n)]
        else:
            candidates = [algebra]
        for candidate in candidates:
            if in_class(candidate, algebra_class, Exhaustive()):
                found.append(canonical_form(candidate))
    return found


@track_duration("enumerate_algebras", "algebra")
def enumerate_algebras(size: int, algebra_class: AlgebraClass = AlgebraClass.HOOP, workers: Optional[int] = None) -> List[FiniteAlgebra]:
    """All algebras of exactly ``size`` elements in the class, up to isomorphism"""
    if size < 1:
        raise InvalidModelError("size must be at least 1")
    if size > settings.ENUMERATION_HARD_LIMIT:
        raise InvalidModelError(f"size {size} exceeds the enumeration limit {settings.ENUMERATION_HARD_LIMIT}")
    workers = workers or settings.WORKERS
    orders = list(_orders(size))
    if workers > 1 and len(orders) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_algebras_over_order, [size] * len(orders), orders, [algebra_class] * len(orders)))
    else:
        batches = [_algebras_over_order(size, order, algebra_class) for order in orders]
    unique: Dict[tuple, FiniteAlgebra] = {}
    for batch in batches:
        for algebra in batch:
            unique.setdefault(algebra.table_key(), algebra)
    result = [unique[key] for key in sorted(unique, key=_sort_key)]
    for i, algebra in enumerate(result):
        algebra.name = f"{algebra_class.value}-{size}-{i}"
    logger.info(f"{len(result)} {algebra_class.value} algebras of size {size}")
    return result


def _sort_key(key: tuple) -> tuple:
    # None sorts before any index
    return tuple(-1 if part is None else part for part in key)


def enumerate_up_to(n: int, algebra_class: AlgebraClass, workers: Optional[int] = None) -> List[FiniteAlgebra]:
    algebras = []
    for size in range(1, n + 1):
        algebras.extend(enumerate_algebras(size, algebra_class, workers))
    return algebras


@dataclass
class Countermodel:
    model: AlgebraModel
    assignment: Dict[str, Any]
    antecedent: Any
    succedent: Any

    def describe(self) -> Dict[str, Any]:
        return {
            "model": self.model.name,
            "assignment": {name: self.model.format_element(v) for name, v in sorted(self.assignment.items())},
            "antecedent": self.model.format_element(self.antecedent),
            "succedent": self.model.format_element(self.succedent),
        }


def _refute(s: Sequent, model: AlgebraModel, assignment: Dict[str, Any]) -> Optional[Countermodel]:
    if check_sequent(s, assignment, model):
        return None
    return Countermodel(model, dict(assignment), antecedent_value(s, assignment, model), eval_formula(s.succedent, assignment, model))


def _grid_points(model: DenseModel, exponent: int, names: Sequence[str], minimum: int) -> List[Tuple]:
    """Tuples of grid points of the level, simplest denominators first"""
    points = model.grid(exponent)

    def depth(value) -> int:
        return Dyadic.of(value).exponent

    tuples = cartesian(points, repeat=len(names))
    if exponent > minimum:
        tuples = (t for t in tuples if max(map(depth, t), default=0) == exponent)
    return sorted(tuples, key=lambda t: (max(map(depth, t), default=0), t))


def grid_models(algebra_class: AlgebraClass) -> List[DenseModel]:
    models = [DenseModel(ScalarKind.DYADIC, 1)]
    if not algebra_class.bounded:
        models.append(DenseModel(ScalarKind.DYADIC))
    return models


def _grid_search(s: Sequent, algebra_class: AlgebraClass, max_exponent: int) -> Optional[Countermodel]:
    names = s.variables()
    for model in grid_models(algebra_class):
        if not supports_sequent(model, s):
            continue
        minimum = min(settings.GRID_MIN_EXPONENT, max_exponent)
        for k in range(minimum, max_exponent + 1):
            if len(model.grid(k)) ** len(names) > GRID_POINT_LIMIT:
                logger.warning(f"grid 1/2^{k} over {len(names)} variables is too large, stopping refinement")
                break
            for values in _grid_points(model, k, names, minimum):
                witness = _refute(s, model, dict(zip(names, values)))
                if witness:
                    return witness
    return None


def _table_search(s: Sequent, algebra_class: AlgebraClass, max_size: int) -> Optional[Countermodel]:
    names = s.variables()
    for size in range(1, max_size + 1):
        for algebra in enumerate_algebras(size, algebra_class):
            if not supports_sequent(algebra, s):
                continue
            for values in cartesian(algebra.elements(), repeat=len(names)):
                witness = _refute(s, algebra, dict(zip(names, values)))
                if witness:
                    return witness
    return None


@track_duration("search_countermodel", "algebra")
def search_countermodel(s: Sequent, algebra_class: AlgebraClass, budget: Optional[int] = None) -> Countermodel:
    """Look for a model of the class falsifying s.

    Halving classes are searched on dyadic grids (budget = finest exponent),
    the others by table enumeration (budget = largest carrier size). Raises
    ``BudgetExhausted`` when nothing turns up, which proves nothing.
    """
    if algebra_class.has_halving:
        budget = settings.GRID_MAX_EXPONENT if budget is None else budget
        witness = _grid_search(s, algebra_class, budget)
    else:
        budget = settings.enumeration_bound if budget is None else budget
        witness = _table_search(s, algebra_class, budget)
    metrics.record_countermodel_search(algebra_class.value, witness is not None)
    if witness is None:
        logger.warning(f"no countermodel for {s} in class {algebra_class.value} within budget {budget}")
        raise BudgetExhausted(budget, f"class {algebra_class.value}")
    # re-verify before handing the witness out
    if not in_class(witness.model, algebra_class) or check_sequent(s, witness.assignment, witness.model):
        raise InvalidModelError("countermodel failed re-verification")
    logger.info(f"countermodel for {s} in {witness.model.name}")
    return witness


def sample_scalar(model: AlgebraModel, rng: random.Random) -> Any:
    """One carrier element: dyadics of exponent at most SAMPLE_MAX_EXPONENT, small-denominator rationals"""
    return model.sample(rng, settings.SAMPLE_MAX_EXPONENT)


def sample_assignments(names: Sequence[str], model: AlgebraModel, count: int, seed: int) -> Iterator[Dict[str, Any]]:
    rng = random.Random(seed)
    for _ in range(count):
        yield {name: sample_scalar(model, rng) for name in names}


def as_fraction_assignment(assignment: Dict[str, Any]) -> Dict[str, Fraction]:
    return {name: Fraction(value.to_fraction() if isinstance(value, Dyadic) else value) for name, value in assignment.items()}
