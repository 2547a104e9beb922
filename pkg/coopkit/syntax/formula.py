"""Formula and sequent values.

Formulas are immutable trees over 0, 1, variables, conjunction (⊗),
implication (⊸) and halving. They carry a total order so that antecedent
multisets can be kept as sorted tuples with canonical equality and hashing.
"""
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, List, Tuple

from coopkit.exceptions import CoopkitError
from coopkit.utils.validators import validate_identifier


@total_ordering
class Formula:
    """Common base of the six formula constructors"""

    @property
    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other: "Formula") -> bool:
        if not isinstance(other, Formula):
            return NotImplemented
        return self.sort_key < other.sort_key

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        from .printer import render_formula
        return render_formula(self)


@dataclass(frozen=True, eq=True)
class Zero(Formula):
    @property
    def sort_key(self) -> tuple:
        return (0,)


@dataclass(frozen=True, eq=True)
class One(Formula):
    @property
    def sort_key(self) -> tuple:
        return (1,)


@dataclass(frozen=True, eq=True)
class Var(Formula):
    name: str

    def __post_init__(self):
        if not validate_identifier(self.name):
            raise CoopkitError(f"invalid variable name {self.name!r}")

    @property
    def sort_key(self) -> tuple:
        return (2, self.name)


@dataclass(frozen=True, eq=True)
class Conj(Formula):
    left: Formula
    right: Formula

    @cached_property
    def sort_key(self) -> tuple:
        return (3, self.left.sort_key, self.right.sort_key)

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Imp(Formula):
    left: Formula
    right: Formula

    @cached_property
    def sort_key(self) -> tuple:
        return (4, self.left.sort_key, self.right.sort_key)

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Half(Formula):
    body: Formula

    @cached_property
    def sort_key(self) -> tuple:
        return (5, self.body.sort_key)

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)


ZERO = Zero()
ONE = One()


def neg(f: Formula) -> Formula:
    """A^⊥, i.e. A ⊸ 1"""
    return Imp(f, ONE)


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformulas, the formula itself first (pre-order)"""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(reversed(g.children()))


def variables(f: Formula) -> List[str]:
    """Sorted distinct variable names occurring in f"""
    return sorted({g.name for g in subformulas(f) if isinstance(g, Var)})


def formula_size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


@dataclass(frozen=True)
class Sequent:
    """Γ ⊢ A with Γ a multiset, kept as a sorted tuple"""

    antecedent: Tuple[Formula, ...]
    succedent: Formula
    _counter: Counter = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(sorted(self.antecedent)))
        object.__setattr__(self, "_counter", Counter(self.antecedent))

    @classmethod
    def of(cls, antecedent: Iterable[Formula], succedent: Formula) -> "Sequent":
        return cls(tuple(antecedent), succedent)

    @property
    def multiset(self) -> Counter:
        return Counter(self._counter)

    def with_extra(self, *extra: Formula) -> "Sequent":
        return Sequent(self.antecedent + tuple(extra), self.succedent)

    def without(self, formula: Formula) -> "Sequent":
        """Remove one copy of formula from the antecedent"""
        items = list(self.antecedent)
        items.remove(formula)
        return Sequent(tuple(items), self.succedent)

    def formulas(self) -> Iterator[Formula]:
        yield from self.antecedent
        yield self.succedent

    def variables(self) -> List[str]:
        names = set()
        for f in self.formulas():
            names.update(variables(f))
        return sorted(names)

    def __str__(self) -> str:
        from .printer import render_sequent
        return render_sequent(self)


def multiset_contains(big: Counter, small: Counter) -> bool:
    return all(big[k] >= v for k, v in small.items())


class LanguageId(str, Enum):
    L_O = "L_o"    # no 1, no halving
    L_I = "L_i"    # 1, no halving
    L_H = "L_h"    # halving, no 1
    L_IH = "L_ih"  # full language

    @property
    def has_one(self) -> bool:
        return self in (LanguageId.L_I, LanguageId.L_IH)

    @property
    def has_half(self) -> bool:
        return self in (LanguageId.L_H, LanguageId.L_IH)

    @classmethod
    def from_flags(cls, has_one: bool, has_half: bool) -> "LanguageId":
        if has_one and has_half:
            return cls.L_IH
        if has_one:
            return cls.L_I
        if has_half:
            return cls.L_H
        return cls.L_O


def classify_language(f: Formula) -> LanguageId:
    """Smallest of the four sublanguages containing f"""
    has_one = has_half = False
    for g in subformulas(f):
        if isinstance(g, One):
            has_one = True
        elif isinstance(g, Half):
            has_half = True
    return LanguageId.from_flags(has_one, has_half)


def language_join(a: LanguageId, b: LanguageId) -> LanguageId:
    return LanguageId.from_flags(a.has_one or b.has_one, a.has_half or b.has_half)


def language_contains(outer: LanguageId, inner: LanguageId) -> bool:
    return (outer.has_one or not inner.has_one) and (outer.has_half or not inner.has_half)


def sequent_language(s: Sequent) -> LanguageId:
    lang = LanguageId.L_O
    for f in s.formulas():
        lang = language_join(lang, classify_language(f))
    return lang
