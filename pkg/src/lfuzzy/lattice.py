"""Exact fuzzy sets over a finite universe and their de Morgan lattice operations.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``; nothing in this
module ever touches a float.  Crisp sets are fuzzy sets whose grades are all 0
or 1 and are used as the value type of the lattice-valued relations.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class UniverseMismatch(ValueError):
    """Raised when a binary operation receives sets over different universes."""


def parse_grade(value) -> Fraction:
    """Parse a membership grade exactly.

    Accepts ``Fraction``, ``int``, and strings such as ``"0.2"`` or ``"1/5"``.
    Floats are rejected because their binary expansion is not the decimal the
    user wrote.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not grades")
    if isinstance(value, float):
        raise TypeError(f"float grade {value!r} is inexact; pass a string such as '0.2'")
    if isinstance(value, (int, Fraction)):
        grade = Fraction(value)
    elif isinstance(value, str):
        try:
            grade = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse grade {value!r}") from exc
    else:
        raise TypeError(f"unsupported grade type {type(value).__name__}")
    if not ZERO <= grade <= ONE:
        raise ValueError(f"grade {value!r} outside [0, 1]")
    return grade


def format_grade(x: Fraction, decimal: bool = False, digits: int = 6) -> str:
    if decimal:
        return f"{float(x):.{digits}g}"
    return str(x)


@dataclass(frozen=True)
class Universe:
    """Ordered, finite, duplicate-free list of element labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("universe must be nonempty")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in universe {labels}")

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        return cls(tuple(str(i + 1) for i in range(n)))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"label {label!r} not in universe") from None


class FuzzySet:
    """A total map from a :class:`Universe` to exact grades in ``[0, 1]``.

    Instances are immutable and compare equal when their universes and grades
    are equal, regardless of whether either is a :class:`CrispSet`.
    """

    __slots__ = ("universe", "grades")

    def __init__(self, universe: Universe, grades: Iterable):
        grades = tuple(parse_grade(g) for g in grades)
        if len(grades) != len(universe):
            raise ValueError(
                f"expected {len(universe)} grades for universe {universe.labels}, got {len(grades)}"
            )
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "grades", grades)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def constant(cls, universe: Universe, grade) -> "FuzzySet":
        return cls(universe, [grade] * len(universe))

    @classmethod
    def zeros(cls, universe: Universe) -> "FuzzySet":
        return cls.constant(universe, 0)

    @classmethod
    def ones(cls, universe: Universe) -> "FuzzySet":
        return cls.constant(universe, 1)

    def __len__(self) -> int:
        return len(self.grades)

    def __getitem__(self, label) -> Fraction:
        return self.grades[self.universe.index(label)]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.grades)

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.universe == other.universe and self.grades == other.grades

    def __hash__(self):
        return hash((self.universe, self.grades))

    def __repr__(self):
        body = ", ".join(str(g) for g in self.grades)
        return f"{type(self).__name__}([{body}])"

    @property
    def is_crisp(self) -> bool:
        return all(g in (ZERO, ONE) for g in self.grades)

    def to_fuzzy(self) -> "FuzzySet":
        return FuzzySet(self.universe, self.grades)

    def to_strings(self, decimal: bool = False) -> list[str]:
        return [format_grade(g, decimal) for g in self.grades]

    def restrict(self, labels: Sequence[str]) -> "FuzzySet":
        """Restriction to the sub-universe made of ``labels`` (in that order)."""
        sub = Universe(tuple(labels))
        return FuzzySet(sub, [self[lab] for lab in sub.labels])


class CrispSet(FuzzySet):
    """A fuzzy set with every grade in ``{0, 1}``; printed as a bit string."""

    __slots__ = ()

    def __init__(self, universe: Universe, grades: Iterable):
        super().__init__(universe, grades)
        if not self.is_crisp:
            raise ValueError(f"not a crisp set: {[str(g) for g in self.grades]}")

    @classmethod
    def from_bits(cls, universe: Universe, bits) -> "CrispSet":
        if isinstance(bits, str):
            if set(bits) - {"0", "1"}:
                raise ValueError(f"bit string {bits!r} may only contain 0 and 1")
            bits = [int(ch) for ch in bits]
        return cls(universe, [int(b) for b in bits])

    @classmethod
    def from_fuzzy(cls, A: FuzzySet) -> "CrispSet":
        return cls(A.universe, A.grades)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(g) for g in self.grades)

    def __str__(self):
        return "".join(str(b) for b in self.bits)


class Ordering(enum.Enum):
    EQUAL = "Equal"
    LESS_EQ = "LessEq"
    GREATER_EQ = "GreaterEq"
    INCOMPARABLE = "Incomparable"


def _check_same(A: FuzzySet, B: FuzzySet) -> None:
    if A.universe != B.universe:
        raise UniverseMismatch(f"universes differ: {A.universe.labels} vs {B.universe.labels}")


def _result(A: FuzzySet, B: FuzzySet, grades) -> FuzzySet:
    cls = CrispSet if isinstance(A, CrispSet) and isinstance(B, CrispSet) else FuzzySet
    return cls(A.universe, grades)


def meet(A: FuzzySet, B: FuzzySet) -> FuzzySet:
    """Elementwise minimum; crisp if both arguments are crisp."""
    _check_same(A, B)
    return _result(A, B, [min(a, b) for a, b in zip(A.grades, B.grades)])


def join(A: FuzzySet, B: FuzzySet) -> FuzzySet:
    """Elementwise maximum; crisp if both arguments are crisp."""
    _check_same(A, B)
    return _result(A, B, [max(a, b) for a, b in zip(A.grades, B.grades)])


def complement(A: FuzzySet) -> FuzzySet:
    cls = CrispSet if isinstance(A, CrispSet) else FuzzySet
    return cls(A.universe, [ONE - a for a in A.grades])


def leq(A: FuzzySet, B: FuzzySet) -> bool:
    """Product order: ``A_u <= B_u`` for every element."""
    _check_same(A, B)
    return all(a <= b for a, b in zip(A.grades, B.grades))


def compare(A: FuzzySet, B: FuzzySet) -> Ordering:
    le, ge = leq(A, B), leq(B, A)
    if le and ge:
        return Ordering.EQUAL
    if le:
        return Ordering.LESS_EQ
    if ge:
        return Ordering.GREATER_EQ
    return Ordering.INCOMPARABLE


def strictly_greater(A: FuzzySet, B: FuzzySet) -> bool:
    """``A_u > B_u`` at every element (the strict reading of ``A > B``)."""
    _check_same(A, B)
    return all(a > b for a, b in zip(A.grades, B.grades))


def family_sup(sets: Sequence[FuzzySet]) -> FuzzySet:
    if not sets:
        raise ValueError("family_sup of an empty family")
    out = sets[0]
    for S in sets[1:]:
        out = join(out, S)
    return out


def family_inf(sets: Sequence[FuzzySet]) -> FuzzySet:
    if not sets:
        raise ValueError("family_inf of an empty family")
    out = sets[0]
    for S in sets[1:]:
        out = meet(out, S)
    return out


def grid_levels(g: int) -> list[Fraction]:
    if g < 1:
        raise ValueError("grid needs at least one step")
    return [Fraction(i, g) for i in range(g + 1)]


def grid_sets(universe: Universe, g: int) -> Iterator[FuzzySet]:
    """All fuzzy sets with grades in ``{0, 1/g, ..., 1}``, first element varying slowest."""
    levels = grid_levels(g)
    for grades in itertools.product(levels, repeat=len(universe)):
        yield FuzzySet(universe, grades)


def crisp_sets(universe: Universe) -> Iterator[CrispSet]:
    for bits in itertools.product((0, 1), repeat=len(universe)):
        yield CrispSet(universe, bits)


# -- set-collection files -----------------------------------------------------


@dataclass(frozen=True)
class SetCollection:
    universe: Universe
    sets: Mapping[str, FuzzySet]

    def get(self, name: str) -> FuzzySet:
        try:
            return self.sets[name]
        except KeyError:
            raise KeyError(f"unknown set name {name!r}; have {sorted(self.sets)}") from None


def collection_from_dict(doc: Mapping) -> SetCollection:
    if "universe" not in doc:
        raise ValueError("missing field 'universe'")
    if "sets" not in doc or not isinstance(doc["sets"], Mapping):
        raise ValueError("missing or malformed field 'sets'")
    universe = Universe(tuple(doc["universe"]))
    sets = {}
    for name, grades in doc["sets"].items():
        try:
            fs = FuzzySet(universe, grades)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"sets.{name}: {exc}") from exc
        sets[name] = CrispSet.from_fuzzy(fs) if fs.is_crisp else fs
    return SetCollection(universe, sets)


def load_collection(path) -> SetCollection:
    # decimals are handed to Fraction as their source text
    text = Path(path).read_text()
    doc = json.loads(text, parse_float=Fraction)
    return collection_from_dict(doc)


def collection_to_dict(coll: SetCollection) -> dict:
    return {
        "universe": list(coll.universe.labels),
        "sets": {name: S.to_strings() for name, S in coll.sets.items()},
    }
