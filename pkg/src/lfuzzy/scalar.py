"""Twelve classical [0, 1]-valued inclusion measures, evaluated exactly.

Index-to-formula map (``|A|`` is the sum of grades, ``'`` the complement):

    1  |A ∧ B| / |A|                                   (kosko)
    2  |B| / |A ∨ B|
    3  |A' ∧ B'| / |B'|
    4  |A'| / |A' ∨ B'|
    5  |A' ∨ B| / |A' ∨ A ∨ B ∨ B'|
    6  |A' ∧ A ∧ B ∧ B'| / |A ∧ B'|
    7  (|A'| ∨ |B|) / |A' ∨ A ∨ B ∨ B'|
    8  |A' ∧ A ∧ B ∧ B'| / (|A| ∧ |B'|)
    9  Σ_u 1 ∧ (1 - A_u + B_u) / |U|
    10 Σ_u (1 - A_u) ∨ B_u / |U|
    11 Σ_u (1 - A_u + A_u B_u) / |U|
    12 sup{α : A_u ∧ α <= B_u ∧ α for all u}          (kundu)

A zero denominator yields 1 with ``degenerate=True`` (vacuous inclusion).
A ratio above 1 is clamped to 1 with ``clamped=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import ONE, ZERO, FuzzySet, _check_same, grid_levels

MEASURE_IDS = tuple(range(1, 13))

NAMES = {
    "kosko": 1,
    "kundu": 12,
    **{f"m{i}": i for i in MEASURE_IDS},
}


def resolve_measure(key) -> int:
    """Map ``"kosko"``, ``"m7"``, ``"7"`` or ``7`` to a measure index."""
    if isinstance(key, int) and not isinstance(key, bool):
        idx = key
    elif isinstance(key, str) and key.strip().lower() in NAMES:
        idx = NAMES[key.strip().lower()]
    elif isinstance(key, str) and key.strip().isdigit():
        idx = int(key)
    else:
        raise ValueError(f"unknown measure {key!r}; use 1-12, m1-m12, kosko or kundu")
    if idx not in MEASURE_IDS:
        raise ValueError(f"measure index {idx} outside 1..12")
    return idx


@dataclass(frozen=True)
class ScalarValue:
    value: Fraction
    degenerate: bool = False
    clamped: bool = False

    def __post_init__(self):
        if not ZERO <= self.value <= ONE:
            raise ValueError(f"scalar inclusion value {self.value} outside [0, 1]")


def cardinality(A: FuzzySet) -> Fraction:
    return sum(A.grades, ZERO)


def _ratio(num: Fraction, den: Fraction) -> ScalarValue:
    if den == 0:
        return ScalarValue(ONE, degenerate=True)
    value = num / den
    if value > ONE:
        return ScalarValue(ONE, clamped=True)
    return ScalarValue(value)


def _fractions(A: FuzzySet, B: FuzzySet, idx: int) -> tuple[Fraction, Fraction]:
    a, b = A.grades, B.grades
    ac = [ONE - x for x in a]
    bc = [ONE - y for y in b]
    n = len(a)
    if idx == 1:
        return sum(map(min, a, b), ZERO), sum(a, ZERO)
    if idx == 2:
        return sum(b, ZERO), sum(map(max, a, b), ZERO)
    if idx == 3:
        return sum(map(min, ac, bc), ZERO), sum(bc, ZERO)
    if idx == 4:
        return sum(ac, ZERO), sum(map(max, ac, bc), ZERO)
    if idx in (5, 7):
        den = sum(map(max, ac, a, b, bc), ZERO)
        if idx == 5:
            return sum(map(max, ac, b), ZERO), den
        return max(sum(ac, ZERO), sum(b, ZERO)), den
    if idx in (6, 8):
        num = sum(map(min, ac, a, b, bc), ZERO)
        if idx == 6:
            return num, sum(map(min, a, bc), ZERO)
        return num, min(sum(a, ZERO), sum(bc, ZERO))
    if idx == 9:
        return sum((min(ONE, ONE - x + y) for x, y in zip(a, b)), ZERO), Fraction(n)
    if idx == 10:
        return sum((max(ONE - x, y) for x, y in zip(a, b)), ZERO), Fraction(n)
    if idx == 11:
        return sum((ONE - x + x * y for x, y in zip(a, b)), ZERO), Fraction(n)
    raise ValueError(f"measure {idx} has no ratio form")


def eval_scalar(measure, A: FuzzySet, B: FuzzySet) -> ScalarValue:
    """Evaluate scalar inclusion measure ``measure`` (index or name) of ``A`` in ``B``."""
    idx = resolve_measure(measure)
    _check_same(A, B)
    if idx == 12:
        return kundu_closed(A, B)
    return _ratio(*_fractions(A, B, idx))


def kundu_closed(A: FuzzySet, B: FuzzySet) -> ScalarValue:
    """Measure 12 in closed form: 1 if ``A <= B``, else ``min{B_u : A_u > B_u}``."""
    _check_same(A, B)
    violated = [b for a, b in zip(A.grades, B.grades) if a > b]
    return ScalarValue(min(violated) if violated else ONE)


def kundu_oracle(A: FuzzySet, B: FuzzySet, grid_g: int) -> ScalarValue:
    """Largest ``α`` in ``{0, 1/g, ..., 1}`` with ``A_u ∧ α <= B_u ∧ α`` for all u.

    Brute force over the grid; kept separate from :func:`kundu_closed` so the
    two can be checked against each other.
    """
    _check_same(A, B)
    best = None
    for alpha in grid_levels(grid_g):
        if all(min(a, alpha) <= min(b, alpha) for a, b in zip(A.grades, B.grades)):
            best = alpha
    # alpha = 0 always qualifies
    return ScalarValue(best)
