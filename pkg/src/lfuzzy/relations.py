"""Lattice-valued inclusion, similarity and distance between fuzzy sets.

Each relation maps a pair of fuzzy sets to a crisp set over the same
universe, i.e. one bit per element.
"""

from __future__ import annotations

from .lattice import (
    CrispSet,
    FuzzySet,
    _check_same,
    complement,
    join,
    leq,
    meet,
)


def incl(A: FuzzySet, B: FuzzySet) -> CrispSet:
    """Degree of inclusion of ``A`` in ``B``: bit u is 1 iff ``A_u <= B_u``."""
    _check_same(A, B)
    return CrispSet(A.universe, [int(a <= b) for a, b in zip(A.grades, B.grades)])


def sim(A: FuzzySet, B: FuzzySet) -> CrispSet:
    """Similarity ``incl(A, B) ∧ incl(B, A)``; bit u is 1 iff ``A_u == B_u``."""
    return meet(incl(A, B), incl(B, A))


def dist(A: FuzzySet, B: FuzzySet) -> CrispSet:
    """Distance, the complement of :func:`sim`; bit u is 1 iff ``A_u != B_u``."""
    return complement(sim(A, B))


def cut_leq(A: FuzzySet, B: FuzzySet, theta: CrispSet) -> bool:
    """``A <=_theta B``, read as ``incl(A, B) >= theta``.

    Under this reading the cut is a preorder for every fixed ``theta``.
    Requiring ``incl(A, B) == theta`` instead would not even be reflexive
    unless ``theta`` is the all-ones set.
    """
    _check_same(A, theta)
    return leq(theta, incl(A, B))


def order_between(A: FuzzySet, B: FuzzySet, C: FuzzySet) -> bool:
    """``A ∧ C <= B <= A ∨ C``."""
    return leq(meet(A, C), B) and leq(B, join(A, C))


def metric_between(A: FuzzySet, B: FuzzySet, C: FuzzySet) -> bool:
    """``dist(A, C) == dist(A, B) ∨ dist(B, C)``.

    Implied by :func:`order_between`; the converse only holds for crisp sets
    (``A=[0], B=[1], C=[1/2]`` is metrically but not order-between).
    """
    return dist(A, C) == join(dist(A, B), dist(B, C))


def crisp_symmetric_difference(theta: CrispSet, phi: CrispSet) -> CrispSet:
    """``(theta' ∧ phi) ∨ (theta ∧ phi')``; agrees with ``dist`` on crisp sets."""
    if not (isinstance(theta, CrispSet) and isinstance(phi, CrispSet)):
        theta, phi = CrispSet.from_fuzzy(theta), CrispSet.from_fuzzy(phi)
    return join(meet(complement(theta), phi), meet(theta, complement(phi)))


RELATIONS = {"incl": incl, "sim": sim, "dist": dist}


def to_bitstring(value: CrispSet) -> str:
    return str(CrispSet.from_fuzzy(value))


def to_bitlist(value: CrispSet) -> list[int]:
    return list(CrispSet.from_fuzzy(value).bits)
