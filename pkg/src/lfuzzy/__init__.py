"""Lattice-valued inclusion, similarity and distance between fuzzy sets."""

from .aggregation import AggregatedInclusion, Partition, aggregate_incl
from .lattice import (
    CrispSet,
    FuzzySet,
    Ordering,
    Universe,
    UniverseMismatch,
    compare,
    complement,
    join,
    leq,
    meet,
    parse_grade,
)
from .relations import cut_leq, dist, incl, metric_between, order_between, sim
from .scalar import ScalarValue, eval_scalar, kundu_closed

__all__ = [
    "AggregatedInclusion",
    "CrispSet",
    "FuzzySet",
    "Ordering",
    "Partition",
    "ScalarValue",
    "Universe",
    "UniverseMismatch",
    "aggregate_incl",
    "compare",
    "complement",
    "cut_leq",
    "dist",
    "eval_scalar",
    "incl",
    "join",
    "kundu_closed",
    "leq",
    "meet",
    "metric_between",
    "order_between",
    "parse_grade",
    "sim",
]
