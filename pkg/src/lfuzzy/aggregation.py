"""Partitioned inclusion: one scalar inclusion value per block of a partition."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .lattice import FuzzySet, Universe, _check_same
from .scalar import ScalarValue, eval_scalar, resolve_measure


@dataclass(frozen=True)
class Partition:
    universe: Universe
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(str(x) for x in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("partition has no blocks")
        seen: set[str] = set()
        for i, block in enumerate(blocks):
            if not block:
                raise ValueError(f"block {i} is empty")
            for label in block:
                if label not in self.universe.labels:
                    raise ValueError(f"block {i}: label {label!r} not in universe")
                if label in seen:
                    raise ValueError(f"block {i}: label {label!r} appears in more than one block")
                seen.add(label)
        missing = [x for x in self.universe.labels if x not in seen]
        if missing:
            raise ValueError(f"partition does not cover labels {missing}")

    @classmethod
    def singletons(cls, universe: Universe) -> "Partition":
        return cls(universe, tuple((x,) for x in universe.labels))

    @classmethod
    def whole(cls, universe: Universe) -> "Partition":
        return cls(universe, (universe.labels,))

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class AggregatedInclusion:
    partition: Partition
    measure: int
    values: tuple[ScalarValue, ...]

    def as_fractions(self):
        return [v.value for v in self.values]


def aggregate_incl(A: FuzzySet, B: FuzzySet, partition: Partition, measure) -> AggregatedInclusion:
    """Evaluate ``measure`` on the restriction of ``A`` and ``B`` to each block."""
    _check_same(A, B)
    if partition.universe != A.universe:
        raise ValueError("partition is over a different universe")
    idx = resolve_measure(measure)
    values = tuple(eval_scalar(idx, A.restrict(b), B.restrict(b)) for b in partition.blocks)
    return AggregatedInclusion(partition, idx, values)


def partition_from_dict(doc, universe: Universe) -> Partition:
    if "blocks" not in doc:
        raise ValueError("missing field 'blocks'")
    blocks: Sequence = doc["blocks"]
    return Partition(universe, tuple(tuple(b) for b in blocks))


def load_partition(path, universe: Universe) -> Partition:
    return partition_from_dict(json.loads(Path(path).read_text()), universe)
