"""Exhaustive and sampled verification of relation properties.

A property is universally quantified over fuzzy sets on the grid
``{0, 1/g, ..., 1}^n`` (and over crisp thresholds when it mentions one).
Exhaustive mode walks every tuple in lexicographic order; random mode draws
``trials`` tuples from a seeded generator.  A refutation carries the first
violating tuple, re-searched on smaller universes and coarser grids so the
reported witness is minimal, and is replayed through the public API before it
is returned.
"""

from __future__ import annotations

import enum
import os
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..lattice import CrispSet, FuzzySet, Universe
from . import encoded
from .backend import backend_for, first_violation_range, first_violation_samples, public_predicate
from .properties import (
    AXIOMS,
    SUITE_ALIASES,
    SUITES,
    Property,
    relation_property,
    scalar_axiom,
    vector_axiom,
)

DEFAULT_MAX_TUPLES = 10**8
SET_NAMES = ("A", "B", "C", "D")


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


class SearchTooLarge(ValueError):
    def __init__(self, what: str, estimate: int, cap: int):
        super().__init__(f"{what}: exhaustive search needs {estimate:,} tuples, above the cap of {cap:,}")
        self.estimate = estimate
        self.cap = cap


class WitnessReplayError(AssertionError):
    """A witness found by a kernel did not reproduce through the public API."""


@dataclass(frozen=True)
class SearchConfig:
    universe_size: int = 3
    grid_levels: int = 4
    mode: str = "exhaustive"
    trials: int = 10_000
    seed: int = 0
    workers: int = 1
    max_tuples: int | None = None

    def __post_init__(self):
        if self.universe_size < 1:
            raise ValueError("universe_size must be positive")
        if self.grid_levels < 1:
            raise ValueError("grid_levels must be positive")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', not {self.mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        encoded.context(self.grid_levels, self.universe_size)  # packing feasibility

    @property
    def cap(self) -> int:
        if self.max_tuples is not None:
            return self.max_tuples
        return int(os.environ.get("LFUZZY_MAX_TRIPLES", DEFAULT_MAX_TUPLES))


@dataclass(frozen=True)
class AuditResult:
    property_id: str
    verdict: Verdict
    witness: dict | None = None
    stats: dict = field(default_factory=dict)
    theorem: bool = True
    text: str = ""

    @property
    def theorem_refuted(self) -> bool:
        return self.theorem and self.verdict is Verdict.REFUTED

    def to_dict(self) -> dict:
        return {
            "property": self.property_id,
            "verdict": self.verdict.value,
            "theorem": self.theorem,
            "witness": self.witness,
            "stats": self.stats,
        }


def space_size(prop: Property, n: int, g: int) -> int:
    return (g + 1) ** (n * prop.arity) * (2**n if prop.theta else 1)


def estimate(props, cfg: SearchConfig) -> int:
    """Tuples an exhaustive run of ``props`` would evaluate."""
    return sum(space_size(p, cfg.universe_size, cfg.grid_levels) for p in props)


def _dims(prop: Property, n: int, g: int) -> np.ndarray:
    N = (g + 1) ** n
    dims = [N if i < prop.arity else 1 for i in range(4)]
    dims.append(2**n if prop.theta else 1)
    return np.array(dims, dtype=np.int64)


def _split(size: int, parts: int):
    bounds = np.linspace(0, size, parts + 1).astype(np.int64)
    return [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def _merge(hits) -> int:
    hits = [h for h in hits if h >= 0]
    return min(hits) if hits else -1


def _run_parts(func, size: int, workers: int) -> int:
    parts = _split(size, workers)
    if workers == 1 or len(parts) == 1:
        return _merge(func(lo, hi) for lo, hi in parts)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return _merge(pool.map(lambda p: func(*p), parts))


def _exhaustive_hit(prop: Property, n: int, g: int, workers: int) -> tuple[int, tuple]:
    """First violating flat index (or -1) and the tuple codes at that index."""
    k = encoded.context(g, n, prop.sel)
    dims = _dims(prop, n, g)
    codes = encoded.grid_codes(k)
    size = int(np.prod(dims))
    backend = backend_for(size)
    hit = _run_parts(
        lambda lo, hi: first_violation_range(prop.pred, lo, hi, dims, codes, k, backend), size, workers
    )
    if hit < 0:
        return -1, ()
    idx = np.unravel_index(hit, tuple(int(d) for d in dims))
    sets = tuple(int(codes[i]) for i in idx[:4])
    return hit, sets + (int(idx[4]),)


def _decode(prop: Property, n: int, g: int, tup) -> tuple[list, CrispSet | None]:
    k = encoded.context(g, n, prop.sel)
    universe = Universe.of_size(n)
    sets = [
        FuzzySet(universe, [Fraction(x, g) for x in encoded.unpack_code(code, k)])
        for code in tup[: prop.arity]
    ]
    theta = None
    if prop.theta:
        theta = CrispSet(universe, [(tup[4] >> u) & 1 for u in range(n)])
    return sets, theta


def replay(prop: Property, sets, theta, n: int, g: int) -> bool:
    """Evaluate ``prop`` on public objects; True means the property holds there."""
    args = list(sets) + [None] * (4 - len(sets))
    return bool(public_predicate(prop.pred)(*args, theta, encoded.context(g, n, prop.sel)))


def _witness(prop: Property, n: int, g: int, tup) -> dict:
    sets, theta = _decode(prop, n, g, tup)
    if replay(prop, sets, theta, n, g):
        raise WitnessReplayError(f"{prop.id}: witness {tup} does not violate the property via the public API")
    # also a valid sets file: {"universe": ..., "sets": ...}
    out = {
        "n": n,
        "g": g,
        "universe": list(sets[0].universe.labels),
        "sets": {SET_NAMES[i]: S.to_strings() for i, S in enumerate(sets)},
    }
    if theta is not None:
        out["theta"] = str(theta)
    return out


def _minimal(prop: Property, n: int, g: int, cap: int, workers: int, known=None):
    """Smallest (n', g') with a violation, scanning n' then g' upward."""
    for n2 in range(1, n + 1):
        for g2 in range(1, g + 1):
            if known is not None and (n2, g2) == (n, g):
                return n, g, known
            if space_size(prop, n2, g2) > cap:
                continue
            hit, tup = _exhaustive_hit(prop, n2, g2, workers)
            if hit >= 0:
                return n2, g2, tup
    return None


def check(prop: Property, cfg: SearchConfig) -> AuditResult:
    """Run one property under ``cfg``."""
    n, g = cfg.universe_size, cfg.grid_levels
    if cfg.mode == "exhaustive":
        size = space_size(prop, n, g)
        if size > cfg.cap:
            raise SearchTooLarge(prop.id, size, cfg.cap)
        hit, tup = _exhaustive_hit(prop, n, g, cfg.workers)
        stats = {"mode": "exhaustive", "n": n, "g": g, "space": size}
        if hit < 0:
            stats["checked"] = size
            return AuditResult(prop.id, Verdict.HOLDS, None, stats, prop.theorem, prop.text)
        stats["checked"] = hit + 1
        found = _minimal(prop, n, g, cfg.cap, cfg.workers, known=tup)
    else:
        hit, tup = _random_hit(prop, cfg)
        stats = {"mode": "random", "n": n, "g": g, "trials": cfg.trials, "seed": cfg.seed}
        if hit < 0:
            stats["checked"] = cfg.trials
            return AuditResult(prop.id, Verdict.INCONCLUSIVE, None, stats, prop.theorem, prop.text)
        stats["checked"] = hit + 1
        found = _minimal(prop, n, g, cfg.cap, cfg.workers) or (n, g, tup)
    n2, g2, tup2 = found
    stats["witness_n"], stats["witness_g"] = n2, g2
    return AuditResult(prop.id, Verdict.REFUTED, _witness(prop, n2, g2, tup2), stats, prop.theorem, prop.text)


def _random_hit(prop: Property, cfg: SearchConfig):
    n, g = cfg.universe_size, cfg.grid_levels
    k = encoded.context(g, n, prop.sel)
    rng = np.random.default_rng([cfg.seed, zlib.crc32(prop.id.encode())])
    digits = rng.integers(0, g + 1, size=(cfg.trials, prop.arity, n), dtype=np.int64)
    sets = np.zeros((cfg.trials, 4), dtype=np.int64)
    sets[:, : prop.arity] = encoded.pack_digits(digits, k)
    if prop.theta:
        thetas = rng.integers(0, 2**n, size=cfg.trials, dtype=np.int64)
    else:
        thetas = np.zeros(cfg.trials, dtype=np.int64)
    backend = backend_for(cfg.trials)
    hit = _run_parts(
        lambda lo, hi: first_violation_samples(prop.pred, sets, thetas, lo, hi, k, backend),
        cfg.trials,
        cfg.workers,
    )
    if hit < 0:
        return -1, ()
    return hit, tuple(int(x) for x in sets[hit]) + (int(thetas[hit]),)


# -- public operations ---------------------------------------------------------------


def resolve_suite(name: str) -> str:
    key = SUITE_ALIASES.get(name, name)
    if key not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return key


def suite_properties(name: str) -> list[Property]:
    return list(SUITES[resolve_suite(name)])


def ensure_feasible(props, cfg: SearchConfig) -> None:
    if cfg.mode != "exhaustive":
        return
    for p in props:
        size = space_size(p, cfg.universe_size, cfg.grid_levels)
        if size > cfg.cap:
            raise SearchTooLarge(p.id, size, cfg.cap)


def check_relation_property(relation: str, prop: str, cfg: SearchConfig) -> AuditResult:
    return check(relation_property(relation, prop), cfg)


def run_suite(suite: str, cfg: SearchConfig) -> list[AuditResult]:
    props = suite_properties(suite)
    ensure_feasible(props, cfg)
    return [check(p, cfg) for p in props]


GRID_COLUMNS = tuple(AXIOMS)
GRID_ROWS = tuple(str(m) for m in range(1, 13)) + ("I",)


@dataclass(frozen=True)
class AxiomGrid:
    rows: tuple[str, ...]
    columns: tuple[str, ...]
    cells: dict

    def cell(self, row, column) -> AuditResult:
        return self.cells[(str(row), column)]

    def results(self) -> list[AuditResult]:
        return [self.cells[(r, c)] for r in self.rows for c in self.columns]


def grid_properties() -> dict:
    cells = {}
    for row in GRID_ROWS:
        for col in GRID_COLUMNS:
            cells[(row, col)] = vector_axiom(col) if row == "I" else scalar_axiom(col, int(row))
    return cells


def scalar_axiom_grid(cfg: SearchConfig) -> AxiomGrid:
    props = grid_properties()
    ensure_feasible(props.values(), cfg)
    return AxiomGrid(GRID_ROWS, GRID_COLUMNS, {key: check(p, cfg) for key, p in props.items()})


def find_transitivity_counterexample(measure: int, cfg: SearchConfig) -> AuditResult:
    """Smallest meet-transitivity violation for a scalar measure, if any is reachable.

    Universes of size 1..n and grids 1..g are searched exhaustively in that
    order (configurations above the cap are skipped).  No witness yields
    Inconclusive: the property quantifies over all fuzzy sets, not a grid.
    """
    prop = scalar_axiom("meet_transitive", measure)
    searched = []
    for n in range(1, cfg.universe_size + 1):
        for g in range(1, cfg.grid_levels + 1):
            size = space_size(prop, n, g)
            if size > cfg.cap:
                searched.append({"n": n, "g": g, "space": size, "skipped": True})
                continue
            hit, tup = _exhaustive_hit(prop, n, g, cfg.workers)
            searched.append({"n": n, "g": g, "space": size, "checked": size if hit < 0 else hit + 1})
            if hit >= 0:
                stats = {"mode": "exhaustive", "searched": searched, "witness_n": n, "witness_g": g}
                return AuditResult(prop.id, Verdict.REFUTED, _witness(prop, n, g, tup), stats, prop.theorem)
    stats = {
        "mode": "exhaustive",
        "searched": searched,
        "checked": sum(s.get("checked", 0) for s in searched),
    }
    return AuditResult(prop.id, Verdict.INCONCLUSIVE, None, stats, prop.theorem)
