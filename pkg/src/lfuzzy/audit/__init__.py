"""Property verification over finite grids of fuzzy sets."""

from .engine import (
    AuditResult,
    AxiomGrid,
    SearchConfig,
    SearchTooLarge,
    Verdict,
    check,
    check_relation_property,
    find_transitivity_counterexample,
    run_suite,
    scalar_axiom_grid,
)

__all__ = [
    "AuditResult",
    "AxiomGrid",
    "SearchConfig",
    "SearchTooLarge",
    "Verdict",
    "check",
    "check_relation_property",
    "find_transitivity_counterexample",
    "run_suite",
    "scalar_axiom_grid",
]
