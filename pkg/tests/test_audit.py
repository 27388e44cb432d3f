import itertools
import json
from fractions import Fraction as F

import pytest

import oracles
from lfuzzy.audit import encoded
from lfuzzy.audit.backend import public_predicate
from lfuzzy.audit.engine import (
    SearchConfig,
    SearchTooLarge,
    Verdict,
    _exhaustive_hit,
    check,
    check_relation_property,
    estimate,
    find_transitivity_counterexample,
    replay,
    run_suite,
    scalar_axiom_grid,
    space_size,
    suite_properties,
)
from lfuzzy.audit.properties import RELATION_PROPERTIES, SUITES, all_properties, scalar_axiom
from lfuzzy.audit.report import grid_csv, results_json
from lfuzzy.lattice import CrispSet, FuzzySet, Universe, grid_sets

THEOREM_SUITES = [s for s in SUITES]

RELATION_VERDICTS = {
    ("incl", "reflexive"): "Holds",
    ("incl", "symmetric"): "Refuted",
    ("incl", "antisymmetric"): "Holds",
    ("incl", "meet_transitive"): "Holds",
    ("incl", "join_transitive"): "Holds",
    ("sim", "reflexive"): "Holds",
    ("sim", "symmetric"): "Holds",
    ("sim", "antisymmetric"): "Refuted",
    ("sim", "meet_transitive"): "Holds",
    ("sim", "join_transitive"): "Refuted",
    ("dist", "reflexive"): "Refuted",
    ("dist", "symmetric"): "Holds",
    ("dist", "antisymmetric"): "Refuted",
    ("dist", "meet_transitive"): "Refuted",
    ("dist", "join_transitive"): "Holds",
}


def witness_sets(w):
    U = Universe(tuple(w["universe"]))
    return {name: FuzzySet(U, grades) for name, grades in w["sets"].items()}


# -- suites ------------------------------------------------------------------------


@pytest.mark.parametrize("n, g", [(2, 2), (2, 4), (1, 4), (3, 2)])
@pytest.mark.parametrize("suite", THEOREM_SUITES)
def test_theorem_suites_hold_exhaustively(suite, n, g):
    for r in run_suite(suite, SearchConfig(n, g)):
        if r.theorem:
            assert r.verdict is Verdict.HOLDS, (r.property_id, r.witness)
            assert r.stats["checked"] == r.stats["space"]


def test_theorem_suites_hold_at_three_elements_within_cap():
    cfg = SearchConfig(3, 4)
    for suite in THEOREM_SUITES:
        for p in suite_properties(suite):
            if p.theorem and space_size(p, 3, 4) <= cfg.cap:
                assert check(p, cfg).verdict is Verdict.HOLDS, p.id


@pytest.mark.slow
def test_four_set_properties_hold_at_three_elements():
    # (g+1)^(4n) = 244,140,625 tuples each; above the default cap, so raise it
    cfg = SearchConfig(3, 4, max_tuples=3 * 10**8)
    big = [p for s in THEOREM_SUITES for p in suite_properties(s) if space_size(p, 3, 4) > 10**8]
    assert sorted(p.id for p in big) == ["D5", "I7", "S5"]
    for p in big:
        assert check(p, cfg).verdict is Verdict.HOLDS, p.id


def test_inclusion_suite_has_twelve_properties():
    ids = [r.property_id for r in run_suite("inclusion_I1_I12", SearchConfig(2, 2))]
    assert ids == [f"I{i}" for i in range(1, 13)]


def test_s10_and_d10_cover_all_pairs():
    ids = [p.id for p in suite_properties("similarity_S1_S10") if p.id.startswith("S10")]
    assert len(ids) == 15 and "S10.iv=v" in ids
    assert len([p for p in suite_properties("distance_D1_D10") if p.id.startswith("D10")]) == 15


def test_suite_aliases():
    assert [p.id for p in suite_properties("inclusion-I1-I12")] == [p.id for p in suite_properties("inclusion_I1_I12")]
    with pytest.raises(ValueError, match="unknown suite"):
        suite_properties("nonsense")


def test_thresholds_suite_records_equality_reading():
    res = {r.property_id: r for r in run_suite("thresholds", SearchConfig(2, 2))}
    eq = res["cut.equality_reading_reflexive"]
    assert not eq.theorem and eq.verdict is Verdict.REFUTED
    assert eq.witness == {"n": 1, "g": 1, "universe": ["1"], "sets": {"A": ["0"]}, "theta": "0"}
    assert res["cut.reflexive"].verdict is Verdict.HOLDS and res["cut.transitive"].verdict is Verdict.HOLDS


def test_betweenness_suite():
    res = {r.property_id: r for r in run_suite("betweenness", SearchConfig(2, 4))}
    assert res["between.order_implies_metric"].verdict is Verdict.HOLDS
    assert res["between.crisp_equivalence"].verdict is Verdict.HOLDS
    conv = res["between.metric_implies_order"]
    assert conv.verdict is Verdict.REFUTED and not conv.theorem
    assert conv.witness["sets"] == {"A": ["0"], "B": ["1"], "C": ["1/2"]}
    s = witness_sets(conv.witness)
    a, b, c = (list(s[x].grades) for x in "ABC")
    # the violation by hand
    assert oracles.dist(a, c) == [max(x, y) for x, y in zip(oracles.dist(a, b), oracles.dist(b, c))]
    assert not oracles.leq(b, oracles.join(a, c))


def test_crisp_betweenness_at_g1():
    res = {r.property_id: r for r in run_suite("betweenness", SearchConfig(4, 1))}
    assert res["between.metric_implies_order"].verdict is Verdict.HOLDS
    assert res["between.crisp_equivalence"].verdict is Verdict.HOLDS


# -- relation properties --------------------------------------------------------------


@pytest.mark.parametrize("relation, prop", sorted(RELATION_VERDICTS))
def test_relation_property_verdicts(relation, prop):
    r = check_relation_property(relation, prop, SearchConfig(2, 2))
    assert r.verdict.value == RELATION_VERDICTS[(relation, prop)]
    assert r.property_id == f"{relation}.{prop}"
    if r.verdict is Verdict.REFUTED:
        assert r.witness is not None and r.witness["n"] <= 2


def test_incl_symmetry_witness_is_minimal():
    r = check_relation_property("incl", "symmetric", SearchConfig(2, 2))
    assert r.witness == {"n": 1, "g": 1, "universe": ["1"], "sets": {"A": ["0"], "B": ["1"]}}


def test_unknown_relation_property():
    with pytest.raises((KeyError, ValueError)):
        check_relation_property("incl", "transitive-ish", SearchConfig(1, 1))


# -- the kernels agree with a plain enumeration ----------------------------------------


def brute_first_violation(prop, n, g):
    U = Universe.of_size(n)
    sets = list(grid_sets(U, g))
    k = encoded.context(g, n, prop.sel)
    pred = public_predicate(prop.pred)
    for tup in itertools.product(*([sets] * prop.arity)):
        for t_idx in range(2**n) if prop.theta else [0]:
            # theta index t has bit u = element u
            theta = CrispSet(U, [(t_idx >> u) & 1 for u in range(n)]) if prop.theta else None
            args = list(tup) + [None] * (4 - prop.arity)
            if not pred(*args, theta, k):
                return tup, t_idx
    return None


@pytest.mark.parametrize("n, g", [(1, 2), (2, 1)])
def test_packed_search_matches_public_enumeration(n, g):
    for p in all_properties().values():
        if space_size(p, n, g) > 20_000:
            continue
        hit, tup = _exhaustive_hit(p, n, g, 1)
        want = brute_first_violation(p, n, g)
        if want is None:
            assert hit == -1, p.id
            continue
        assert hit >= 0, p.id
        k = encoded.context(g, n, p.sel)
        got = [[F(x, g) for x in encoded.unpack_code(c, k)] for c in tup[: p.arity]]
        assert got == [list(S.grades) for S in want[0]], p.id
        if p.theta:
            assert tup[4] == want[1], p.id


def test_refuted_witnesses_replay():
    cfg = SearchConfig(2, 2)
    for p in all_properties().values():
        r = check(p, cfg)
        if r.verdict is Verdict.REFUTED:
            w = r.witness
            sets = list(witness_sets(w).values())
            theta = CrispSet.from_bits(sets[0].universe, w["theta"]) if "theta" in w else None
            assert not replay(p, sets, theta, w["n"], w["g"]), p.id


# -- random mode -------------------------------------------------------------------------


def test_random_mode_never_claims_holds():
    cfg = SearchConfig(4, 10, mode="random", trials=2000, seed=7)
    for r in run_suite("inclusion_I1_I12", cfg):
        assert r.verdict is Verdict.INCONCLUSIVE
        assert r.stats["checked"] == 2000


def test_random_mode_finds_and_minimises_refutations():
    cfg = SearchConfig(4, 10, mode="random", trials=5000, seed=1)
    r = check_relation_property("incl", "symmetric", cfg)
    assert r.verdict is Verdict.REFUTED
    assert r.witness["n"] == 1 and r.witness["g"] == 1


def test_random_mode_is_seeded():
    a = run_suite("betweenness", SearchConfig(3, 6, mode="random", trials=3000, seed=5))
    b = run_suite("betweenness", SearchConfig(3, 6, mode="random", trials=3000, seed=5))
    assert results_json(a) == results_json(b)


# -- caps and determinism -----------------------------------------------------------------


def test_size_cap_reports_estimate():
    cfg = SearchConfig(3, 4, max_tuples=1000)
    with pytest.raises(SearchTooLarge) as err:
        run_suite("inclusion_I1_I12", cfg)
    assert err.value.estimate > 1000
    assert f"{err.value.estimate:,}" in str(err.value)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("LFUZZY_MAX_TRIPLES", "50")
    with pytest.raises(SearchTooLarge):
        run_suite("lattice_laws", SearchConfig(2, 2))
    monkeypatch.setenv("LFUZZY_MAX_TRIPLES", "100000")
    run_suite("lattice_laws", SearchConfig(2, 2))


def test_estimate_counts_tuples():
    props = suite_properties("inclusion_I1_I12")
    assert estimate(props, SearchConfig(2, 2)) == sum((3**2) ** p.arity for p in props)


@pytest.mark.parametrize(
    "kwargs",
    [dict(universe_size=0), dict(grid_levels=0), dict(mode="sampled"), dict(trials=0), dict(workers=0), dict(seed=-1), dict(universe_size=8, grid_levels=255)],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)


@pytest.mark.parametrize("suite", ["thresholds", "relation_structure", "betweenness"])
def test_worker_count_does_not_change_results(suite):
    one = results_json(run_suite(suite, SearchConfig(2, 3, workers=1)))
    for w in (2, 5):
        assert results_json(run_suite(suite, SearchConfig(2, 3, workers=w))) == one
    rnd = [results_json(run_suite(suite, SearchConfig(3, 5, mode="random", trials=4000, seed=3, workers=w))) for w in (1, 4)]
    assert rnd[0] == rnd[1]


# -- scalar measures -------------------------------------------------------------------


@pytest.fixture(scope="module")
def grid():
    return scalar_axiom_grid(SearchConfig(2, 4))


def test_vector_row_holds_everywhere(grid):
    for col in grid.columns:
        assert grid.cell("I", col).verdict is Verdict.HOLDS, col


def test_kundu_is_the_transitive_one(grid):
    assert grid.cell(12, "meet_transitive").verdict is Verdict.HOLDS
    for m in range(1, 12):
        assert grid.cell(m, "meet_transitive").verdict is Verdict.REFUTED


def test_grid_i1_column(grid):
    held = {m for m in range(1, 13) if grid.cell(m, "i1").verdict is Verdict.HOLDS}
    assert held == {1, 2, 3, 4, 5, 6, 9, 12}


def test_grid_cells_replay(grid):
    for (row, col), r in grid.cells.items():
        if r.verdict is Verdict.REFUTED:
            p = scalar_axiom(col, int(row))
            w = r.witness
            assert not replay(p, list(witness_sets(w).values()), None, w["n"], w["g"])


def test_grid_csv_shape(grid):
    lines = grid_csv(grid).strip().splitlines()
    assert lines[0].split(",")[0] == "measure" and len(lines[0].split(",")) == 15
    assert [ln.split(",")[0] for ln in lines[1:]] == [str(m) for m in range(1, 13)] + ["I"]


def test_transitivity_search_for_kosko():
    r = find_transitivity_counterexample(1, SearchConfig(2, 4))
    assert r.verdict is Verdict.REFUTED
    s = witness_sets(r.witness)
    a, b, c = (list(s[x].grades) for x in "ABC")
    assert oracles.scalar(1, a, b) < min(oracles.scalar(1, a, c), oracles.scalar(1, c, b))


def test_transitivity_search_for_kundu_is_inconclusive():
    r = find_transitivity_counterexample(12, SearchConfig(2, 4))
    assert r.verdict is Verdict.INCONCLUSIVE and r.witness is None
    assert r.stats["checked"] == sum(s["space"] for s in r.stats["searched"])
    assert [(s["n"], s["g"]) for s in r.stats["searched"]][-1] == (2, 4)


@pytest.mark.parametrize("m", range(1, 12))
def test_transitivity_search_reports_something(m):
    r = find_transitivity_counterexample(m, SearchConfig(2, 4))
    assert r.verdict in (Verdict.REFUTED, Verdict.INCONCLUSIVE)
    if r.verdict is Verdict.INCONCLUSIVE:
        assert r.stats["searched"]
    json.dumps(r.to_dict())
