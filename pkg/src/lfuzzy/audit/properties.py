"""Catalogue of checkable properties.

Each predicate has the signature ``(A, B, C, D, T, k)`` where ``A..D`` are
fuzzy sets, ``T`` is a crisp threshold and ``k`` the packed-integer context.
A predicate returns True when the property holds for that tuple.  Only the
helper names from :mod:`lfuzzy.audit.encoded` may appear in a body; the engine
rebinds them to run the same predicate vectorized, jitted, or on public
objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .encoded import (  # noqa: F401  (names are rebound per backend)
    bits, crisp, cut_leq, differ, dist, empty, eq_half, eqmask, full, ge_half,
    gt_half, iff, implies, incl, is_top, join, leq, mbetween, meet, ne_half,
    neg, obetween, one_zero, rel, req, rneg, rjoin, rle, rmeet, seq, seteq, sgt, sim,
    sle, smax, smin, sone, sval, symdiff, szero, top,
)


@dataclass(frozen=True)
class Property:
    id: str
    arity: int
    pred: Callable
    theta: bool = False
    sel: int = 0
    theorem: bool = True
    text: str = ""


# -- lattice laws ---------------------------------------------------------------


def distributive_meet(A, B, C, D, T, k):
    return seteq(meet(A, join(B, C, k), k), join(meet(A, B, k), meet(A, C, k), k), k)


def distributive_join(A, B, C, D, T, k):
    return seteq(join(A, meet(B, C, k), k), meet(join(A, B, k), join(A, C, k), k), k)


def de_morgan_meet(A, B, C, D, T, k):
    return seteq(neg(meet(A, B, k), k), join(neg(A, k), neg(B, k), k), k)


def de_morgan_join(A, B, C, D, T, k):
    return seteq(neg(join(A, B, k), k), meet(neg(A, k), neg(B, k), k), k)


def involution(A, B, C, D, T, k):
    return seteq(neg(neg(A, k), k), A, k)


def order_inverting(A, B, C, D, T, k):
    return implies(leq(A, B, k), leq(neg(B, k), neg(A, k), k))


def absorption(A, B, C, D, T, k):
    return seteq(meet(A, join(A, B, k), k), A, k) & seteq(join(A, meet(A, B, k), k), A, k)


def commutative(A, B, C, D, T, k):
    return seteq(meet(A, B, k), meet(B, A, k), k) & seteq(join(A, B, k), join(B, A, k), k)


def associative(A, B, C, D, T, k):
    return seteq(meet(A, meet(B, C, k), k), meet(meet(A, B, k), C, k), k) & seteq(
        join(A, join(B, C, k), k), join(join(A, B, k), C, k), k
    )


def bounded(A, B, C, D, T, k):
    return seteq(meet(A, top(A, k), k), A, k) & seteq(join(A, neg(top(A, k), k), k), A, k)


def crisp_closed(A, B, C, D, T, k):
    return implies(
        crisp(A, k) & crisp(B, k),
        crisp(meet(A, B, k), k) & crisp(join(A, B, k), k) & crisp(neg(A, k), k),
    )


# -- generic relation properties (relation chosen by k[2]) ----------------------


def reflexive(A, B, C, D, T, k):
    return full(rel(A, A, k), k)


def symmetric(A, B, C, D, T, k):
    return req(rel(A, B, k), rel(B, A, k))


def antisymmetric(A, B, C, D, T, k):
    # R(A,B) = R(B,A) > 0  =>  A = B
    return implies(req(rel(A, B, k), rel(B, A, k)), empty(rel(A, B, k), k) | seteq(A, B, k))


def meet_transitive(A, B, C, D, T, k):
    return rle(rmeet(rel(A, C, k), rel(C, B, k)), rel(A, B, k))


def join_transitive(A, B, C, D, T, k):
    return rle(rel(A, B, k), rjoin(rel(A, C, k), rel(C, B, k)))


# -- inclusion -------------------------------------------------------------------


def I1(A, B, C, D, T, k):
    return iff(full(incl(A, B, k), k), leq(A, B, k)) & iff(empty(incl(A, B, k), k), sgt(A, B, k))


def I2(A, B, C, D, T, k):
    return iff(empty(incl(A, neg(A, k), k), k), gt_half(A, k))


def I3(A, B, C, D, T, k):
    return req(incl(A, B, k), incl(neg(B, k), neg(A, k), k))


def I4(A, B, C, D, T, k):
    return full(rjoin(incl(A, B, k), incl(B, A, k)), k)


def I5(A, B, C, D, T, k):
    return implies(leq(B, C, k), rle(incl(A, B, k), incl(A, C, k)))


def I6(A, B, C, D, T, k):
    return implies(leq(B, C, k), rle(incl(C, A, k), incl(B, A, k)))


def I7(A, B, C, D, T, k):
    low = incl(meet(A, C, k), meet(B, D, k), k)
    high = incl(join(A, C, k), join(B, D, k), k)
    return (
        rle(rmeet(incl(A, B, k), incl(C, D, k)), rmeet(low, high))
        & rle(rmeet(low, high), rjoin(low, high))
        & rle(rjoin(low, high), rjoin(incl(A, B, k), incl(C, D, k)))
    )


def I8(A, B, C, D, T, k):
    return req(incl(join(A, B, k), C, k), rmeet(incl(A, C, k), incl(B, C, k)))


def I9(A, B, C, D, T, k):
    return req(incl(meet(A, B, k), C, k), rjoin(incl(A, C, k), incl(B, C, k)))


def I10(A, B, C, D, T, k):
    return req(incl(A, join(B, C, k), k), rjoin(incl(A, B, k), incl(A, C, k)))


def I11(A, B, C, D, T, k):
    return req(incl(A, meet(B, C, k), k), rmeet(incl(A, B, k), incl(A, C, k)))


def I12(A, B, C, D, T, k):
    return rle(incl(A, B, k), rmeet(incl(meet(A, C, k), meet(B, C, k), k), incl(join(A, C, k), join(B, C, k), k)))


# -- similarity ------------------------------------------------------------------


def sim_pointwise(A, B, C, D, T, k):
    return req(sim(A, B, k), eqmask(A, B, k))


def S1(A, B, C, D, T, k):
    return iff(full(sim(A, B, k), k), seteq(A, B, k)) & implies(empty(sim(A, B, k), k), differ(A, B, k))


def S2a(A, B, C, D, T, k):
    return iff(empty(sim(A, neg(A, k), k), k), ne_half(A, k))


def S2b(A, B, C, D, T, k):
    return iff(full(sim(A, neg(A, k), k), k), eq_half(A, k))


def S3(A, B, C, D, T, k):
    return req(sim(A, B, k), sim(neg(A, k), neg(B, k), k))


def S4(A, B, C, D, T, k):
    ab = sim(A, B, k)
    bc = sim(B, C, k)
    ac = sim(A, C, k)
    return implies(leq(A, B, k) & leq(B, C, k), rle(ac, ab) & rle(ac, bc) & req(ac, rmeet(ab, bc)))


def S5(A, B, C, D, T, k):
    low = rmeet(sim(A, B, k), sim(C, D, k))
    return rle(low, sim(join(A, C, k), join(B, D, k), k)) & rle(low, sim(meet(A, C, k), meet(B, D, k), k))


def S6(A, B, C, D, T, k):
    low = rmeet(sim(A, B, k), sim(A, C, k))
    return rle(low, sim(A, join(B, C, k), k)) & rle(low, sim(A, meet(B, C, k), k))


def S7(A, B, C, D, T, k):
    high = rjoin(sim(A, C, k), sim(B, C, k))
    return rle(sim(join(A, B, k), C, k), high) & rle(sim(meet(A, B, k), C, k), high)


def S8(A, B, C, D, T, k):
    ab = sim(A, B, k)
    return rle(ab, sim(join(A, C, k), join(B, C, k), k)) & rle(ab, sim(meet(A, C, k), meet(B, C, k), k))


def S9a(A, B, C, D, T, k):
    return req(sim(A, join(A, B, k), k), sim(B, meet(A, B, k), k))


def S9b(A, B, C, D, T, k):
    return req(sim(A, meet(A, B, k), k), sim(B, join(A, B, k), k))


def S10_pair(A, B, C, D, T, k):
    lo = meet(A, B, k)
    hi = join(A, B, k)
    q = (
        sim(A, B, k),
        rmeet(sim(lo, A, k), sim(A, hi, k)),
        rmeet(sim(lo, B, k), sim(B, hi, k)),
        sim(lo, hi, k),
        rmeet(sim(A, hi, k), sim(B, hi, k)),
        rmeet(sim(A, lo, k), sim(B, lo, k)),
    )
    return req(q[k[2] // 6], q[k[2] % 6])


# -- distance --------------------------------------------------------------------


def dist_pointwise(A, B, C, D, T, k):
    return req(dist(A, B, k), rneg(eqmask(A, B, k), k))


def D1(A, B, C, D, T, k):
    return iff(empty(dist(A, B, k), k), seteq(A, B, k))


def D2a(A, B, C, D, T, k):
    return iff(full(dist(A, neg(A, k), k), k), ne_half(A, k))


def D2b(A, B, C, D, T, k):
    return iff(empty(dist(A, neg(A, k), k), k), eq_half(A, k))


def D3(A, B, C, D, T, k):
    return req(dist(A, B, k), dist(neg(A, k), neg(B, k), k))


def D4(A, B, C, D, T, k):
    ab = dist(A, B, k)
    bc = dist(B, C, k)
    ac = dist(A, C, k)
    return implies(leq(A, B, k) & leq(B, C, k), rle(ab, ac) & rle(bc, ac) & req(ac, rjoin(ab, bc)))


def D5(A, B, C, D, T, k):
    # D plays the role of the fourth set E
    high = rjoin(dist(A, B, k), dist(C, D, k))
    return rle(dist(join(A, C, k), join(B, D, k), k), high) & rle(dist(meet(A, C, k), meet(B, D, k), k), high)


def D6(A, B, C, D, T, k):
    high = rjoin(dist(A, B, k), dist(A, C, k))
    return rle(dist(A, join(B, C, k), k), high) & rle(dist(A, meet(B, C, k), k), high)


def D7(A, B, C, D, T, k):
    low = rmeet(dist(A, C, k), dist(B, C, k))
    return rle(low, dist(join(A, B, k), C, k)) & rle(low, dist(meet(A, B, k), C, k))


def D8(A, B, C, D, T, k):
    ab = dist(A, B, k)
    return rle(dist(join(A, C, k), join(B, C, k), k), ab) & rle(dist(meet(A, C, k), meet(B, C, k), k), ab)


def D9a(A, B, C, D, T, k):
    return req(dist(A, join(A, B, k), k), dist(B, meet(A, B, k), k))


def D9b(A, B, C, D, T, k):
    return req(dist(A, meet(A, B, k), k), dist(B, join(A, B, k), k))


def D10_pair(A, B, C, D, T, k):
    lo = meet(A, B, k)
    hi = join(A, B, k)
    q = (
        dist(A, B, k),
        rjoin(dist(lo, A, k), dist(A, hi, k)),
        rjoin(dist(lo, B, k), dist(B, hi, k)),
        dist(lo, hi, k),
        rjoin(dist(A, hi, k), dist(B, hi, k)),
        rjoin(dist(A, lo, k), dist(B, lo, k)),
    )
    return req(q[k[2] // 6], q[k[2] % 6])


def dist_zero_iff_equal(A, B, C, D, T, k):
    return iff(empty(dist(A, B, k), k), seteq(A, B, k))


def dist_triangle(A, B, C, D, T, k):
    return rle(dist(A, B, k), rjoin(dist(A, C, k), dist(C, B, k)))


def crisp_symmetric_difference(A, B, C, D, T, k):
    return implies(crisp(A, k) & crisp(B, k), req(dist(A, B, k), symdiff(A, B, k)))


# -- thresholds and cuts ---------------------------------------------------------


def incl_threshold(A, B, C, D, T, k):
    return implies(
        rle(T, incl(A, B, k)),
        rle(T, rmeet(incl(meet(A, C, k), meet(B, C, k), k), incl(join(A, C, k), join(B, C, k), k))),
    )


def sim_threshold_join(A, B, C, D, T, k):
    return implies(rle(T, sim(A, B, k)), rle(T, sim(join(A, C, k), join(B, C, k), k)))


def sim_threshold_meet(A, B, C, D, T, k):
    return implies(rle(T, sim(A, B, k)), rle(T, sim(meet(A, C, k), meet(B, C, k), k)))


def sim_threshold_cancel(A, B, C, D, T, k):
    return implies(
        req(sim(meet(A, C, k), meet(B, C, k), k), T) & req(sim(join(A, C, k), join(B, C, k), k), T),
        req(sim(A, B, k), T),
    )


def dist_threshold_join(A, B, C, D, T, k):
    return implies(rle(dist(A, B, k), T), rle(dist(join(A, C, k), join(B, C, k), k), T))


def dist_threshold_meet(A, B, C, D, T, k):
    return implies(rle(dist(A, B, k), T), rle(dist(meet(A, C, k), meet(B, C, k), k), T))


def dist_threshold_cancel(A, B, C, D, T, k):
    return implies(
        req(dist(meet(A, C, k), meet(B, C, k), k), T) & req(dist(join(A, C, k), join(B, C, k), k), T),
        req(dist(A, B, k), T),
    )


def cut_reflexive(A, B, C, D, T, k):
    return cut_leq(A, A, T, k)


def cut_transitive(A, B, C, D, T, k):
    return implies(cut_leq(A, B, T, k) & cut_leq(B, C, T, k), cut_leq(A, C, T, k))


def cut_equality_reflexive(A, B, C, D, T, k):
    # the "incl(A, B) == T" reading of the cut
    return req(incl(A, A, k), T)


# -- betweenness -----------------------------------------------------------------


def order_implies_metric(A, B, C, D, T, k):
    return implies(obetween(A, B, C, k), mbetween(A, B, C, k))


def metric_implies_order(A, B, C, D, T, k):
    return implies(mbetween(A, B, C, k), obetween(A, B, C, k))


def crisp_betweenness(A, B, C, D, T, k):
    return implies(crisp(A, k) & crisp(B, k) & crisp(C, k), iff(mbetween(A, B, C, k), obetween(A, B, C, k)))


# -- scalar-measure axioms (measure chosen by k[2]) -------------------------------


def i1(A, B, C, D, T, k):
    return iff(leq(A, B, k), sone(sval(A, B, k)))


def i2a(A, B, C, D, T, k):
    return iff(szero(sval(A, neg(A, k), k)), crisp(A, k))


def i2b(A, B, C, D, T, k):
    return implies(ge_half(A, k), iff(szero(sval(A, neg(A, k), k)), is_top(A, k)))


def i3(A, B, C, D, T, k):
    return seq(sval(A, B, k), sval(neg(B, k), neg(A, k), k))


def i4a(A, B, C, D, T, k):
    return implies(leq(B, C, k), sle(sval(A, B, k), sval(A, C, k)))


def i4b(A, B, C, D, T, k):
    return implies(leq(B, C, k) & leq(C, A, k), sle(sval(A, B, k), sval(A, C, k)))


def i5a(A, B, C, D, T, k):
    return implies(leq(B, C, k), sle(sval(C, A, k), sval(B, A, k)))


def i5b(A, B, C, D, T, k):
    return implies(leq(A, B, k) & leq(B, C, k), sle(sval(C, A, k), sval(B, A, k)))


def i6(A, B, C, D, T, k):
    return seq(sval(join(A, B, k), C, k), smin(sval(A, C, k), sval(B, C, k)))


def i7(A, B, C, D, T, k):
    return sle(smax(sval(A, C, k), sval(B, C, k)), sval(meet(A, B, k), C, k))


def i8(A, B, C, D, T, k):
    return sle(smax(sval(A, B, k), sval(A, C, k)), sval(A, join(B, C, k), k))


def i9(A, B, C, D, T, k):
    return seq(sval(A, meet(B, C, k), k), smin(sval(A, B, k), sval(A, C, k)))


def i10(A, B, C, D, T, k):
    return iff(szero(sval(A, B, k)), one_zero(A, B, k))


def scalar_meet_transitive(A, B, C, D, T, k):
    return sle(smin(sval(A, C, k), sval(C, B, k)), sval(A, B, k))


# -- registry --------------------------------------------------------------------

ROMAN = ("i", "ii", "iii", "iv", "v", "vi")

RELATION_CODES = {"incl": 0, "sim": 1, "dist": 2}

RELATION_PROPERTIES = {
    "reflexive": (reflexive, 1),
    "symmetric": (symmetric, 2),
    "antisymmetric": (antisymmetric, 2),
    "meet_transitive": (meet_transitive, 3),
    "join_transitive": (join_transitive, 3),
}

# (relation, property) pairs the theory asserts; the rest are recorded only
ASSERTED_RELATION_PROPERTIES = {
    ("incl", "reflexive"), ("incl", "antisymmetric"), ("incl", "meet_transitive"),
    ("sim", "reflexive"), ("sim", "symmetric"), ("sim", "meet_transitive"),
    ("dist", "symmetric"), ("dist", "join_transitive"),
}


def relation_property(relation: str, name: str) -> Property:
    if relation not in RELATION_CODES:
        raise ValueError(f"unknown relation {relation!r}; choose from {sorted(RELATION_CODES)}")
    if name not in RELATION_PROPERTIES:
        raise ValueError(f"unknown relation property {name!r}; choose from {sorted(RELATION_PROPERTIES)}")
    pred, arity = RELATION_PROPERTIES[name]
    return Property(
        id=f"{relation}.{name}",
        arity=arity,
        pred=pred,
        sel=RELATION_CODES[relation],
        theorem=(relation, name) in ASSERTED_RELATION_PROPERTIES,
    )


def _pairs(prefix, pred, joiner):
    out = []
    for i in range(6):
        for j in range(i + 1, 6):
            out.append(
                Property(
                    f"{prefix}.{ROMAN[i]}={ROMAN[j]}", 2, pred, sel=6 * i + j,
                    text=f"quantity ({ROMAN[i]}) equals quantity ({ROMAN[j]}) [{joiner}]",
                )
            )
    return out


SUITES: dict[str, list[Property]] = {
    "lattice_laws": [
        Property("lattice.distributive_meet", 3, distributive_meet),
        Property("lattice.distributive_join", 3, distributive_join),
        Property("lattice.de_morgan_meet", 2, de_morgan_meet),
        Property("lattice.de_morgan_join", 2, de_morgan_join),
        Property("lattice.involution", 1, involution),
        Property("lattice.order_inverting", 2, order_inverting),
        Property("lattice.absorption", 2, absorption),
        Property("lattice.commutative", 2, commutative),
        Property("lattice.associative", 3, associative),
        Property("lattice.bounded", 1, bounded),
        Property("lattice.crisp_closed", 2, crisp_closed),
    ],
    "relation_structure": [
        relation_property("incl", "reflexive"),
        relation_property("incl", "antisymmetric"),
        relation_property("incl", "meet_transitive"),
        Property("sim.pointwise", 2, sim_pointwise),
        relation_property("sim", "reflexive"),
        relation_property("sim", "symmetric"),
        relation_property("sim", "meet_transitive"),
        Property("dist.pointwise", 2, dist_pointwise),
        Property("dist.zero_iff_equal", 2, dist_zero_iff_equal),
        relation_property("dist", "symmetric"),
        Property("dist.triangle", 3, dist_triangle),
        Property("dist.crisp_symmetric_difference", 2, crisp_symmetric_difference),
    ],
    "inclusion_I1_I12": [
        Property("I1", 2, I1), Property("I2", 1, I2), Property("I3", 2, I3),
        Property("I4", 2, I4), Property("I5", 3, I5), Property("I6", 3, I6),
        Property("I7", 4, I7), Property("I8", 3, I8), Property("I9", 3, I9),
        Property("I10", 3, I10), Property("I11", 3, I11), Property("I12", 3, I12),
    ],
    "similarity_S1_S10": [
        Property("S1", 2, S1), Property("S2a", 1, S2a), Property("S2b", 1, S2b),
        Property("S3", 2, S3), Property("S4", 3, S4), Property("S5", 4, S5),
        Property("S6", 3, S6), Property("S7", 3, S7), Property("S8", 3, S8),
        Property("S9a", 2, S9a), Property("S9b", 2, S9b),
        *_pairs("S10", S10_pair, "meet"),
    ],
    "distance_D1_D10": [
        Property("D1", 2, D1), Property("D2a", 1, D2a), Property("D2b", 1, D2b),
        Property("D3", 2, D3), Property("D4", 3, D4), Property("D5", 4, D5),
        Property("D6", 3, D6), Property("D7", 3, D7), Property("D8", 3, D8),
        Property("D9a", 2, D9a), Property("D9b", 2, D9b),
        *_pairs("D10", D10_pair, "join"),
    ],
    "thresholds": [
        Property("incl.threshold", 3, incl_threshold, theta=True),
        Property("sim.threshold_join", 3, sim_threshold_join, theta=True),
        Property("sim.threshold_meet", 3, sim_threshold_meet, theta=True),
        Property("sim.threshold_cancel", 3, sim_threshold_cancel, theta=True),
        Property("dist.threshold_join", 3, dist_threshold_join, theta=True),
        Property("dist.threshold_meet", 3, dist_threshold_meet, theta=True),
        Property("dist.threshold_cancel", 3, dist_threshold_cancel, theta=True),
        Property("cut.reflexive", 1, cut_reflexive, theta=True),
        Property("cut.transitive", 3, cut_transitive, theta=True),
        Property(
            "cut.equality_reading_reflexive", 1, cut_equality_reflexive, theta=True, theorem=False,
            text="the incl(A,B) == T reading of the cut is not reflexive",
        ),
    ],
    "betweenness": [
        Property("between.order_implies_metric", 3, order_implies_metric),
        Property(
            "between.metric_implies_order", 3, metric_implies_order, theorem=False,
            text="fails for fuzzy sets; see between.crisp_equivalence",
        ),
        Property("between.crisp_equivalence", 3, crisp_betweenness),
    ],
}

SUITE_ALIASES = {name.replace("_", "-"): name for name in SUITES}

AXIOMS = {
    "i1": (i1, 2), "i2a": (i2a, 1), "i2b": (i2b, 1), "i3": (i3, 2),
    "i4a": (i4a, 3), "i4b": (i4b, 3), "i5a": (i5a, 3), "i5b": (i5b, 3),
    "i6": (i6, 3), "i7": (i7, 3), "i8": (i8, 3), "i9": (i9, 3),
    "i10": (i10, 2), "meet_transitive": (scalar_meet_transitive, 3),
}

# column -> the lattice-valued inclusion property it corresponds to
VECTOR_COUNTERPART = {
    "i1": ("I1", I1, 2), "i2a": ("I2", I2, 1), "i2b": ("I2", I2, 1), "i3": ("I3", I3, 2),
    "i4a": ("I5", I5, 3), "i4b": ("I5", I5, 3), "i5a": ("I6", I6, 3), "i5b": ("I6", I6, 3),
    "i6": ("I8", I8, 3), "i7": ("I9", I9, 3), "i8": ("I10", I10, 3), "i9": ("I11", I11, 3),
    "i10": ("I1", I1, 2), "meet_transitive": ("incl.meet_transitive", meet_transitive, 3),
}


def scalar_axiom(axiom: str, measure: int) -> Property:
    pred, arity = AXIOMS[axiom]
    # measure 12 is the one scalar measure claimed to be meet-transitive
    asserted = axiom == "meet_transitive" and measure == 12
    return Property(f"{axiom}@measure{measure}", arity, pred, sel=measure, theorem=asserted)


def vector_axiom(axiom: str) -> Property:
    name, pred, arity = VECTOR_COUNTERPART[axiom]
    return Property(f"{axiom}@I={name}", arity, pred, sel=0)


def all_properties() -> dict[str, Property]:
    out = {}
    for props in SUITES.values():
        for p in props:
            out[p.id] = p
    for rel in RELATION_CODES:
        for name in RELATION_PROPERTIES:
            p = relation_property(rel, name)
            out[p.id] = p
    for axiom in AXIOMS:
        for m in range(1, 13):
            p = scalar_axiom(axiom, m)
            out[p.id] = p
        p = vector_axiom(axiom)
        out[p.id] = p
    return out
