"""The property helpers bound to the public :mod:`lfuzzy` objects.

Properties are evaluated on packed integers during search; a witness is then
replayed through these bindings, which only call the public API on
``FuzzySet``/``CrispSet``/``Fraction`` values.
"""

from fractions import Fraction

from .. import lattice as L
from .. import relations as R
from ..scalar import eval_scalar

_REL = (R.incl, R.sim, R.dist)


def _full(x):
    return all(b == 1 for b in x.grades)


def _empty(x):
    return all(b == 0 for b in x.grades)


NAMESPACE = {
    "digit": lambda a, u, k: a.grades[u],
    "pick": lambda c, p, q: p if c else q,
    "fullmask": lambda k: None,
    "top": lambda a, k: L.FuzzySet.ones(a.universe),
    "meet": lambda a, b, k: L.meet(a, b),
    "join": lambda a, b, k: L.join(a, b),
    "neg": lambda a, k: L.complement(a),
    "incl": lambda a, b, k: R.incl(a, b),
    "sim": lambda a, b, k: R.sim(a, b),
    "dist": lambda a, b, k: R.dist(a, b),
    "rel": lambda a, b, k: _REL[k[2]](a, b),
    "eqmask": lambda a, b, k: L.CrispSet(a.universe, [int(x == y) for x, y in zip(a.grades, b.grades)]),
    "bits": lambda a, k: L.CrispSet.from_fuzzy(a),
    "rmeet": L.meet,
    "rjoin": L.join,
    "rneg": lambda x, k: L.complement(x),
    "req": lambda x, y: x == y,
    "rle": L.leq,
    "full": lambda x, k: _full(x),
    "empty": lambda x, k: _empty(x),
    "leq": lambda a, b, k: L.leq(a, b),
    "seteq": lambda a, b, k: a == b,
    "differ": lambda a, b, k: a != b,
    "sgt": lambda a, b, k: L.strictly_greater(a, b),
    "gt_half": lambda a, k: all(x > L.HALF for x in a.grades),
    "ge_half": lambda a, k: all(x >= L.HALF for x in a.grades),
    "ne_half": lambda a, k: all(x != L.HALF for x in a.grades),
    "eq_half": lambda a, k: all(x == L.HALF for x in a.grades),
    "crisp": lambda a, k: a.is_crisp,
    "is_top": lambda a, k: a == L.FuzzySet.ones(a.universe),
    "one_zero": lambda a, b, k: any(x == 1 and y == 0 for x, y in zip(a.grades, b.grades)),
    "implies": lambda p, q: (not p) or q,
    "iff": lambda p, q: bool(p) == bool(q),
    "obetween": lambda a, b, c, k: R.order_between(a, b, c),
    "mbetween": lambda a, b, c, k: R.metric_between(a, b, c),
    "cut_leq": lambda a, b, t, k: R.cut_leq(a, b, t),
    # only consulted under a crispness premise; None keeps the premise-false case total
    "symdiff": lambda a, b, k: (
        R.crisp_symmetric_difference(L.CrispSet.from_fuzzy(a), L.CrispSet.from_fuzzy(b))
        if a.is_crisp and b.is_crisp
        else None
    ),
    "sval": lambda a, b, k: eval_scalar(k[2], a, b).value,
    "smin": min,
    "smax": max,
    "sle": lambda x, y: x <= y,
    "seq": lambda x, y: x == y,
    "sone": lambda x: x == 1,
    "szero": lambda x: x == 0,
    "Fraction": Fraction,
}
