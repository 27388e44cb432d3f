"""Independent reference implementations on plain lists of Fractions.

Nothing here imports lfuzzy; these are the slow, obvious definitions the
library is checked against.
"""

from fractions import Fraction
from itertools import product

ONE = Fraction(1)


def meet(a, b):
    return [min(x, y) for x, y in zip(a, b)]


def join(a, b):
    return [max(x, y) for x, y in zip(a, b)]


def comp(a):
    return [1 - x for x in a]


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def incl(a, b):
    return [1 if x <= y else 0 for x, y in zip(a, b)]


def sim(a, b):
    return [p & q for p, q in zip(incl(a, b), incl(b, a))]


def dist(a, b):
    return [1 - s for s in sim(a, b)]


def card(a):
    return sum(a, Fraction(0))


def _ratio(num, den):
    if den == 0:
        return ONE
    return min(ONE, Fraction(num) / den)


def scalar(m, a, b):
    """The twelve measures straight from their formulas."""
    n = len(a)
    ac, bc = comp(a), comp(b)
    if m == 1:
        return _ratio(card(meet(a, b)), card(a))
    if m == 2:
        return _ratio(card(b), card(join(a, b)))
    if m == 3:
        return _ratio(card(meet(ac, bc)), card(bc))
    if m == 4:
        return _ratio(card(ac), card(join(ac, bc)))
    if m == 5:
        return _ratio(card(join(ac, b)), card(join(join(ac, a), join(b, bc))))
    if m == 6:
        return _ratio(card(meet(meet(ac, a), meet(b, bc))), card(meet(a, bc)))
    if m == 7:
        return _ratio(max(card(ac), card(b)), card(join(join(ac, a), join(b, bc))))
    if m == 8:
        return _ratio(card(meet(meet(ac, a), meet(b, bc))), min(card(a), card(bc)))
    if m == 9:
        return _ratio(sum(min(ONE, 1 - x + y) for x, y in zip(a, b)), n)
    if m == 10:
        return _ratio(sum(max(1 - x, y) for x, y in zip(a, b)), n)
    if m == 11:
        return _ratio(sum(1 - x + x * y for x, y in zip(a, b)), n)
    if m == 12:
        return kundu(a, b)
    raise ValueError(m)


def kundu(a, b):
    # the admissible alphas form an interval [0, a*]; a* is 1 or one of the grades
    candidates = sorted(set(a) | set(b) | {Fraction(0), ONE})
    ok = [t for t in candidates if all(min(x, t) <= min(y, t) for x, y in zip(a, b))]
    return max(ok)


def grid(n, g):
    levels = [Fraction(i, g) for i in range(g + 1)]
    return [list(p) for p in product(levels, repeat=n)]
