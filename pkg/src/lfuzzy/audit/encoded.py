"""Packed-integer forms of the lattice operations, used by the search kernels.

A fuzzy set on the grid ``{0, 1/g, ..., 1}`` over ``n`` elements is packed
into one int64: element ``u`` holds its numerator (0..g) in a ``w``-bit field
starting at bit ``u * w``.  Relation values are ``n``-bit masks.  Scalar
inclusion values are ``(num, den)`` integer pairs compared by
cross-multiplication, so every check stays exact.

Every helper takes the context tuple ``k = (g, n, sel, w, field_mask)`` last
(``sel`` selects a relation or scalar measure).  The bodies are branch-free
arithmetic so the same source runs on Python ints, on numpy arrays (one
entry per tuple under test) and inside numba-compiled kernels.
"""

import numpy as np

HELPERS = (
    "digit", "pick", "fullmask", "top",
    "meet", "join", "neg", "incl", "sim", "dist", "rel", "eqmask", "bits",
    "rmeet", "rjoin", "rneg", "req", "rle", "full", "empty",
    "leq", "seteq", "differ", "sgt", "gt_half", "ne_half", "eq_half", "ge_half",
    "crisp", "is_top", "one_zero", "implies", "iff",
    "obetween", "mbetween", "cut_leq", "symdiff",
    "sval", "smin", "smax", "sle", "seq", "sone", "szero",
)


def context(g, n, sel=0):
    w = max(1, int(g).bit_length())
    if n * w > 62:
        raise ValueError(f"grid too fine to pack: n={n}, g={g} needs {n * w} bits")
    return (int(g), int(n), int(sel), w, (1 << w) - 1)


def pack_digits(digits, k):
    """Pack an (..., n) array of numerators into codes."""
    digits = np.asarray(digits, dtype=np.int64)
    shifts = np.arange(k[1], dtype=np.int64) * k[3]
    return np.bitwise_or.reduce(digits << shifts, axis=-1)


def unpack_code(code, k):
    return [int((int(code) >> (u * k[3])) & k[4]) for u in range(k[1])]


def grid_codes(k):
    """Codes of every grid set, first element varying slowest."""
    g, n = k[0], k[1]
    idx = np.arange((g + 1) ** n, dtype=np.int64)
    digits = np.empty((idx.size, n), dtype=np.int64)
    rest = idx.copy()
    for u in range(n - 1, -1, -1):
        digits[:, u] = rest % (g + 1)
        rest //= g + 1
    return pack_digits(digits, k)


def digit(a, u, k):
    return (a >> (u * k[3])) & k[4]


def pick(c, p, q):
    return q + c * (p - q)


def fullmask(k):
    return (1 << k[1]) - 1


def top(a, k):
    out = 0
    for u in range(k[1]):
        out = out | (k[0] << (u * k[3]))
    return out


def meet(a, b, k):
    out = 0
    for u in range(k[1]):
        out = out | (np.minimum(digit(a, u, k), digit(b, u, k)) << (u * k[3]))
    return out


def join(a, b, k):
    out = 0
    for u in range(k[1]):
        out = out | (np.maximum(digit(a, u, k), digit(b, u, k)) << (u * k[3]))
    return out


def neg(a, k):
    out = 0
    for u in range(k[1]):
        out = out | ((k[0] - digit(a, u, k)) << (u * k[3]))
    return out


def incl(a, b, k):
    out = 0
    for u in range(k[1]):
        out = out | ((digit(a, u, k) <= digit(b, u, k)) * (1 << u))
    return out


def sim(a, b, k):
    return incl(a, b, k) & incl(b, a, k)


def dist(a, b, k):
    return sim(a, b, k) ^ fullmask(k)


def rel(a, b, k):
    # sel: 0 incl, 1 sim, 2 dist
    if k[2] == 0:
        return incl(a, b, k)
    if k[2] == 1:
        return sim(a, b, k)
    return dist(a, b, k)


def eqmask(a, b, k):
    out = 0
    for u in range(k[1]):
        out = out | ((digit(a, u, k) == digit(b, u, k)) * (1 << u))
    return out


def bits(a, k):
    """Crisp set ``a`` as a relation-value mask (only meaningful when crisp)."""
    out = 0
    for u in range(k[1]):
        out = out | ((digit(a, u, k) == k[0]) * (1 << u))
    return out


def rmeet(x, y):
    return x & y


def rjoin(x, y):
    return x | y


def rneg(x, k):
    return x ^ fullmask(k)


def req(x, y):
    return x == y


def rle(x, y):
    return (x & y) == x


def full(x, k):
    return x == fullmask(k)


def empty(x, k):
    return x == 0


def leq(a, b, k):
    acc = True
    for u in range(k[1]):
        acc = acc & (digit(a, u, k) <= digit(b, u, k))
    return acc


def seteq(a, b, k):
    return a == b


def differ(a, b, k):
    return a != b


def sgt(a, b, k):
    acc = True
    for u in range(k[1]):
        acc = acc & (digit(a, u, k) > digit(b, u, k))
    return acc


def gt_half(a, k):
    acc = True
    for u in range(k[1]):
        acc = acc & (2 * digit(a, u, k) > k[0])
    return acc


def ge_half(a, k):
    acc = True
    for u in range(k[1]):
        acc = acc & (2 * digit(a, u, k) >= k[0])
    return acc


def ne_half(a, k):
    acc = True
    for u in range(k[1]):
        acc = acc & (2 * digit(a, u, k) != k[0])
    return acc


def eq_half(a, k):
    acc = True
    for u in range(k[1]):
        acc = acc & (2 * digit(a, u, k) == k[0])
    return acc


def crisp(a, k):
    acc = True
    for u in range(k[1]):
        x = digit(a, u, k)
        acc = acc & ((x == 0) | (x == k[0]))
    return acc


def is_top(a, k):
    return a == top(a, k)


def one_zero(a, b, k):
    acc = False
    for u in range(k[1]):
        acc = acc | ((digit(a, u, k) == k[0]) & (digit(b, u, k) == 0))
    return acc


def implies(p, q):
    return p <= q


def iff(p, q):
    return p == q


def obetween(a, b, c, k):
    return leq(meet(a, c, k), b, k) & leq(b, join(a, c, k), k)


def mbetween(a, b, c, k):
    return dist(a, c, k) == (dist(a, b, k) | dist(b, c, k))


def cut_leq(a, b, t, k):
    return rle(t, incl(a, b, k))


def symdiff(a, b, k):
    """``(a' ∧ b) ∨ (a ∧ b')`` as a relation-value mask."""
    return bits(join(meet(neg(a, k), b, k), meet(a, neg(b, k), k), k), k)


def sval(a, b, k):
    """Scalar measure ``k[2]`` of ``a`` in ``b`` as an integer ratio."""
    g, n, m = k[0], k[1], k[2]
    sa = 0
    sb = 0
    mn = 0
    mx = 0
    mnc = 0
    mxc = 0
    mx_acb = 0
    mx4 = 0
    mn4 = 0
    mn_abc = 0
    s9 = 0
    s11 = 0
    low = g + 1
    for u in range(n):
        x = digit(a, u, k)
        y = digit(b, u, k)
        xc = g - x
        yc = g - y
        sa = sa + x
        sb = sb + y
        mn = mn + np.minimum(x, y)
        mx = mx + np.maximum(x, y)
        mnc = mnc + np.minimum(xc, yc)
        mxc = mxc + np.maximum(xc, yc)
        mx_acb = mx_acb + np.maximum(xc, y)
        mx4 = mx4 + np.maximum(np.maximum(xc, x), np.maximum(y, yc))
        mn4 = mn4 + np.minimum(np.minimum(xc, x), np.minimum(y, yc))
        mn_abc = mn_abc + np.minimum(x, yc)
        s9 = s9 + np.minimum(g, g - x + y)
        s11 = s11 + (g * g - g * x + x * y)
        low = np.minimum(low, pick(x > y, y, g + 1))
    if m == 1:
        num, den = mn, sa
    elif m == 2:
        num, den = sb, mx
    elif m == 3:
        num, den = mnc, n * g - sb
    elif m == 4:
        num, den = n * g - sa, mxc
    elif m == 5:
        num, den = mx_acb, mx4
    elif m == 6:
        num, den = mn4, mn_abc
    elif m == 7:
        num, den = np.maximum(n * g - sa, sb), mx4
    elif m == 8:
        num, den = mn4, np.minimum(sa, n * g - sb)
    elif m == 9:
        num, den = s9, n * g
    elif m == 10:
        num, den = mx_acb, n * g
    elif m == 11:
        num, den = s11, n * g * g
    else:
        num, den = np.minimum(low, g), g
    zero = den == 0
    num = pick(zero, 1, num)
    den = pick(zero, 1, den)
    num = pick(num > den, den, num)
    return num, den


def smin(x, y):
    le = x[0] * y[1] <= y[0] * x[1]
    return pick(le, x[0], y[0]), pick(le, x[1], y[1])


def smax(x, y):
    ge = x[0] * y[1] >= y[0] * x[1]
    return pick(ge, x[0], y[0]), pick(ge, x[1], y[1])


def sle(x, y):
    return x[0] * y[1] <= y[0] * x[1]


def seq(x, y):
    return x[0] * y[1] == y[0] * x[1]


def sone(x):
    return x[0] == x[1]


def szero(x):
    return x[0] == 0
