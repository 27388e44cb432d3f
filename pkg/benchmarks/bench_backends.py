"""Throughput of the numpy and numba search kernels on the same properties.

    python3 benchmarks/bench_backends.py --n 3 --g 4 --props I8 S8 D8 incl.threshold

Each property is scanned over its full exhaustive space (no early exit, since
theorems hold).  The first numba call per predicate includes compilation and
is reported separately.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lfuzzy.audit import backend, encoded
from lfuzzy.audit.engine import _dims, space_size
from lfuzzy.audit.properties import all_properties


def scan(prop, n, g, which):
    k = encoded.context(g, n, prop.sel)
    dims = _dims(prop, n, g)
    codes = encoded.grid_codes(k)
    size = int(np.prod(dims))
    t0 = time.perf_counter()
    hit = backend.first_violation_range(prop.pred, 0, size, dims, codes, k, which)
    return time.perf_counter() - t0, hit, size


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--g", type=int, default=4)
    ap.add_argument("--props", nargs="+", default=["I8", "I12", "S8", "D8", "incl.threshold", "sim.threshold_cancel"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    props = all_properties()
    print(f"n={args.n} g={args.g}")
    print(f"{'property':<22}{'tuples':>12}{'numpy ns/t':>12}{'numba ns/t':>12}{'jit s':>8}{'speedup':>9}")
    for pid in args.props:
        p = props[pid]
        size = space_size(p, args.n, args.g)
        t_np = min(scan(p, args.n, args.g, "numpy")[0] for _ in range(args.repeat))
        t_first, hit_nb, _ = scan(p, args.n, args.g, "numba")
        t_nb = min(scan(p, args.n, args.g, "numba")[0] for _ in range(args.repeat))
        hit_np = scan(p, args.n, args.g, "numpy")[1]
        assert hit_np == hit_nb, (pid, hit_np, hit_nb)
        print(
            f"{pid:<22}{size:>12,}{t_np / size * 1e9:>12.1f}{t_nb / size * 1e9:>12.1f}"
            f"{t_first - t_nb:>8.2f}{t_np / t_nb:>8.1f}x"
        )


if __name__ == "__main__":
    main()
