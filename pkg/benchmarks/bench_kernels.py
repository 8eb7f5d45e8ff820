"""Compare the compiled kernels with the numpy fallback on a full enumeration.

    python3 benchmarks/bench_kernels.py --graph cycle:10 --k 4 --repeat 3
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from wiener_colorings import _kernels_py
from wiener_colorings.graph import graph_from_spec
from wiener_colorings.oracle import group_perms

try:
    from wiener_colorings import _kernels as _compiled
except ImportError:
    _compiled = None


def workload(impl, colors, dist, edges, perms, k):
    return {
        "wiener_many": lambda: impl.wiener_many(colors, dist),
        "local_max_many": lambda: impl.local_max_many(colors, dist, edges),
        "canonical_codes": lambda: impl.canonical_codes(colors, perms, k, True),
        "all_colorings": lambda: impl.all_colorings(colors.shape[1], k),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--graph", default="cycle:10")
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    g = graph_from_spec(args.graph)
    dist = np.ascontiguousarray(g.dist, dtype=np.int64)
    edges = np.array(g.sorted_edges(), dtype=np.int64)
    perms = group_perms(g)
    colors = _kernels_py.all_colorings(g.n, args.k)
    print(f"{args.graph}, k={args.k}: {len(colors)} colorings, group order {len(perms)}")

    impls = {"numpy": _kernels_py}
    if _compiled is None:
        print("compiled extension not built; timing numpy fallback only")
    else:
        impls["cython"] = _compiled
        for name, fn in workload(_compiled, colors, dist, edges, perms, args.k).items():
            ref = workload(_kernels_py, colors, dist, edges, perms, args.k)[name]()
            assert np.array_equal(fn(), ref), f"{name}: backends disagree"

    print(f"{'kernel':18s}" + "".join(f"{n:>12s}" for n in impls) + ("     speedup" if len(impls) > 1 else ""))
    for name in ("all_colorings", "wiener_many", "local_max_many", "canonical_codes"):
        times = []
        for impl in impls.values():
            fn = workload(impl, colors, dist, edges, perms, args.k)[name]
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        row = f"{name:18s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
