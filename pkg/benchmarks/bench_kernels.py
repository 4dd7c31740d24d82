"""Compare the numba and numpy backends of the projective weight search.

    python benchmarks/bench_kernels.py [--sizes 6 7 8] [--repeat 3]

Each backend is warmed up once per size (so JIT compilation is excluded),
then the best of ``--repeat`` runs is reported for the full box scan and
for the cocycle mask over its output.
"""

import argparse
import time

import numpy as np

from toricpoisson import kernels
from toricpoisson.toric import standard_structure


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(n, repeat):
    re, im = kernels.integer_parts(standard_structure(n), n)
    row = {"n": n, "box": (n + 2) ** n}
    results = {}
    for backend in ("numpy", "numba"):
        if backend == "numba" and not kernels.NUMBA_AVAILABLE:
            continue
        W = kernels.admissible_box(n, n, backend=backend)  # warm-up
        kernels.cocycle_mask(W, re, im, True, backend=backend)
        row[f"{backend}_box"] = best_of(lambda: kernels.admissible_box(n, n, backend=backend), repeat)
        row[f"{backend}_mask"] = best_of(lambda: kernels.cocycle_mask(W, re, im, True, backend=backend), repeat)
        results[backend] = (W, kernels.cocycle_mask(W, re, im, True, backend=backend))
    if len(results) == 2:
        (Wa, ma), (Wb, mb) = results["numpy"], results["numba"]
        row["agree"] = bool(np.array_equal(Wa, Wb) and np.array_equal(ma, mb))
    row["rows"] = len(results["numpy"][0])
    return row


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 7, 8])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"numba available: {kernels.NUMBA_AVAILABLE}")
    print(f"{'n':>2} {'box':>10} {'rows':>9} {'numpy box':>10} {'numba box':>10} {'numpy mask':>11} {'numba mask':>11} {'speedup':>8} agree")
    for n in args.sizes:
        r = bench(n, args.repeat)
        nb = r.get("numba_box", float("nan"))
        nm = r.get("numba_mask", float("nan"))
        speed = (r["numpy_box"] + r["numpy_mask"]) / (nb + nm)
        print(
            f"{n:>2} {r['box']:>10} {r['rows']:>9} {r['numpy_box']:>9.3f}s {nb:>9.3f}s "
            f"{r['numpy_mask']:>10.3f}s {nm:>10.3f}s {speed:>7.1f}x {r.get('agree', '-')}"
        )


if __name__ == "__main__":
    main()
