"""Compare the compiled and pure-Python GF(p) rank kernels on Hilbert matrices.

    python benchmarks/bench_rank.py [--degree 3] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from hilbquad import equations as eq
from hilbquad import kernel
from hilbquad.poly import monomials


def dense_rows(level, d):
    ncols = len(monomials(15, d))
    rows = []
    for r in eq.hilbert_matrix_rows(eq.generators(level), d):
        row = [0] * ncols
        for c, v in r.items():
            row[c] = int(v)
        rows.append(row)
    return rows


def best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    p = kernel.default_prime()
    impls = ["python"] + (["compiled"] if kernel.BACKEND == "compiled" else [])
    heads = impls + (["array-only"] if kernel.BACKEND == "compiled" else [])
    # "array-only" times the compiled elimination on an already converted int64 array
    print(f"{'level':<6}{'shape':>14}" + "".join(f"{h:>12}" for h in heads) + f"{'speedup':>10}")
    for lv in eq.LEVELS:
        rows = dense_rows(lv, args.degree)
        times, ranks = [], set()
        for impl in impls:
            t, r = best_time(lambda: kernel.rank_mod_p(rows, p, impl=impl), args.repeat)
            times.append(t)
            ranks.add(r)
        assert len(ranks) == 1, f"kernels disagree on {lv.value}: {ranks}"
        if kernel.BACKEND == "compiled":
            arr = kernel._as_residues(rows, p)
            t, r = best_time(lambda: kernel._compiled.rank_mod_p(arr.copy(), p), args.repeat)
            times.append(t)
            ranks.add(r)
        speed = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
        shape = f"{len(rows)}x{len(rows[0])}"
        print(f"{lv.value:<6}{shape:>14}" + "".join(f"{t:>11.3f}s" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
