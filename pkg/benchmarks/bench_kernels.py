"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--samples N] [--degree K]

Both backends must produce identical results; the script checks that before
reporting timings.
"""
import argparse
import time

import numpy as np

from schurpos import _purepy
from schurpos.conegeom import DEFAULT_SEED, draw_block
from schurpos.kostka import inverse_kostka_int_rows
from schurpos.partitions import partitions_of

try:
    from schurpos import _speedups
except ImportError:
    _speedups = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def kostka_table(backend, k):
    order = partitions_of(k)
    return [[backend.count_ssyt_content(lam, mu) for mu in order] for lam in order]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--kostka-degrees", type=int, nargs="+", default=[6, 8, 10])
    args = ap.parse_args()

    backends = [("python", _purepy)]
    if _speedups is not None:
        backends.append(("cython", _speedups))
    else:
        print("compiled extension not built; timing the pure-Python kernels only")

    print(f"{'kernel':<32}{'backend':<10}{'seconds':>10}")
    for k in args.kostka_degrees:
        results = {}
        for name, mod in backends:
            secs, table = timed(kostka_table, mod, k, repeat=1)
            results[name] = table
            print(f"{'kostka matrix, k=' + str(k):<32}{name:<10}{secs:>10.4f}")
        assert len({str(v) for v in results.values()}) == 1, "backends disagree on Kostka numbers"

    rows = draw_block(args.degree, DEFAULT_SEED, 0, args.samples)
    kinv = np.array(inverse_kostka_int_rows(args.degree), dtype=np.int64)
    results = {}
    for name, mod in backends:
        secs, flags = timed(mod.classify_samples, rows, kinv, repeat=1 if name == "python" else 3)
        results[name] = flags
        label = f"classify {args.samples} rows, k={args.degree}"
        print(f"{label:<32}{name:<10}{secs:>10.4f}")
    flags = list(results.values())
    assert all(np.array_equal(flags[0], f) for f in flags[1:]), "backends disagree on classifications"
    print(f"positive fraction: {flags[0].mean():.6g}")


if __name__ == "__main__":
    main()
