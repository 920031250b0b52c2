"""Benchmark the compiled signature kernel against the pure-Python twin.

The signature computation is the inner loop of every exhaustive sweep
(class counting, code-property verification, witness search), so this is
the comparison that decides whether building the extension pays off.

Run:  python benchmarks/bench_kernel.py [--max-n 14]
"""

import argparse
import time

from compcodes import _pykernel

try:
    from compcodes import _ckernel
except ImportError:
    _ckernel = None


def bench_signatures(impl, n: int, repeat: int = 1) -> float:
    strings = [bytes(int(b) for b in format(x, f"0{n}b")) for x in range(2 ** n)]
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for bits in strings:
            impl.full_signature(bits)
        best = min(best, time.perf_counter() - start)
    return best


def bench_count_classes(impl, n: int) -> tuple[float, int]:
    start = time.perf_counter()
    reps = set()
    for x in range(2 ** n):
        bits = bytes(int(b) for b in format(x, f"0{n}b"))
        reps.add(impl.full_signature(bits))
    return time.perf_counter() - start, len(reps)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=14)
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not built; showing pure-Python numbers only")

    print(f"{'n':>4} {'strings':>9} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for n in range(8, args.max_n + 1, 2):
        t_pure = bench_signatures(_pykernel, n)
        if _ckernel is not None:
            t_cy = bench_signatures(_ckernel, n)
            print(f"{n:>4} {2 ** n:>9} {t_pure:>10.3f} {t_cy:>11.3f} "
                  f"{t_pure / t_cy:>7.1f}x")
        else:
            print(f"{n:>4} {2 ** n:>9} {t_pure:>10.3f} {'-':>11} {'-':>8}")

    n = min(args.max_n, 14)
    t_pure, classes = bench_count_classes(_pykernel, n)
    line = f"class partition at n={n}: {classes} classes; pure {t_pure:.3f}s"
    if _ckernel is not None:
        t_cy, classes_cy = bench_count_classes(_ckernel, n)
        assert classes_cy == classes
        line += f", cython {t_cy:.3f}s ({t_pure / t_cy:.1f}x)"
    print(line)


if __name__ == "__main__":
    main()
