"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_kernel.py [--repeat 5]
"""
import argparse
import random
import time

from waringcert import _kernel_py
from waringcert._kernel import PRIME
from waringcert.apolarity import catalecticant
from waringcert.construct import random_power_sum
from waringcert.qlinalg import _integer_rows

try:
    from waringcert import _kernel_c
except ImportError:
    _kernel_c = None


def random_matrix(rng, rows, cols, rank, bound=50):
    a = [[rng.randint(-bound, bound) for _ in range(rank)] for _ in range(rows)]
    b = [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rank)]
    return [[sum(a[i][k] * b[k][j] for k in range(rank)) for j in range(cols)]
            for i in range(rows)]


def catalecticant_case(n, d, s):
    g = random_power_sum(n, d, s, 1)
    rows, cols = _integer_rows(catalecticant(g, d // 2))
    return rows, cols


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(0)
    cases = []
    for size in (10, 20, 40, 60):
        cases.append((f"random {size}x{size} rank {size - 2}",
                      random_matrix(rng, size, size, size - 2), size))
    for n, d, s in [(3, 8, 14), (4, 6, 9), (3, 12, 27)]:
        rows, cols = catalecticant_case(n, d, s)
        cases.append((f"catalecticant n={n} d={d}", rows, cols))
    print(f"{'case':34} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for name, rows, cols in cases:
        tp = best_of(lambda: _kernel_py.gauss_jordan(rows, cols), args.repeat)
        if _kernel_c is None:
            print(f"{name:34} {tp:12.4f} {'n/a':>13} {'n/a':>8}")
            continue
        assert _kernel_py.gauss_jordan(rows, cols) == _kernel_c.gauss_jordan(rows, cols)
        tc = best_of(lambda: _kernel_c.gauss_jordan(rows, cols), args.repeat)
        print(f"{name:34} {tp:12.4f} {tc:13.4f} {tp / tc:8.2f}")
    print()
    print("rank modulo a prime")
    for name, rows, cols in cases:
        tp = best_of(lambda: _kernel_py.rank_mod_p(rows, cols, PRIME), args.repeat)
        if _kernel_c is None:
            print(f"{name:34} {tp:12.4f} {'n/a':>13} {'n/a':>8}")
            continue
        tc = best_of(lambda: _kernel_c.rank_mod_p(rows, cols, PRIME), args.repeat)
        print(f"{name:34} {tp:12.4f} {tc:13.4f} {tp / tc:8.2f}")


if __name__ == "__main__":
    main()
