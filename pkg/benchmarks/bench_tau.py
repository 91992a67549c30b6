"""Benchmark the two concordance-count kernels behind the MC tau estimator.

The O(n^2) pairwise concordance count is the only hot loop in the
package.  It ships as a compiled Cython extension with a chunked numpy
fallback; both produce bit-identical integers, so this script only
measures speed.

Run:  python3 benchmarks/bench_tau.py [--sizes 1000 4000 16000] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from archcop._backend import KERNEL_BACKEND
from archcop._tau_fallback import concordance_diff as numpy_kernel

try:
    from archcop._tau_kernel import concordance_diff as compiled_kernel
except ImportError:
    compiled_kernel = None


def bench(kernel, x, y, repeat: int) -> float:
    return min(timeit.repeat(lambda: kernel(x, y), number=1, repeat=repeat))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[1000, 4000, 16000])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"active backend: {KERNEL_BACKEND}")
    print(f"{'n':>8}  {'numpy (s)':>12}  {'compiled (s)':>12}  {'speedup':>8}")
    rng = np.random.default_rng(0)
    for n in args.sizes:
        x = rng.random(n)
        y = rng.random(n)
        t_np = bench(numpy_kernel, x, y, args.repeat)
        if compiled_kernel is None:
            print(f"{n:>8}  {t_np:>12.4f}  {'(unavailable)':>12}  {'-':>8}")
            continue
        assert compiled_kernel(x, y) == numpy_kernel(x, y)
        t_c = bench(compiled_kernel, x, y, args.repeat)
        print(f"{n:>8}  {t_np:>12.4f}  {t_c:>12.4f}  {t_np / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
