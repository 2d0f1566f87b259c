"""Compare the compiled and pure arithmetic kernels on real workloads.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Times the two kernel entry points (weight-multiset convolution and the
batched dot-action dominantization walk) on the inputs that dominate the
package's heavy paths, checks that both backends agree exactly, and prints
one table row per workload.
"""

from __future__ import annotations

import argparse
import time

from bottnull import bundles
from bottnull._kernels import HAVE_COMPILED, _pykernels
from bottnull.rootsys import build_root_system

if HAVE_COMPILED:
    from bottnull._kernels import _ckernels


def _weights(family: str, rank: int, expr: str) -> dict:
    rs = build_root_system(family, rank)
    return dict(bundles.weights(rs, expr).counts)


def _timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    a4 = build_root_system("A", 4)
    a6 = build_root_system("A", 6)
    g2_a4 = _weights("A", 4, "g^2")
    g_a4 = _weights("A", 4, "g")
    b2_a6 = _weights("A", 6, "b^2")
    g3_a4 = _weights("A", 4, "g^3")
    b4_a6 = _weights("A", 6, "b^4")
    yield ("convolve g^2*g A4",
           lambda k: k.convolve(g2_a4, g_a4), None)
    yield ("convolve b^2*b^2 A6",
           lambda k: k.convolve(b2_a6, b2_a6), None)
    yield ("dot-walk g^3 A4",
           lambda k: k.dot_walk_batch(list(g3_a4), a4.cartan), a4)
    yield ("dot-walk b^4 A6",
           lambda k: k.dot_walk_batch(list(b4_a6), a6.cartan), a6)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions per workload (best of N)")
    args = parser.parse_args()

    print(f"compiled extension available: {HAVE_COMPILED}")
    header = f"{'workload':<24}{'pure':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, run, _rs in workloads():
        pure_out = run(_pykernels)
        t_pure = _timeit(lambda: run(_pykernels), args.repeat)
        if HAVE_COMPILED:
            compiled_out = run(_ckernels)
            assert compiled_out == pure_out, f"backend mismatch in {name}"
            t_comp = _timeit(lambda: run(_ckernels), args.repeat)
            print(f"{name:<24}{t_pure * 1e3:>10.2f}ms{t_comp * 1e3:>10.2f}ms"
                  f"{t_pure / t_comp:>9.1f}x")
        else:
            print(f"{name:<24}{t_pure * 1e3:>10.2f}ms{'-':>12}{'-':>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
