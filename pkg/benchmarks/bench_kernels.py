"""Time the compiled and pure-Python kernels on the largest oracle workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from reflectpush import kernels
from reflectpush.grid import RankWeight


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    w = RankWeight.standard(9)
    cases = [
        ("box M(4,4,4) maxima", lambda b: kernels.box3_size_maxima((4, 4, 4), w, b)),
        ("edge subsets n=7", lambda b: kernels.edge_subset_pair_maxima(7, b)),
    ]
    print(f"{'workload':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases:
        tp, rp = best_of(lambda: fn("python"), args.repeat)
        tc, rc = best_of(lambda: fn("cython"), args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<22}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
