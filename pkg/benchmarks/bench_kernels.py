"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit

from ecseq import _pykernels
from ecseq.curves import EdwardsCurve, find_point_of_order
from ecseq.field import smallest_nonsquare

try:
    from ecseq import _ckernels
except ImportError:
    _ckernels = None


def cases():
    rng = random.Random(1)
    p = 65521
    seq = [rng.randrange(p) for _ in range(2000)]
    q = 9973
    C = EdwardsCurve(q, 1, smallest_nonsquare(q))
    G = find_point_of_order(C)
    return [
        ("bm_synthesis n=2000 p=65521", "bm_synthesis", (seq, p)),
        ("edwards_multiples n=20000 p=9973", "edwards_multiples",
         (q, C.c, C.d, G.u, G.v, 20000)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':40} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, name, call_args in cases():
        py = min(timeit.repeat(lambda: getattr(_pykernels, name)(*call_args),
                               number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{label:40} {py:10.4f} {'n/a':>10} {'':>8}")
            continue
        cy = min(timeit.repeat(lambda: getattr(_ckernels, name)(*call_args),
                               number=1, repeat=args.repeat))
        print(f"{label:40} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
