"""Compare the compiled and pure-Python kernels on group enumeration.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--groups alt8,psu3_3,m22]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pconstant import _pykernels, corpus

try:
    from pconstant import _kernels
except ImportError:  # extension not built
    _kernels = None


def _gens(key: str) -> np.ndarray:
    doc = corpus.read_fixture(key)
    return np.array([g.images for g in doc.generators], dtype=np.uint8)


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--groups", default="alt7,sl4_2,psu3_3,sz8,m22,psl3_7")
    args = ap.parse_args(argv)

    print(f"{'group':<10}{'order':>10}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for key in args.groups.split(","):
        gens = _gens(key)
        bound = 2**21
        py = _best(lambda: _pykernels.closure(gens, bound), args.repeat)
        order = len(_pykernels.closure(gens, bound))
        if _kernels is None:
            print(f"{key:<10}{order:>10}{py:>11.3f}{'n/a':>11}{'':>9}")
            continue
        cy = _best(lambda: _kernels.closure(gens, bound), args.repeat)
        assert np.array_equal(_kernels.closure(gens, bound), _pykernels.closure(gens, bound))
        print(f"{key:<10}{order:>10}{py:>11.3f}{cy:>11.3f}{py / cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
