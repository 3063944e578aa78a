"""Time the compiled state-sum kernel against the pure-Python fallback.

    python benchmarks/bench_state_sum.py [--max-crossings 14] [--repeat 3]
"""

import argparse
import timeit

import numpy as np

from skeinkit import kernels
from skeinkit._kernels_py import state_histogram as py_histogram
from skeinkit.diagram import BraidWord, braid_closure
from skeinkit.skein import state_sum_inputs


def inputs(crossings):
    word = tuple((1, -2, 2, -1)[k % 4] for k in range(crossings))
    return state_sum_inputs(braid_closure(BraidWord(3, word)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backend: {kernels.BACKEND}")
    print(f"{'crossings':>9} {'states':>8} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for n in range(4, args.max_crossings + 1, 2):
        ends, signs, n_arcs, _ = inputs(n)
        fast = min(timeit.repeat(lambda: kernels.state_histogram(ends, signs, n_arcs),
                                 number=1, repeat=args.repeat))
        slow = min(timeit.repeat(lambda: py_histogram(ends, signs, n_arcs),
                                 number=1, repeat=args.repeat))
        assert np.array_equal(kernels.state_histogram(ends, signs, n_arcs),
                              py_histogram(ends, signs, n_arcs))
        print(f"{n:>9} {2 ** n:>8} {fast:>11.5f} {slow:>10.5f} {slow / fast:>7.0f}x")


if __name__ == "__main__":
    main()
