"""Pure-Python state-sum enumeration, used when the compiled module is missing."""

from __future__ import annotations

import numpy as np


def state_histogram(ends, signs, n_arcs: int) -> np.ndarray:
    """Histogram of the 2^n smoothing states of a diagram.

    ``ends[c]`` holds the arc ids at the top-left, top-right, bottom-left and
    bottom-right of crossing ``c`` and ``signs[c]`` its local sign. Bit ``c``
    of a state picks the cup-cap smoothing (1) or the identity smoothing (0).
    Entry ``[ea + n, eb + n, L]`` counts the states whose identity smoothings
    have signed count ``ea``, whose cup-cap smoothings have signed count
    ``eb`` and which close up into ``L`` loops.
    """
    ends = [tuple(int(x) for x in row) for row in ends]
    signs = [int(s) for s in signs]
    n = len(signs)
    hist = np.zeros((2 * n + 1, 2 * n + 1, n_arcs + 1), dtype=np.int64)

    for state in range(1 << n):
        parent = list(range(n_arcs))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = n_arcs
        ea = eb = 0
        for c in range(n):
            tl, tr, bl, br = ends[c]
            if (state >> c) & 1:
                pairs = ((tl, tr), (bl, br))
                eb += signs[c]
            else:
                pairs = ((tl, bl), (tr, br))
                ea += signs[c]
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    loops -= 1
        hist[ea + n, eb + n, loops] += 1
    return hist
