import os
import random
import subprocess
import sys

import numpy as np
import pytest

from skeinkit import kernels
from skeinkit._kernels_py import state_histogram as py_histogram
from skeinkit.diagram import BraidWord, braid_closure
from skeinkit.skein import state_sum_inputs


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernel not built")
def test_compiled_matches_fallback():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 4)
        letters = [g for g in range(-(n - 1), n) if g] or [0]
        word = tuple(g for g in (rng.choice(letters) for _ in range(rng.randint(0, 9))) if g)
        ends, signs, n_arcs, _ = state_sum_inputs(braid_closure(BraidWord(n, word)))
        np.testing.assert_array_equal(kernels.state_histogram(ends, signs, n_arcs),
                                      py_histogram(ends, signs, n_arcs))


def test_histogram_counts_every_state():
    ends, signs, n_arcs, _ = state_sum_inputs(braid_closure(BraidWord(3, (1, -2, 1, 2))))
    hist = kernels.state_histogram(ends, signs, n_arcs)
    assert int(hist.sum()) == 2 ** len(signs)


def test_env_forces_fallback():
    env = dict(os.environ, SKEINKIT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import skeinkit; print(skeinkit.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
