"""Picks the compiled state-sum kernel when it is built, else the Python one.

Set ``SKEINKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("SKEINKIT_PURE_PYTHON"):
    state_histogram = _kernels_py.state_histogram
    BACKEND = "python"
else:
    try:
        from ._kernels import state_histogram
        BACKEND = "cython"
    except ImportError:
        state_histogram = _kernels_py.state_histogram
        BACKEND = "python"

__all__ = ["state_histogram", "BACKEND"]
