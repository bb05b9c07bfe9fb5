"""Hot-loop kernel backend selection.

The compiled extension (``_core``, Cython) is preferred; the NumPy
implementation (``_py``) is the fallback and the reference.  Both produce
bit-identical results for identical inputs, so which one loads never
changes a number, only the runtime.  Set ``BEPALLOC_FORCE_PYTHON=1`` to
skip the extension, e.g. for the backend-comparison benchmark.
"""

import os

from . import _py

if os.environ.get("BEPALLOC_FORCE_PYTHON") == "1":
    _impl = _py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _py
        BACKEND = "python"

count_infeasible_max = _impl.count_infeasible_max
count_infeasible_sum = _impl.count_infeasible_sum
count_block_failures = _impl.count_block_failures
beamforming_batch = _impl.beamforming_batch


def backend_name() -> str:
    return BACKEND
