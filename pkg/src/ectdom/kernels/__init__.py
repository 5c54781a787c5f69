"""Hot inner loops, compiled with numba when available.

Set ``ECTDOM_DISABLE_NUMBA=1`` to force the vectorized numpy path.  Both
backends expose the same functions and return identical results; the active
one is re-exported here and named by :data:`BACKEND`.
"""

import os

from . import _numpy as numpy_backend


def _want_numba():
    flag = os.environ.get("ECTDOM_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


try:
    from . import _numba as numba_backend
except ImportError:
    numba_backend = None

HAVE_NUMBA = numba_backend is not None

if HAVE_NUMBA and _want_numba():
    BACKEND = "numba"
    _active = numba_backend
else:
    BACKEND = "numpy"
    _active = numpy_backend

canon_min_batch = _active.canon_min_batch
subset_tables = _active.subset_tables
ec_tables = _active.ec_tables
minimal_flags = _active.minimal_flags
maximal_flags = _active.maximal_flags
first_subset = _active.first_subset

__all__ = [
    "BACKEND",
    "HAVE_NUMBA",
    "canon_min_batch",
    "ec_tables",
    "first_subset",
    "maximal_flags",
    "minimal_flags",
    "numba_backend",
    "numpy_backend",
    "subset_tables",
]
