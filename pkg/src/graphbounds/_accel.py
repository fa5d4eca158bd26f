"""Backend switch for the numeric kernels.

Kernels are written once in a numba-compatible subset of Python/numpy.  They
are compiled with ``numba.njit`` unless numba is missing or the environment
variable ``GRAPHBOUNDS_DISABLE_NUMBA`` is set to a truthy value, in which case
the very same functions run under CPython on numpy arrays.  Results are
identical on both paths; only speed differs.
"""

import os

DISABLE_ENV = "GRAPHBOUNDS_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _disabled_by_env() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


NUMBA_ENABLED = numba is not None and not _disabled_by_env()
BACKEND = "numba" if NUMBA_ENABLED else "numpy"


def jit(func):
    """Compile ``func`` in nopython mode when the numba backend is active."""
    if NUMBA_ENABLED:
        return numba.njit(cache=True, nogil=True)(func)
    return func
