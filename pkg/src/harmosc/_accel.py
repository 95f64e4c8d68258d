"""Numba detection and the env switch for the pure-numpy fallback.

Set ``HARMOSC_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is installed (useful for debugging and for the benchmark baseline).
"""

import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

_DISABLED = os.environ.get("HARMOSC_DISABLE_NUMBA", "0").lower() in ("1", "true", "yes")

NUMBA_ENABLED = HAVE_NUMBA and not _DISABLED


def maybe_jit(func):
    """Return an njit-compiled version of ``func``, or ``func`` itself."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func
