"""Switch between numba-compiled kernels and the pure-numpy fallback.

Set ``FRACLAB_DISABLE_NUMBA=1`` (or numba's own ``NUMBA_DISABLE_JIT=1``)
before importing :mod:`fraclab` to run every hot loop through numpy.
"""

from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _truthy(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = numba is not None and not (
    _truthy("FRACLAB_DISABLE_NUMBA") or _truthy("NUMBA_DISABLE_JIT")
)

NUMBA_OPTS = {"cache": True, "nogil": True, "fastmath": False}


def njit(func):
    """Compile ``func`` with numba when available, otherwise return it unchanged."""
    if numba is None:
        return func
    return numba.njit(**NUMBA_OPTS)(func)
