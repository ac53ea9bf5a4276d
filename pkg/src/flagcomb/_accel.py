"""Backend selection for the numeric kernels.

Set ``FLAGCOMB_BACKEND=numpy`` (or ``FLAGCOMB_DISABLE_NUMBA=1``) to force the
pure-numpy kernels. The default is numba when it imports cleanly.
"""
from __future__ import annotations

import os

_requested = os.environ.get("FLAGCOMB_BACKEND", "numba").strip().lower()
if os.environ.get("FLAGCOMB_DISABLE_NUMBA", "").strip() not in ("", "0"):
    _requested = "numpy"

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a hard dependency here
    _numba = None

HAVE_NUMBA = _numba is not None
USE_NUMBA = HAVE_NUMBA and _requested != "numpy"


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, otherwise the identity decorator."""
    if HAVE_NUMBA:
        kwargs.setdefault("cache", True)
        return _numba.njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda fn: fn


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def thread_count() -> int:
    """Parallelism cap from ``FLAGCOMB_THREADS`` (default: all cores)."""
    raw = os.environ.get("FLAGCOMB_THREADS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1
