"""``njit`` that degrades to the identity when JIT is switched off.

Set ``PARITYCYCLES_DISABLE_JIT=1`` to run the kernels as plain Python over
numpy arrays (useful for debugging and for the fallback benchmark).  The
flag is read once at import time.
"""

import os

JIT_ENABLED = os.environ.get("PARITYCYCLES_DISABLE_JIT", "").lower() not in ("1", "true", "yes")

if JIT_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        JIT_ENABLED = False

if not JIT_ENABLED:

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper
