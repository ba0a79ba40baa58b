"""Kernel compilation switch.

The hot numeric kernels (Keccak permutation, X25519 ladder, Salsa20 stream,
Poly1305 blocks, gradient-descent epochs) are written as plain functions over
numpy arrays and compiled with numba when available.  Setting
``FLCONSORT_DISABLE_JIT=1`` in the environment (or running without numba
installed) executes the very same functions under the interpreter on numpy
scalars instead.  Slower, but byte-identical results; ``benchmarks/`` measures
the gap.
"""

from __future__ import annotations

import os

ENV_FLAG = "FLCONSORT_DISABLE_JIT"


def _jit_disabled() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")


JIT_ENABLED = False
if not _jit_disabled():
    try:
        from numba import njit as _njit

        JIT_ENABLED = True
    except ImportError:  # pragma: no cover - exercised via env flag instead
        JIT_ENABLED = False


if JIT_ENABLED:

    def kernel(func):
        """Compile ``func`` as a cached nopython numba kernel."""
        return _njit(cache=True)(func)

else:

    def kernel(func):
        """JIT disabled: run the kernel under the interpreter as-is."""
        return func
