"""Hot numeric kernels: Keccak-f[1600], X25519, XSalsa20, Poly1305, GD epochs.

Every kernel is a plain function over numpy arrays, compiled with numba
unless ``FLCONSORT_DISABLE_JIT=1`` (see :mod:`flconsort._jit`).
"""

from flconsort._jit import ENV_FLAG, JIT_ENABLED

__all__ = ["ENV_FLAG", "JIT_ENABLED"]
