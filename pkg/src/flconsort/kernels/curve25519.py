"""X25519 scalar multiplication over Curve25519 (RFC 7748 function).

Field elements are 16 signed 64-bit limbs in radix 2^16, so every partial
product in the schoolbook multiply fits comfortably in int64.  The Montgomery
ladder, inversion and packing are one jitted call per scalar multiplication.
"""

from __future__ import annotations

import numpy as np

from flconsort._jit import kernel

SCALAR_BYTES = 32
POINT_BYTES = 32

_121665 = np.array([0xDB41, 1] + [0] * 14, dtype=np.int64)

_I1 = np.int64(1)
_I16 = np.int64(16)
_I37 = np.int64(37)
_I38 = np.int64(38)
_MASK16 = np.int64(0xFFFF)


@kernel
def _car(o):
    """Carry propagation; keeps limbs near 16 bits (tweetnacl carry trick)."""
    for i in range(16):
        o[i] += _I1 << _I16
        c = o[i] >> _I16
        if i < 15:
            o[i + 1] += c - _I1
        else:
            o[0] += _I38 * (c - _I1)
        o[i] -= c << _I16


@kernel
def _sel(p, q, b):
    """If b == 1 swap p and q, limb-wise, branch-free."""
    c = np.int64(~(b - 1))
    for i in range(16):
        t = c & (p[i] ^ q[i])
        p[i] ^= t
        q[i] ^= t


@kernel
def _pack(o, n):
    """Freeze a field element mod 2^255-19 into 32 little-endian bytes."""
    m = np.empty(16, np.int64)
    t = np.empty(16, np.int64)
    for i in range(16):
        t[i] = n[i]
    _car(t)
    _car(t)
    _car(t)
    for _ in range(2):
        m[0] = t[0] - np.int64(0xFFED)
        for i in range(1, 15):
            m[i] = t[i] - _MASK16 - ((m[i - 1] >> _I16) & _I1)
            m[i - 1] &= _MASK16
        m[15] = t[15] - np.int64(0x7FFF) - ((m[14] >> _I16) & _I1)
        b = (m[15] >> _I16) & _I1
        m[14] &= _MASK16
        _sel(t, m, _I1 - b)
    for i in range(16):
        o[2 * i] = np.uint8(t[i] & np.int64(0xFF))
        o[2 * i + 1] = np.uint8((t[i] >> np.int64(8)) & np.int64(0xFF))


@kernel
def _unpack(o, n):
    for i in range(16):
        o[i] = np.int64(n[2 * i]) + (np.int64(n[2 * i + 1]) << np.int64(8))
    o[15] &= np.int64(0x7FFF)


@kernel
def _add(o, a, b):
    for i in range(16):
        o[i] = a[i] + b[i]


@kernel
def _sub(o, a, b):
    for i in range(16):
        o[i] = a[i] - b[i]


@kernel
def _mul(o, a, b):
    t = np.zeros(31, np.int64)
    for i in range(16):
        ai = a[i]
        for j in range(16):
            t[i + j] += ai * b[j]
    for i in range(15):
        t[i] += _I38 * t[i + 16]
    for i in range(16):
        o[i] = t[i]
    _car(o)
    _car(o)


@kernel
def _inv(o, i_in):
    """Inverse by x^(p-2): 253 squarings, skipping multiplies at bits 2 and 4."""
    c = np.empty(16, np.int64)
    for a in range(16):
        c[a] = i_in[a]
    for a in range(253, -1, -1):
        _mul(c, c, c)
        if a != 2 and a != 4:
            _mul(c, c, i_in)
    for a in range(16):
        o[a] = c[a]


@kernel
def _ladder(q, n, p):
    """Montgomery ladder: q = clamp(n) * p, all three as uint8[32]."""
    z = np.empty(32, np.uint8)
    for i in range(31):
        z[i] = n[i]
    z[31] = (n[31] & np.uint8(127)) | np.uint8(64)
    z[0] &= np.uint8(248)

    x = np.empty(16, np.int64)
    _unpack(x, p)

    a = np.zeros(16, np.int64)
    b = np.empty(16, np.int64)
    c = np.zeros(16, np.int64)
    d = np.zeros(16, np.int64)
    e = np.empty(16, np.int64)
    f = np.empty(16, np.int64)
    for i in range(16):
        b[i] = x[i]
    a[0] = _I1
    d[0] = _I1

    for i in range(254, -1, -1):
        r = np.int64((z[i >> 3] >> np.uint8(i & 7)) & np.uint8(1))
        _sel(a, b, r)
        _sel(c, d, r)
        _add(e, a, c)
        _sub(a, a, c)
        _add(c, b, d)
        _sub(b, b, d)
        _mul(d, e, e)
        _mul(f, a, a)
        _mul(a, c, a)
        _mul(c, b, e)
        _add(e, a, c)
        _sub(a, a, c)
        _mul(b, a, a)
        _sub(c, d, f)
        _mul(a, c, _121665)
        _add(a, a, d)
        _mul(c, c, a)
        _mul(a, d, f)
        _mul(d, b, x)
        _mul(b, e, e)
        _sel(a, b, r)
        _sel(c, d, r)

    _inv(c, c)
    _mul(a, a, c)
    _pack(q, a)


def scalarmult(scalar: bytes, point: bytes) -> bytes:
    """X25519: multiply ``point`` by the clamped ``scalar``; 32-byte results."""
    if len(scalar) != SCALAR_BYTES:
        raise ValueError(f"scalar must be {SCALAR_BYTES} bytes, got {len(scalar)}")
    if len(point) != POINT_BYTES:
        raise ValueError(f"point must be {POINT_BYTES} bytes, got {len(point)}")
    out = np.empty(32, np.uint8)
    _ladder(out, np.frombuffer(scalar, np.uint8), np.frombuffer(point, np.uint8))
    return out.tobytes()


_BASE_POINT = bytes([9]) + bytes(31)


def scalarmult_base(scalar: bytes) -> bytes:
    """Multiply the curve base point (u=9) by the clamped scalar."""
    return scalarmult(scalar, _BASE_POINT)


def clamp(seed: bytes) -> bytes:
    """Clamp a 32-byte seed into an X25519 secret scalar."""
    if len(seed) != SCALAR_BYTES:
        raise ValueError(f"seed must be {SCALAR_BYTES} bytes, got {len(seed)}")
    s = bytearray(seed)
    s[0] &= 248
    s[31] = (s[31] & 127) | 64
    return bytes(s)
