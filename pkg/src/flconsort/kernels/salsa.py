"""Salsa20 core, HSalsa20 key derivation, and the XSalsa20 keystream.

Words are kept in int64 and masked back to 32 bits after every add/rotate,
which is safe in both compiled and interpreted execution.  Key and nonce
material moves in and out as little-endian uint8 arrays.
"""

from __future__ import annotations

import numpy as np

from flconsort._jit import kernel

KEY_BYTES = 32
HSALSA_IN_BYTES = 16
XSALSA_NONCE_BYTES = 24
BLOCK_BYTES = 64

# "expand 32-byte k"
_SIGMA0 = np.int64(0x61707865)
_SIGMA1 = np.int64(0x3320646E)
_SIGMA2 = np.int64(0x79622D32)
_SIGMA3 = np.int64(0x6B206574)

_M32 = np.int64(0xFFFFFFFF)
_I32 = np.int64(32)


@kernel
def _rotl(v, c):
    return ((v << c) | (v >> (_I32 - c))) & _M32


@kernel
def _le32(b, i):
    return (
        np.int64(b[i])
        | (np.int64(b[i + 1]) << np.int64(8))
        | (np.int64(b[i + 2]) << np.int64(16))
        | (np.int64(b[i + 3]) << np.int64(24))
    )


@kernel
def _store32(b, i, v):
    b[i] = np.uint8(v & np.int64(0xFF))
    b[i + 1] = np.uint8((v >> np.int64(8)) & np.int64(0xFF))
    b[i + 2] = np.uint8((v >> np.int64(16)) & np.int64(0xFF))
    b[i + 3] = np.uint8((v >> np.int64(24)) & np.int64(0xFF))


@kernel
def _rounds(x):
    """20 Salsa20 rounds (10 column/row double rounds) on int64[16], in place."""
    for _ in range(10):
        # column round
        x[4] ^= _rotl((x[0] + x[12]) & _M32, np.int64(7))
        x[8] ^= _rotl((x[4] + x[0]) & _M32, np.int64(9))
        x[12] ^= _rotl((x[8] + x[4]) & _M32, np.int64(13))
        x[0] ^= _rotl((x[12] + x[8]) & _M32, np.int64(18))
        x[9] ^= _rotl((x[5] + x[1]) & _M32, np.int64(7))
        x[13] ^= _rotl((x[9] + x[5]) & _M32, np.int64(9))
        x[1] ^= _rotl((x[13] + x[9]) & _M32, np.int64(13))
        x[5] ^= _rotl((x[1] + x[13]) & _M32, np.int64(18))
        x[14] ^= _rotl((x[10] + x[6]) & _M32, np.int64(7))
        x[2] ^= _rotl((x[14] + x[10]) & _M32, np.int64(9))
        x[6] ^= _rotl((x[2] + x[14]) & _M32, np.int64(13))
        x[10] ^= _rotl((x[6] + x[2]) & _M32, np.int64(18))
        x[3] ^= _rotl((x[15] + x[11]) & _M32, np.int64(7))
        x[7] ^= _rotl((x[3] + x[15]) & _M32, np.int64(9))
        x[11] ^= _rotl((x[7] + x[3]) & _M32, np.int64(13))
        x[15] ^= _rotl((x[11] + x[7]) & _M32, np.int64(18))
        # row round
        x[1] ^= _rotl((x[0] + x[3]) & _M32, np.int64(7))
        x[2] ^= _rotl((x[1] + x[0]) & _M32, np.int64(9))
        x[3] ^= _rotl((x[2] + x[1]) & _M32, np.int64(13))
        x[0] ^= _rotl((x[3] + x[2]) & _M32, np.int64(18))
        x[6] ^= _rotl((x[5] + x[4]) & _M32, np.int64(7))
        x[7] ^= _rotl((x[6] + x[5]) & _M32, np.int64(9))
        x[4] ^= _rotl((x[7] + x[6]) & _M32, np.int64(13))
        x[5] ^= _rotl((x[4] + x[7]) & _M32, np.int64(18))
        x[11] ^= _rotl((x[10] + x[9]) & _M32, np.int64(7))
        x[8] ^= _rotl((x[11] + x[10]) & _M32, np.int64(9))
        x[9] ^= _rotl((x[8] + x[11]) & _M32, np.int64(13))
        x[10] ^= _rotl((x[9] + x[8]) & _M32, np.int64(18))
        x[12] ^= _rotl((x[15] + x[14]) & _M32, np.int64(7))
        x[13] ^= _rotl((x[12] + x[15]) & _M32, np.int64(9))
        x[14] ^= _rotl((x[13] + x[12]) & _M32, np.int64(13))
        x[15] ^= _rotl((x[14] + x[13]) & _M32, np.int64(18))


@kernel
def _init_state(x, key, n0, n1, n2, n3):
    x[0] = _SIGMA0
    x[1] = _le32(key, 0)
    x[2] = _le32(key, 4)
    x[3] = _le32(key, 8)
    x[4] = _le32(key, 12)
    x[5] = _SIGMA1
    x[6] = n0
    x[7] = n1
    x[8] = n2
    x[9] = n3
    x[10] = _SIGMA2
    x[11] = _le32(key, 16)
    x[12] = _le32(key, 20)
    x[13] = _le32(key, 24)
    x[14] = _le32(key, 28)
    x[15] = _SIGMA3


@kernel
def _hsalsa20(out, key, inp):
    """HSalsa20: rounds without the feed-forward; out is uint8[32]."""
    x = np.empty(16, np.int64)
    _init_state(x, key, _le32(inp, 0), _le32(inp, 4), _le32(inp, 8), _le32(inp, 12))
    _rounds(x)
    _store32(out, 0, x[0])
    _store32(out, 4, x[5])
    _store32(out, 8, x[10])
    _store32(out, 12, x[15])
    _store32(out, 16, x[6])
    _store32(out, 20, x[7])
    _store32(out, 24, x[8])
    _store32(out, 28, x[9])


@kernel
def _salsa20_stream(out, key, n0, n1):
    """Fill ``out`` (uint8, any length) with the Salsa20 keystream.

    64-bit block counter starts at zero and occupies state words 8-9.
    """
    total = out.shape[0]
    x = np.empty(16, np.int64)
    block = np.empty(64, np.uint8)
    nblocks = (total + 63) // 64
    for blk in range(nblocks):
        c_lo = np.int64(blk) & _M32
        c_hi = (np.int64(blk) >> _I32) & _M32
        _init_state(x, key, n0, n1, c_lo, c_hi)
        y0 = x[0]
        y1 = x[1]
        y2 = x[2]
        y3 = x[3]
        y4 = x[4]
        y5 = x[5]
        y6 = x[6]
        y7 = x[7]
        y8 = x[8]
        y9 = x[9]
        y10 = x[10]
        y11 = x[11]
        y12 = x[12]
        y13 = x[13]
        y14 = x[14]
        y15 = x[15]
        _rounds(x)
        _store32(block, 0, (x[0] + y0) & _M32)
        _store32(block, 4, (x[1] + y1) & _M32)
        _store32(block, 8, (x[2] + y2) & _M32)
        _store32(block, 12, (x[3] + y3) & _M32)
        _store32(block, 16, (x[4] + y4) & _M32)
        _store32(block, 20, (x[5] + y5) & _M32)
        _store32(block, 24, (x[6] + y6) & _M32)
        _store32(block, 28, (x[7] + y7) & _M32)
        _store32(block, 32, (x[8] + y8) & _M32)
        _store32(block, 36, (x[9] + y9) & _M32)
        _store32(block, 40, (x[10] + y10) & _M32)
        _store32(block, 44, (x[11] + y11) & _M32)
        _store32(block, 48, (x[12] + y12) & _M32)
        _store32(block, 52, (x[13] + y13) & _M32)
        _store32(block, 56, (x[14] + y14) & _M32)
        _store32(block, 60, (x[15] + y15) & _M32)
        start = blk * 64
        end = start + 64
        if end > total:
            end = total
        for i in range(start, end):
            out[i] = block[i - start]


def hsalsa20(key: bytes, inp: bytes) -> bytes:
    """Derive a 32-byte subkey from a 32-byte key and 16 input bytes."""
    if len(key) != KEY_BYTES:
        raise ValueError(f"key must be {KEY_BYTES} bytes, got {len(key)}")
    if len(inp) != HSALSA_IN_BYTES:
        raise ValueError(f"input must be {HSALSA_IN_BYTES} bytes, got {len(inp)}")
    out = np.empty(32, np.uint8)
    _hsalsa20(out, np.frombuffer(key, np.uint8), np.frombuffer(inp, np.uint8))
    return out.tobytes()


def xsalsa20_stream(key: bytes, nonce: bytes, length: int) -> bytes:
    """First ``length`` keystream bytes of XSalsa20 under a 24-byte nonce."""
    if len(key) != KEY_BYTES:
        raise ValueError(f"key must be {KEY_BYTES} bytes, got {len(key)}")
    if len(nonce) != XSALSA_NONCE_BYTES:
        raise ValueError(f"nonce must be {XSALSA_NONCE_BYTES} bytes, got {len(nonce)}")
    if length < 0:
        raise ValueError("length must be non-negative")
    subkey = hsalsa20(key, nonce[:16])
    out = np.empty(length, np.uint8)
    if length:
        n = np.frombuffer(nonce, np.uint8)
        n0 = int.from_bytes(nonce[16:20], "little")
        n1 = int.from_bytes(nonce[20:24], "little")
        del n
        _salsa20_stream(out, np.frombuffer(subkey, np.uint8), np.int64(n0), np.int64(n1))
    return out.tobytes()
