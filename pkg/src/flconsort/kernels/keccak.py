"""Keccak-256 with the original (pre-FIPS) 0x01 padding, as used by Ethereum.

State is 25 little-endian 64-bit lanes, flat index ``x + 5*y``.  The
permutation and the block-absorb loop are the hot kernels; padding and
squeezing happen in plain Python since they run once per digest.
"""

from __future__ import annotations

import numpy as np

from flconsort._jit import kernel

RATE_BYTES = 136  # 1600-bit state minus 2*256-bit capacity
DIGEST_BYTES = 32

_ROUND_CONSTANTS = np.array(
    [
        0x0000000000000001, 0x0000000000008082, 0x800000000000808A,
        0x8000000080008000, 0x000000000000808B, 0x0000000080000001,
        0x8000000080008081, 0x8000000000008009, 0x000000000000008A,
        0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
        0x000000008000808B, 0x800000000000008B, 0x8000000000008089,
        0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
        0x000000000000800A, 0x800000008000000A, 0x8000000080008081,
        0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
    ],
    dtype=np.uint64,
)

# rho rotation amount for source lane x + 5*y
_ROTATION = np.array(
    [
        0, 1, 62, 28, 27,
        36, 44, 6, 55, 20,
        3, 10, 43, 25, 39,
        41, 45, 15, 21, 8,
        18, 2, 61, 56, 14,
    ],
    dtype=np.uint64,
)

_U1 = np.uint64(1)
_U63 = np.uint64(63)
_U64 = np.uint64(64)


@kernel
def _f1600(lanes):
    """Keccak-f[1600] permutation over a uint64[25] lane array, in place."""
    c = np.empty(5, np.uint64)
    b = np.empty(25, np.uint64)
    for rnd in range(24):
        # theta
        for x in range(5):
            c[x] = lanes[x] ^ lanes[x + 5] ^ lanes[x + 10] ^ lanes[x + 15] ^ lanes[x + 20]
        for x in range(5):
            cc = c[(x + 1) % 5]
            d = c[(x + 4) % 5] ^ ((cc << _U1) | (cc >> _U63))
            for y in range(0, 25, 5):
                lanes[x + y] ^= d
        # rho + pi
        for x in range(5):
            for y in range(5):
                src = x + 5 * y
                dst = y + 5 * ((2 * x + 3 * y) % 5)
                r = _ROTATION[src]
                v = lanes[src]
                b[dst] = (v << r) | (v >> ((_U64 - r) & _U63))
        # chi
        for y in range(0, 25, 5):
            for x in range(5):
                lanes[y + x] = b[y + x] ^ ((~b[y + (x + 1) % 5]) & b[y + (x + 2) % 5])
        # iota
        lanes[0] ^= _ROUND_CONSTANTS[rnd]


@kernel
def _absorb(lanes, blocks):
    """XOR each 17-lane block into the state and permute."""
    for i in range(blocks.shape[0]):
        for j in range(17):
            lanes[j] ^= blocks[i, j]
        _f1600(lanes)


def keccak256(data: bytes) -> bytes:
    """Digest ``data`` with legacy Keccak-256 (Ethereum variant, not SHA-3)."""
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise TypeError(f"expected bytes-like input, got {type(data).__name__}")
    data = bytes(data)
    q = RATE_BYTES - (len(data) % RATE_BYTES)
    if q == 1:
        padded = data + b"\x81"
    else:
        padded = data + b"\x01" + b"\x00" * (q - 2) + b"\x80"
    lanes = np.zeros(25, dtype=np.uint64)
    blocks = np.frombuffer(padded, dtype="<u8").reshape(-1, 17)
    _absorb(lanes, blocks)
    return lanes[:4].astype("<u8", copy=False).tobytes()
