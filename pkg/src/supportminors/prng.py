"""Deterministic random stream built on the ChaCha20 block function (RFC 8439).

A 64-bit seed is expanded to a ChaCha20 key (seed as 8 little-endian bytes,
zero-padded to 32); the nonce is 12 zero bytes and the block counter starts
at 0.  The keystream is consumed as consecutive little-endian 32-bit words,
and bounded draws use rejection sampling, so any conforming ChaCha20
implementation reproduces the same instances byte for byte.
"""

from __future__ import annotations

_MASK = 0xFFFFFFFF
_CONSTANTS = (0x61707865, 0x3320646E, 0x79622D32, 0x6B206574)


def _quarter_round(s: list[int], a: int, b: int, c: int, d: int) -> None:
    s[a] = (s[a] + s[b]) & _MASK
    s[d] ^= s[a]
    s[d] = ((s[d] << 16) | (s[d] >> 16)) & _MASK
    s[c] = (s[c] + s[d]) & _MASK
    s[b] ^= s[c]
    s[b] = ((s[b] << 12) | (s[b] >> 20)) & _MASK
    s[a] = (s[a] + s[b]) & _MASK
    s[d] ^= s[a]
    s[d] = ((s[d] << 8) | (s[d] >> 24)) & _MASK
    s[c] = (s[c] + s[d]) & _MASK
    s[b] ^= s[c]
    s[b] = ((s[b] << 7) | (s[b] >> 25)) & _MASK


def chacha20_block(key: bytes, counter: int, nonce: bytes) -> bytes:
    """One 64-byte ChaCha20 keystream block (20 rounds, RFC 8439 layout)."""
    if len(key) != 32 or len(nonce) != 12:
        raise ValueError("key must be 32 bytes and nonce 12 bytes")
    state = list(_CONSTANTS)
    state += [int.from_bytes(key[4 * i : 4 * i + 4], "little") for i in range(8)]
    state.append(counter & _MASK)
    state += [int.from_bytes(nonce[4 * i : 4 * i + 4], "little") for i in range(3)]
    working = state.copy()
    for _ in range(10):
        _quarter_round(working, 0, 4, 8, 12)
        _quarter_round(working, 1, 5, 9, 13)
        _quarter_round(working, 2, 6, 10, 14)
        _quarter_round(working, 3, 7, 11, 15)
        _quarter_round(working, 0, 5, 10, 15)
        _quarter_round(working, 1, 6, 11, 12)
        _quarter_round(working, 2, 7, 8, 13)
        _quarter_round(working, 3, 4, 9, 14)
    out = bytearray()
    for w, init in zip(working, state):
        out += ((w + init) & _MASK).to_bytes(4, "little")
    return bytes(out)


class ChaChaStream:
    """Seeded uniform integer stream; identical seeds yield identical draws."""

    def __init__(self, seed: int):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        self._key = seed.to_bytes(8, "little") + bytes(24)
        self._nonce = bytes(12)
        self._counter = 0
        self._buf = b""
        self._pos = 0

    def u32(self) -> int:
        """Next keystream word as an unsigned 32-bit little-endian integer."""
        if self._pos >= len(self._buf):
            self._buf = chacha20_block(self._key, self._counter, self._nonce)
            self._counter += 1
            self._pos = 0
        w = int.from_bytes(self._buf[self._pos : self._pos + 4], "little")
        self._pos += 4
        return w

    def below(self, bound: int) -> int:
        """Uniform draw in [0, bound) via rejection sampling on 32-bit words."""
        if not 0 < bound <= 2**32:
            raise ValueError("bound must be in (0, 2**32]")
        limit = (2**32 // bound) * bound
        while True:
            w = self.u32()
            if w < limit:
                return w % bound

    def nonzero_below(self, bound: int) -> int:
        """Uniform draw in [1, bound); always consumes at least one word."""
        if bound < 2:
            raise ValueError("bound must be at least 2")
        return 1 + self.below(bound - 1)
