"""Seedable deterministic byte generator for protocol randomness.

A SHA-256 counter DRBG: the output stream is a pure function of the seed and
the sequence of requests, so fixed-seed runs reproduce bit-identically across
platforms and the (key, counter) state serializes to a few bytes.  Without an
explicit seed the key is drawn from ``os.urandom``.
"""

from __future__ import annotations

import hashlib
import os

from .encoding import pack_fields

_KEY_BYTES = 32


class Drbg:
    def __init__(self, seed: bytes | int | None = None):
        if seed is None:
            key = os.urandom(_KEY_BYTES)
        else:
            if isinstance(seed, int):
                seed = seed.to_bytes((max(seed.bit_length(), 1) + 7) // 8, "big")
            key = hashlib.sha256(pack_fields(b"graad-drbg", seed)).digest()
        self._key = key
        self._counter = 0

    @classmethod
    def from_state(cls, key: bytes, counter: int) -> "Drbg":
        rng = cls.__new__(cls)
        rng._key = key
        rng._counter = counter
        return rng

    @property
    def state(self) -> tuple[bytes, int]:
        return self._key, self._counter

    def _block(self) -> bytes:
        block = hashlib.sha256(self._key + self._counter.to_bytes(8, "big")).digest()
        self._counter += 1
        return block

    def rand_bytes(self, n: int) -> bytes:
        out = bytearray()
        while len(out) < n:
            out.extend(self._block())
        return bytes(out[:n])

    def randint_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        nbits = bound.bit_length()
        nbytes = (nbits + 7) // 8
        mask = (1 << nbits) - 1
        while True:
            v = int.from_bytes(self.rand_bytes(nbytes), "big") & mask
            if v < bound:
                return v

    def rand_zp(self, p: int) -> int:
        """Uniform in [0, p)."""
        return self.randint_below(p)

    def rand_zp_star(self, p: int) -> int:
        """Uniform in [1, p)."""
        return 1 + self.randint_below(p - 1)

    def spawn(self, label: bytes) -> "Drbg":
        """Independent child stream derived from this generator's key."""
        child = Drbg.__new__(Drbg)
        child._key = hashlib.sha256(pack_fields(b"graad-drbg-child", self._key, label)).digest()
        child._counter = 0
        return child
