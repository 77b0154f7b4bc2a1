"""Deterministic 64-bit PRNG for reproducible law-verification reports.

xorshift64* (Vigna): xorshift state transition followed by a multiplicative
scramble.  The algorithm is fixed here so a (seed, sample_count) pair always
yields the same sample stream on every platform and Python version; the
stdlib Mersenne Twister would also be stable, but pinning the generator in
ten lines keeps the report format self-describing.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_SCRAMBLE = 0x2545F4914F6CDD1D
_DEFAULT_STATE = 0x9E3779B97F4A7C15


class Xorshift64Star:
    def __init__(self, seed: int):
        self.seed = seed
        self.state = seed & _MASK64
        if self.state == 0:
            # all-zero state is a fixed point of xorshift
            self.state = _DEFAULT_STATE

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * _SCRAMBLE) & _MASK64

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction; the tiny bias
        is irrelevant for sampling test tuples)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def shuffled(self, items: list) -> list:
        """Fisher-Yates shuffle of a copy of ``items``."""
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            out[i], out[j] = out[j], out[i]
        return out
