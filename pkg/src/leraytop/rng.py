"""Counter-based deterministic random numbers (splitmix64).

Instances generated from a (seed, counter) pair are reproducible across
platforms and independent of call interleaving.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z):
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class CounterRng:
    """Deterministic stream of 64-bit words keyed by an integer seed."""

    def __init__(self, seed):
        self._state = _mix((int(seed) * _GOLDEN) & _MASK)
        self._counter = 0

    def next_u64(self):
        self._counter += 1
        return _mix((self._state + self._counter * _GOLDEN) & _MASK)

    def uniform(self):
        """A dyadic rational in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)

    def randint(self, n):
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("randint bound must be positive")
        # multiply-shift; bias is negligible for the small n used here
        return (self.next_u64() * n) >> 64

    def sample(self, seq, k):
        """k distinct elements of seq, order of first draw."""
        pool = list(seq)
        out = []
        for _ in range(k):
            out.append(pool.pop(self.randint(len(pool))))
        return out
