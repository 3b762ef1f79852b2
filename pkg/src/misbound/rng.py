"""Seeded random graphs that reproduce bit-for-bit on any platform.

Generator: xorshift64* (Marsaglia shifts 12, 25, 27; output multiplier
0x2545F4914F6CDD1D), with the state initialised from the seed by one
splitmix64 step so that seed 0 is valid.  G(n, 1/2) draws one output word
per 64 vertex pairs and assigns bits LSB-first to pairs in edge-code order.
"""
from __future__ import annotations

from .graph import Graph, graph_from_code, upper_pairs

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 1

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def getbits(self, k: int) -> int:
        out, filled = 0, 0
        while filled < k:
            out |= self.next_u64() << filled
            filled += 64
        return out & ((1 << k) - 1)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        width = max(1, (bound - 1).bit_length())
        while True:
            r = self.getbits(width)
            if r < bound:
                return r


def random_graph(n: int, rng: XorShift64Star) -> Graph:
    """One G(n, 1/2) sample."""
    return graph_from_code(n, rng.getbits(len(upper_pairs(n))))


def random_graphs(n: int, count: int, seed: int) -> list[Graph]:
    rng = XorShift64Star(seed)
    return [random_graph(n, rng) for _ in range(count)]
