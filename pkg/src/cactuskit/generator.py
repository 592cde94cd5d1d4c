"""Seeded random cactus generation.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014), chosen because it
is a few lines in any language and has a published reference output, so a
corpus can be regenerated bit-for-bit elsewhere.

Draw order for :func:`random_cactus`, one 64-bit word per draw:

1. for each block in turn: the attachment vertex (uniform over the vertices
   created so far), the kind (cycle iff ``word < cycle_fraction * 2**64``),
   and, for cycles only, the length (uniform over ``[min_len, max_len]``);
2. one weight per edge, in creation order, uniform over ``edge_weight``;
3. one weight per vertex, in id order, uniform over ``vertex_weight``.

Uniform integers over a span ``s`` reject words ``>= 2**64 - (2**64 % s)`` and
return ``lo + word % s``.  A new cycle of length ``L`` attached at ``a`` gets
fresh ids ``n..n+L-2`` and edges ``a-n, n-(n+1), ..., (n+L-2)-a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next()
            if x < limit:
                return lo + x % span


@dataclass(frozen=True)
class GenSpec:
    block_count: int
    cycle_fraction: Fraction = Fraction(1, 2)
    min_len: int = 3
    max_len: int = 6
    edge_weight: tuple[int, int] = (1, 1)
    vertex_weight: tuple[int, int] = (1, 1)
    seed: int = 0

    def validate(self) -> None:
        if self.block_count < 1:
            raise ValueError("block_count must be positive")
        frac = Fraction(self.cycle_fraction)
        if not 0 <= frac <= 1:
            raise ValueError("cycle_fraction must lie in [0, 1]")
        if not 3 <= self.min_len <= self.max_len:
            raise ValueError("cycle lengths need 3 <= min_len <= max_len")
        lo, hi = self.edge_weight
        if not 1 <= lo <= hi:
            raise ValueError("edge weights need 1 <= lo <= hi")
        lo, hi = self.vertex_weight
        if not 0 <= lo <= hi:
            raise ValueError("vertex weights need 0 <= lo <= hi")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def random_cactus(spec: GenSpec) -> Graph:
    spec.validate()
    rng = SplitMix64(spec.seed)
    threshold = Fraction(spec.cycle_fraction) * (1 << 64)
    n = 1
    edges: list[tuple[int, int]] = []
    for _ in range(spec.block_count):
        a = rng.randint(0, n - 1)
        if rng.next() < threshold:
            length = rng.randint(spec.min_len, spec.max_len)
            ring = [a] + list(range(n, n + length - 1))
            n += length - 1
            for i in range(length):
                edges.append((ring[i], ring[(i + 1) % length]))
        else:
            edges.append((a, n))
            n += 1
    elo, ehi = spec.edge_weight
    weighted = [(u, v, rng.randint(elo, ehi)) for u, v in edges]
    vlo, vhi = spec.vertex_weight
    vweights = [rng.randint(vlo, vhi) for _ in range(n)]
    return Graph(n, weighted, vweights)
