"""Seeded, reproducible instance generators for tests and benchmarks.

All randomness comes from SplitMix64 (Steele, Lea & Flood's 64-bit
mixer), implemented here in a dozen lines so byte-identical corpora can
be regenerated from the same seed in any language.  Derived values are
fixed conventions: integers in [0, k) by modulo reduction of the next
64-bit word, floats in [0, 1) from its top 53 bits.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, replace

from .graph import build_graph
from .instance import Instance

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream: state advances by the golden-gamma constant."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound) by modulo reduction."""
        return self.next_u64() % bound

    def unit(self) -> float:
        """Float in [0, 1) from the top 53 bits of the next word."""
        return (self.next_u64() >> 11) * 2.0**-53

    def chance(self, p: float) -> bool:
        return self.unit() < p


@dataclass(frozen=True)
class GenConfig:
    """Parameters for gen_random: sizes, seed, and expected pairwise sharing."""

    seed: int
    n: int
    m: int
    max_size: int
    overlap: float

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if not 1 <= self.max_size <= self.n:
            raise ValueError(f"max_size must lie in [1, {self.n}], got {self.max_size}")
        if not 0.0 <= self.overlap <= 1.0:
            raise ValueError(f"overlap must lie in [0, 1], got {self.overlap}")


def _pick_element(rng, overlap, members, used, unused, n):
    if used and rng.chance(overlap):
        pool = [e for e in used if e not in members]
        if pool:
            return pool[rng.below(len(pool))]
    if unused:
        e = unused.pop(rng.below(len(unused)))
        insort(used, e)
        return e
    pool = [e for e in range(n) if e not in members]
    if pool:
        return pool[rng.below(len(pool))]
    return None  # subset already holds the whole ground set


def gen_random(cfg: GenConfig) -> Instance:
    """Random instance; ``overlap`` is the per-slot chance of reusing an
    element some earlier subset already holds.

    At overlap 0 subsets draw fresh elements while any remain, so with
    n >= m * max_size the result is pairwise disjoint.  Weights are
    uniform in [0, 10).  Same config, same instance, bit for bit.
    """
    rng = SplitMix64(cfg.seed)
    unused = list(range(cfg.n))
    used: list[int] = []  # sorted, so candidate pools are deterministic
    subsets: list[tuple[int, ...]] = []
    weights: list[float] = []
    for _ in range(cfg.m):
        size = 1 + rng.below(cfg.max_size)
        members: set[int] = set()
        for _ in range(size):
            e = _pick_element(rng, cfg.overlap, members, used, unused, cfg.n)
            if e is None:
                break
            members.add(e)
        subsets.append(tuple(sorted(members)))
        weights.append(10.0 * rng.unit())
    return Instance(n=cfg.n, subsets=tuple(subsets), weights=tuple(weights))


def gen_path(m: int, seed: int) -> Instance:
    """Chain of m subsets whose intersection graph is a simple path.

    Subset i holds private elements 2i, 2i+1 plus one link element shared
    with subset i+1; weights are seeded uniform [0, 10).
    """
    if m < 1:
        raise ValueError(f"path needs at least 1 subset, got {m}")
    rng = SplitMix64(seed)
    subsets = []
    for i in range(m):
        elems = [2 * i, 2 * i + 1]
        if i > 0:
            elems.append(2 * m + i - 1)
        if i < m - 1:
            elems.append(2 * m + i)
        subsets.append(tuple(sorted(elems)))
    n = 2 * m + max(0, m - 1)
    weights = tuple(10.0 * rng.unit() for _ in range(m))
    return Instance(n=n, subsets=tuple(subsets), weights=weights)


def gen_ring(m: int, seed: int) -> Instance:
    """Cycle of m subsets whose intersection graph is a simple ring (m >= 3)."""
    if m < 3:
        raise ValueError(f"ring needs at least 3 subsets, got {m}")
    rng = SplitMix64(seed)
    subsets = []
    for i in range(m):
        elems = [2 * i, 2 * i + 1, 2 * m + i, 2 * m + (i - 1) % m]
        subsets.append(tuple(sorted(elems)))
    weights = tuple(10.0 * rng.unit() for _ in range(m))
    return Instance(n=3 * m, subsets=tuple(subsets), weights=weights)


def gen_planted(
    n: int, k: int, noise: int, seed: int
) -> tuple[Instance, tuple[int, ...]]:
    """Instance with a known optimal-coverage selection planted inside.

    The ground set is partitioned into k blocks (the planted subsets, at
    indices 0..k-1), then ``noise`` strict sub-blocks are added.  The
    planted selection covers every element, so nothing covers more.
    Returns the instance and the planted indices.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    if k > n:
        raise ValueError(f"cannot plant {k} disjoint nonempty subsets in {n} elements")
    if noise < 0:
        raise ValueError(f"noise must be nonnegative, got {noise}")
    base, extra = divmod(n, k)
    blocks: list[tuple[int, ...]] = []
    at = 0
    for i in range(k):
        width = base + (1 if i < extra else 0)
        blocks.append(tuple(range(at, at + width)))
        at += width
    eligible = [b for b in blocks if len(b) >= 2]
    if noise > 0 and not eligible:
        raise ValueError("noise subsets need a planted block of at least 2 elements")
    rng = SplitMix64(seed)
    subsets = list(blocks)
    for _ in range(noise):
        block = eligible[rng.below(len(eligible))]
        size = 1 + rng.below(len(block) - 1)  # strict sub-block
        pool = list(block)
        members = [pool.pop(rng.below(len(pool))) for _ in range(size)]
        subsets.append(tuple(sorted(members)))
    weights = tuple(10.0 * rng.unit() for _ in subsets)
    return Instance(n=n, subsets=tuple(subsets), weights=weights), tuple(range(k))


def gen_degree_bounded(cfg: GenConfig, max_degree: int, attempts: int = 10000) -> Instance:
    """First gen_random draw from seeds cfg.seed, cfg.seed+1, ... whose
    intersection graph stays within ``max_degree``."""
    for offset in range(attempts):
        inst = gen_random(replace(cfg, seed=(cfg.seed + offset) & MASK64))
        graph = build_graph(inst)
        if all(len(nbrs) <= max_degree for nbrs in graph.adjacency):
            return inst
    raise ValueError(
        f"no instance within degree {max_degree} after {attempts} attempts"
    )
