"""Sampling utilities shared by the property tests."""

from __future__ import annotations

import random
from math import comb

from ksroots.config import Configuration, full_cliques

NAIVE_LIMIT = 150_000


def sample_subconfiguration(c: Configuration, size: int, rng: random.Random) -> Configuration:
    """A random subset of ``c`` seeded with a few of its full cliques, so that
    high-order cliques actually occur in the sample."""
    size = min(size, len(c))
    chosen: list[int] = []
    bases = full_cliques(c)
    for q in rng.sample(bases, min(len(bases), rng.randint(0, 3))):
        for i in q:
            if i not in chosen and len(chosen) < size:
                chosen.append(i)
    rest = [i for i in range(len(c)) if i not in chosen]
    chosen += rng.sample(rest, size - len(chosen))
    chosen.sort()
    return c.subset(chosen, name=f"{c.name}[{size}]")


def naive_feasible(n: int, k: int) -> bool:
    return comb(n, k) <= NAIVE_LIMIT
