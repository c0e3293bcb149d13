"""Projective configurations: canonical rays, orthogonality graphs, cliques.

Adjacency rows are Python ints used as bitsets; bit ``j`` of ``adj[i]`` is
set when ray ``i`` is orthogonal to ray ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .scalar import GoldenInt, GoldenVec, dot, rank, vec


@dataclass(frozen=True, order=False)
class Ray:
    """A projective line, stored as its canonical representative."""

    v: GoldenVec

    def __post_init__(self) -> None:
        if not any(self.v):
            raise ValueError("zero vector has no ray")

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple((x.a, x.b) for x in self.v)

    def __lt__(self, other: "Ray") -> bool:
        return self.key < other.key

    def __len__(self) -> int:
        return len(self.v)

    def is_orthogonal(self, other: "Ray") -> bool:
        return not dot(self.v, other.v)

    def to_pairs(self) -> list[list[int]]:
        return [x.to_pair() for x in self.v]

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.v) + "]"


def canonical_ray(v: Sequence) -> Ray:
    """Canonical representative of the line spanned by ``v``.

    ``v`` is scaled so its first nonzero coordinate becomes 1 (working in
    Q(tau)), then multiplied by the least positive integer clearing all
    denominators.  Proportional inputs give identical rays.
    """
    v = vec(v)
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector has no ray")
    if all(x.b == 0 for x in v):
        g = 0
        for x in v:
            g = gcd(g, x.a)
        s = g if lead.a > 0 else -g
        return Ray(tuple(GoldenInt(x.a // s, 0) for x in v))
    # v / lead = v * conj(lead) / norm(lead)
    c = lead.conj()
    n = lead.norm()
    num = [(x * c) for x in v]
    g = abs(n)
    for x in num:
        g = gcd(g, x.a, x.b)
    s = g if n > 0 else -g
    return Ray(tuple(GoldenInt(x.a // s, x.b // s) for x in num))


class Configuration:
    """An ordered set of distinct rays in a space of logical dimension ``d``.

    Rays are kept in the order given; use :meth:`sorted` for the canonical
    ordering.  ``d`` defaults to the rank of the span.
    """

    def __init__(self, rays: Iterable[Ray], d: Optional[int] = None, name: str = ""):
        self.rays: tuple[Ray, ...] = tuple(rays)
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("duplicate rays in configuration")
        lengths = {len(r) for r in self.rays}
        if len(lengths) > 1:
            raise ValueError(f"rays of differing lengths {sorted(lengths)}")
        self.n = lengths.pop() if lengths else 0
        self.d = self.span_rank() if d is None else int(d)
        if self.d < 0:
            raise ValueError("negative dimension")
        self.name = name
        self.index = {r: i for i, r in enumerate(self.rays)}

    def __len__(self) -> int:
        return len(self.rays)

    def __iter__(self) -> Iterator[Ray]:
        return iter(self.rays)

    def __contains__(self, r: object) -> bool:
        return r in self.index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.rays == other.rays and self.d == other.d

    def __repr__(self) -> str:
        return f"Configuration({self.name or '?'}: {len(self)} rays, d={self.d})"

    def span_rank(self) -> int:
        return rank(r.v for r in self.rays)

    def sorted(self) -> "Configuration":
        return Configuration(sorted(self.rays), self.d, self.name)

    def subset(self, indices: Iterable[int], name: str = "") -> "Configuration":
        return Configuration((self.rays[i] for i in indices), self.d, name)

    def ray_set(self) -> frozenset[Ray]:
        return frozenset(self.rays)

    @cached_property
    def graph(self) -> "OrthoGraph":
        return ortho_graph(self)


@dataclass(frozen=True)
class OrthoGraph:
    adj: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.adj)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def complement(self) -> "OrthoGraph":
        full = (1 << len(self.adj)) - 1
        return OrthoGraph(tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))

    def matrix(self) -> np.ndarray:
        n = len(self.adj)
        m = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(self.adj):
            for j in iter_bits(row):
                m[i, j] = True
        return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def ortho_graph(c: Configuration) -> OrthoGraph:
    """Exact orthogonality graph.

    Dot products are computed with int64 matrix products on the two
    integer components, which is exact for the small entries used here.
    """
    n = len(c)
    if n == 0:
        return OrthoGraph(())
    a = np.array([[x.a for x in r.v] for r in c.rays], dtype=np.int64)
    b = np.array([[x.b for x in r.v] for r in c.rays], dtype=np.int64)
    if np.abs(a).max(initial=0) > 2**20 or np.abs(b).max(initial=0) > 2**20:
        raise OverflowError("coordinates too large for exact int64 products")
    bb = b @ b.T
    ra = a @ a.T + bb
    rb = a @ b.T + b @ a.T + bb
    zero = (ra == 0) & (rb == 0)
    np.fill_diagonal(zero, False)
    adj = []
    for i in range(n):
        row = 0
        for j in np.flatnonzero(zero[i]):
            row |= 1 << int(j)
        adj.append(row)
    return OrthoGraph(tuple(adj))


def _upper(adj: Sequence[int]) -> list[int]:
    return [row & ~((1 << (i + 1)) - 1) for i, row in enumerate(adj)]


def clique_profile(adj: Sequence[int], kmax: int) -> list[int]:
    """``counts[k]`` = number of k-cliques for k = 0..kmax."""
    up = _upper(adj)
    counts = [0] * (kmax + 1)

    def rec(cand: int, depth: int) -> None:
        counts[depth] += 1
        if depth == kmax:
            return
        while cand:
            low = cand & -cand
            cand ^= low
            rec(cand & up[low.bit_length() - 1], depth + 1)

    rec((1 << len(adj)) - 1, 0)
    return counts


def iter_cliques(adj: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques as increasing index tuples, in lexicographic order."""
    up = _upper(adj)
    path: list[int] = []

    def rec(cand: int) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            yield tuple(path)
            return
        need = k - len(path)
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            yield from rec(cand & up[v])
            path.pop()

    if k == 0:
        yield ()
        return
    yield from rec((1 << len(adj)) - 1)


@dataclass
class CliqueReport:
    k: int
    count: int
    cliques: Optional[list[tuple[int, ...]]] = field(default=None, repr=False)


def count_orthogonal_cliques(c: Configuration, k: int, materialize: bool = False) -> CliqueReport:
    if not 2 <= k <= max(c.d, 2):
        raise ValueError(f"k={k} outside 2..{c.d}")
    return _report(c.graph.adj, k, materialize)


def count_nonorthogonal_cliques(c: Configuration, q: int, materialize: bool = False) -> CliqueReport:
    if q < 2:
        raise ValueError("q must be at least 2")
    return _report(c.graph.complement().adj, q, materialize)


def _report(adj: Sequence[int], k: int, materialize: bool) -> CliqueReport:
    if materialize:
        found = list(iter_cliques(adj, k))
        return CliqueReport(k, len(found), found)
    return CliqueReport(k, clique_profile(adj, k)[k])


def orthogonal_profile(c: Configuration, kmax: Optional[int] = None) -> dict[int, int]:
    kmax = c.d if kmax is None else kmax
    counts = clique_profile(c.graph.adj, kmax)
    return {k: counts[k] for k in range(2, kmax + 1)}


def nonorthogonal_profile(c: Configuration, qmax: int) -> dict[int, int]:
    counts = clique_profile(c.graph.complement().adj, qmax)
    return {q: counts[q] for q in range(2, qmax + 1)}


def naive_clique_count(c: Configuration, k: int) -> int:
    """Reference count by filtering all k-subsets; only for small inputs.

    Orthogonality comes straight from :func:`dot`, not from :attr:`graph`.
    """
    n = len(c)
    orth = [[i != j and c.rays[i].is_orthogonal(c.rays[j]) for j in range(n)] for i in range(n)]
    return sum(
        1
        for sub in combinations(range(n), k)
        if all(orth[x][y] for x, y in combinations(sub, 2))
    )


@dataclass
class Saturation:
    saturated: bool
    witness: Optional[tuple[int, ...]]
    ladder: dict[int, bool]


def analyze_saturation(c: Configuration) -> Saturation:
    """One DFS over all orthogonal cliques.

    A clique whose common orthogonal neighbourhood is empty is maximal; the
    configuration is saturated iff every maximal clique has size ``d``.
    ``ladder[k]`` records whether every k-clique extends to a (k+1)-clique.
    """
    adj = c.graph.adj
    d = c.d
    up = _upper(adj)
    n = len(adj)
    ladder = {k: True for k in range(1, d)}
    witness: list[Optional[tuple[int, ...]]] = [None]
    path: list[int] = []

    def rec(cand: int, common: int) -> None:
        k = len(path)
        if common == 0 and k < d:
            if k >= 1:
                ladder[k] = False
            if witness[0] is None or k > len(witness[0]):
                witness[0] = tuple(path)
        if k >= d:
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            rec(cand & up[v], common & adj[v])
            path.pop()

    full = (1 << n) - 1
    rec(full, full)
    if n == 0:
        witness[0] = ()
    saturated = witness[0] is None
    return Saturation(saturated, witness[0], ladder)


def is_saturated(c: Configuration) -> tuple[bool, Optional[tuple[int, ...]]]:
    s = analyze_saturation(c)
    return s.saturated, s.witness


def extendability_ladder(c: Configuration) -> dict[int, bool]:
    return analyze_saturation(c).ladder


def full_cliques(c: Configuration) -> list[tuple[int, ...]]:
    """The d-cliques (orthogonal bases drawn from ``c``)."""
    return list(iter_cliques(c.graph.adj, c.d))
