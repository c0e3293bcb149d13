"""Signed block permutations of R^9, orbits, and the labelled E7 configuration.

R^9 is split into three coordinate blocks x, y, z.  A :class:`GroupElement9`
permutes the blocks, permutes coordinates inside each block, and may negate
whole blocks; without negations these form the wreath product S3 wr S3.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Optional, Sequence

from .config import Configuration, Ray, canonical_ray, iter_cliques
from .scalar import GoldenInt

Perm3 = tuple[int, int, int]
_ID3: Perm3 = (0, 1, 2)
_PERMS3: list[Perm3] = list(permutations(range(3)))  # type: ignore[arg-type]


@dataclass(frozen=True)
class GroupElement9:
    """Source block ``B`` goes to block ``outer[B]``; its coordinate ``i``
    lands at position ``inner[B][i]`` there, multiplied by ``signs[B]``."""

    outer: Perm3 = _ID3
    inner: tuple[Perm3, Perm3, Perm3] = (_ID3, _ID3, _ID3)
    signs: tuple[int, int, int] = (1, 1, 1)

    def __post_init__(self) -> None:
        for p in (self.outer, *self.inner):
            if sorted(p) != [0, 1, 2]:
                raise ValueError(f"not a permutation of 0..2: {p}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1: {self.signs}")

    @classmethod
    def identity(cls) -> "GroupElement9":
        return cls()

    @classmethod
    def negate_block(cls, block: int) -> "GroupElement9":
        signs = [1, 1, 1]
        signs[block] = -1
        return cls(signs=tuple(signs))  # type: ignore[arg-type]

    @cached_property
    def signed_perm(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(target index, sign) for each of the nine source coordinates."""
        target, sign = [0] * 9, [1] * 9
        for b in range(3):
            for i in range(3):
                target[3 * b + i] = 3 * self.outer[b] + self.inner[b][i]
                sign[3 * b + i] = self.signs[b]
        return tuple(target), tuple(sign)

    def __mul__(self, h: "GroupElement9") -> "GroupElement9":
        """Composition: ``(g * h)`` acts as ``h`` first, then ``g``."""
        outer = tuple(self.outer[h.outer[b]] for b in range(3))
        inner = tuple(
            tuple(self.inner[h.outer[b]][h.inner[b][i]] for i in range(3))
            for b in range(3)
        )
        signs = tuple(self.signs[h.outer[b]] * h.signs[b] for b in range(3))
        return GroupElement9(outer, inner, signs)  # type: ignore[arg-type]

    def inverse(self) -> "GroupElement9":
        inv_outer = [0, 0, 0]
        for b in range(3):
            inv_outer[self.outer[b]] = b
        inner = []
        signs = []
        for c in range(3):
            b = inv_outer[c]
            p = [0, 0, 0]
            for i in range(3):
                p[self.inner[b][i]] = i
            inner.append(tuple(p))
            signs.append(self.signs[b])
        return GroupElement9(tuple(inv_outer), tuple(inner), tuple(signs))  # type: ignore[arg-type]

    def apply_vec(self, v: Sequence[GoldenInt]) -> tuple[GoldenInt, ...]:
        if len(v) != 9:
            raise ValueError(f"expected a 9-dimensional vector, got length {len(v)}")
        target, sign = self.signed_perm
        out: list[GoldenInt] = [GoldenInt()] * 9
        for j in range(9):
            out[target[j]] = v[j] if sign[j] == 1 else -v[j]
        return tuple(out)

    def to_dict(self) -> dict:
        return {"outer": list(self.outer), "inner": [list(p) for p in self.inner], "signs": list(self.signs)}


def act(g: GroupElement9, r: Ray) -> Ray:
    return canonical_ray(g.apply_vec(r.v))


def act_set(g: GroupElement9, rays: Iterable[Ray]) -> frozenset[Ray]:
    return frozenset(act(g, r) for r in rays)


def wreath_generators() -> list[GroupElement9]:
    gens = [
        GroupElement9(outer=(1, 0, 2)),
        GroupElement9(outer=(1, 2, 0)),
    ]
    for b in range(3):
        for p in ((1, 0, 2), (1, 2, 0)):
            inner = [_ID3, _ID3, _ID3]
            inner[b] = p
            gens.append(GroupElement9(inner=tuple(inner)))  # type: ignore[arg-type]
    return gens


def sign_generators() -> list[GroupElement9]:
    return [GroupElement9.negate_block(b) for b in range(3)]


def signed_generators() -> list[GroupElement9]:
    return wreath_generators() + sign_generators()


def wreath_elements() -> list[GroupElement9]:
    """All 1296 elements of S3 wr S3 in a fixed order."""
    return [
        GroupElement9(outer, (p, q, r))
        for outer in _PERMS3
        for p, q, r in product(_PERMS3, repeat=3)
    ]


def signed_elements() -> list[GroupElement9]:
    return [
        GroupElement9(g.outer, g.inner, signs)  # type: ignore[arg-type]
        for g in wreath_elements()
        for signs in product((1, -1), repeat=3)
    ]


def orbit(seed: Ray, generators: Sequence[GroupElement9]) -> list[Ray]:
    """Breadth-first closure of ``seed``; sorted canonically."""
    seen = {seed}
    frontier = deque([seed])
    while frontier:
        r = frontier.popleft()
        for g in generators:
            s = act(g, r)
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return sorted(seen)


def set_orbit(seed: Iterable[Ray], generators: Sequence[GroupElement9]) -> list[frozenset[Ray]]:
    """Orbit of a set of rays under simultaneous action."""
    start = frozenset(seed)
    seen = {start}
    frontier = deque([start])
    while frontier:
        s = frontier.popleft()
        for g in generators:
            t = act_set(g, s)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return sorted(seen, key=lambda s: sorted(s))


# --- E7 on the sum-zero hyperplane of R^8, coordinates indexed by P^1(F_7) --

@dataclass(frozen=True, order=True)
class E7Label:
    kind: str  # lambda, mu, nu, xi, eta
    k: int
    i: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("lambda", "mu", "nu", "xi", "eta"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if not 0 <= self.k < 7:
            raise ValueError("k must lie in F_7")
        if (self.kind in ("xi", "eta")) != (self.i in (1, 2, 3)):
            raise ValueError(f"bad second index for {self.kind}: {self.i}")

    def __str__(self) -> str:
        if self.i is None:
            return f"{self.kind}({self.k})"
        return f"{self.kind}({self.k},{self.i})"


def _pos(k: int) -> int:
    # slot 0 is infinity, slot 1 + k holds a_k
    return 1 + k % 7


def _pm_vector(plus: Iterable[int], with_infinity: bool) -> list[int]:
    v = [-1] * 8
    if with_infinity:
        v[0] = 1
    for k in plus:
        v[_pos(k)] = 1
    return v


def e7_labelled_rays() -> dict[E7Label, Ray]:
    out: dict[E7Label, Ray] = {}
    for k in range(7):
        v = [0] * 8
        v[0], v[_pos(k)] = 1, -1
        out[E7Label("lambda", k)] = canonical_ray(v)
        out[E7Label("mu", k)] = canonical_ray(_pm_vector((k, k + 1, k + 3), True))
        out[E7Label("nu", k)] = canonical_ray(_pm_vector((k, k - 1, k - 3), True))
        for i in (1, 2, 3):
            v = [0] * 8
            v[_pos(k + i)], v[_pos(k - i)] = 1, -1
            out[E7Label("xi", k, i)] = canonical_ray(v)
            out[E7Label("eta", k, i)] = canonical_ray(_pm_vector((k, k + i, k - i), True))
    if len(set(out.values())) != 63:
        raise AssertionError("E7 labelling is not injective")
    return out


E7_BLOCK_NAMES = ("Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q+", "Q-")


def e7_blocks() -> dict[str, list[E7Label]]:
    blocks: dict[str, list[E7Label]] = {}
    for k in range(7):
        blocks[f"Q{k}"] = [E7Label("lambda", k)] + [
            E7Label(kind, k, i) for kind in ("xi", "eta") for i in (1, 2, 3)
        ]
    blocks["Q+"] = [E7Label("mu", k) for k in range(7)]
    blocks["Q-"] = [E7Label("nu", k) for k in range(7)]
    return blocks


def e7_block_indices(c: Configuration) -> list[list[int]]:
    """The nine blocks as index lists into ``c``, in the order Q0..Q6, Q+, Q-."""
    rays = e7_labelled_rays()
    return [[c.index[rays[lab]] for lab in labs] for labs in e7_blocks().values()]


def count_clique_partitions(c: Configuration, size: Optional[int] = None) -> int:
    """Number of partitions of all rays into disjoint ``size``-cliques (default ``d``)."""
    size = c.d if size is None else size
    n = len(c)
    if n == 0:
        return 1
    if size <= 0 or n % size:
        return 0
    rows = [frozenset(q) for q in iter_cliques(c.graph.adj, size)]
    return exact_cover_count(range(n), rows)


count_7clique_partitions = count_clique_partitions


def exact_cover_count(universe: Iterable[int], rows: Sequence[frozenset[int]]) -> int:
    """Count exact covers with Algorithm X, branching on the column with fewest rows."""
    cols: dict[int, set[int]] = {x: set() for x in universe}
    for r, row in enumerate(rows):
        for x in row:
            cols[x].add(r)

    def select(r: int) -> list[set[int]]:
        removed = []
        for x in rows[r]:
            for other in cols[x]:
                for y in rows[other]:
                    if y != x:
                        cols[y].discard(other)
            removed.append(cols.pop(x))
        return removed

    def deselect(r: int, removed: list[set[int]]) -> None:
        for x in reversed(list(rows[r])):
            cols[x] = removed.pop()
            for other in cols[x]:
                for y in rows[other]:
                    if y != x:
                        cols[y].add(other)

    def rec() -> int:
        if not cols:
            return 1
        col = min(cols, key=lambda x: (len(cols[x]), x))
        total = 0
        for r in sorted(cols[col]):
            removed = select(r)
            total += rec()
            deselect(r, removed)
        return total

    return rec()
