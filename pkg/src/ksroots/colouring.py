"""Good bicolourings: verification, a propagating backtracking solver, CNF export.

A colouring is given by its red set.  It is good when every d-clique holds
exactly one red ray and no two orthogonal rays are both red.  Since the rays
of a d-clique are pairwise orthogonal, "at least one red per d-clique" plus
the pairwise rule already gives "exactly one".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .config import Configuration, full_cliques, iter_bits


class Status(str, enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"


@dataclass(frozen=True)
class Colouring:
    red: frozenset[int]

    @classmethod
    def of(cls, red: Iterable[int]) -> "Colouring":
        return cls(frozenset(red))


@dataclass
class ColouringResult:
    status: Status
    witness: Optional[Colouring] = None
    count: Optional[int] = None
    witnesses: Optional[list[Colouring]] = field(default=None, repr=False)

    @property
    def satisfiable(self) -> bool:
        return self.status is Status.SAT


def verify_colouring(
    c: Configuration,
    col: Colouring | Iterable[int],
    cliques: Optional[Sequence[tuple[int, ...]]] = None,
) -> bool:
    red = col.red if isinstance(col, Colouring) else frozenset(col)
    n = len(c)
    for i in red:
        if not 0 <= i < n:
            raise IndexError(f"ray index {i} out of range 0..{n - 1}")
    adj = c.graph.adj
    mask = 0
    for i in red:
        mask |= 1 << i
    if any(adj[i] & mask for i in red):
        return False
    if cliques is None:
        cliques = full_cliques(c)
    return all(sum(1 for i in q if i in red) == 1 for q in cliques)


def brute_force_count(c: Configuration, cliques: Optional[Sequence[tuple[int, ...]]] = None) -> int:
    """Count good colourings by checking all 2**n red sets."""
    n = len(c)
    if n > 24:
        raise ValueError("brute force limited to 24 rays")
    if cliques is None:
        cliques = full_cliques(c)
    adj = c.graph.adj
    cmasks = [sum(1 << i for i in q) for q in cliques]
    total = 0
    for red in range(1 << n):
        if any(adj[i] & red for i in iter_bits(red)):
            continue
        if all((m & red).bit_count() == 1 for m in cmasks):
            total += 1
    return total


class _Search:
    """Backtracking with unit propagation over both constraint kinds.

    Red on a ray forces blue on its orthogonal neighbours; a d-clique with
    one open ray and no red forces that ray red; an all-blue d-clique is a
    conflict.
    """

    def __init__(self, adj: Sequence[int], cliques: Sequence[tuple[int, ...]]):
        self.adj = adj
        self.n = len(adj)
        self.cliques = [tuple(q) for q in cliques]
        self.member: list[list[int]] = [[] for _ in range(self.n)]
        for ci, q in enumerate(self.cliques):
            for v in q:
                self.member[v].append(ci)
        self.val = [-1] * self.n
        self.blue = [0] * len(self.cliques)
        self.red = [0] * len(self.cliques)
        self.trail: list[int] = []
        self.nodes = 0

    def _assign(self, v: int, colour: int, queue: list[tuple[int, int]]) -> bool:
        cur = self.val[v]
        if cur != -1:
            return cur == colour
        self.val[v] = colour
        self.trail.append(v)
        if colour == 1:
            for ci in self.member[v]:
                self.red[ci] += 1
            for u in iter_bits(self.adj[v]):
                if self.val[u] == 1:
                    return False
                if self.val[u] == -1:
                    queue.append((u, 0))
        else:
            for ci in self.member[v]:
                self.blue[ci] += 1
            for ci in self.member[v]:
                if self.red[ci]:
                    continue
                q = self.cliques[ci]
                size = len(q)
                if self.blue[ci] == size:
                    return False
                if self.blue[ci] == size - 1:
                    for u in q:
                        if self.val[u] == -1:
                            queue.append((u, 1))
                            break
        return True

    def _propagate(self, v: int, colour: int) -> bool:
        queue = [(v, colour)]
        while queue:
            u, col = queue.pop()
            if not self._assign(u, col, queue):
                return False
        return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            v = self.trail.pop()
            col = self.val[v]
            self.val[v] = -1
            if col == 1:
                for ci in self.member[v]:
                    self.red[ci] -= 1
            else:
                for ci in self.member[v]:
                    self.blue[ci] -= 1

    def _pick(self) -> int:
        best, best_score = -1, -1
        val, red, member = self.val, self.red, self.member
        for v in range(self.n):
            if val[v] != -1:
                continue
            score = sum(1 for ci in member[v] if not red[ci])
            if score > best_score:
                best, best_score = v, score
        return best

    def run(self) -> Iterator[frozenset[int]]:
        """Yield every good red set; callers may stop early."""
        self.nodes += 1
        v = self._pick()
        if v == -1:
            yield frozenset(i for i in range(self.n) if self.val[i] == 1)
            return
        for colour in (1, 0):
            mark = len(self.trail)
            if self._propagate(v, colour):
                yield from self.run()
            self._undo(mark)


def solve(
    c: Configuration,
    mode: str = "decide",
    cliques: Optional[Sequence[tuple[int, ...]]] = None,
) -> ColouringResult:
    """Decide, count or enumerate good colourings.

    ``mode`` is one of ``"decide"``, ``"count"``, ``"enumerate"``.  Witnesses
    come out in the solver's deterministic branching order.
    """
    if mode not in ("decide", "count", "enumerate"):
        raise ValueError(f"unknown mode {mode!r}")
    if cliques is None:
        cliques = full_cliques(c)
    search = _Search(c.graph.adj, cliques)
    found: list[Colouring] = []
    total = 0
    for red in search.run():
        col = Colouring(red)
        if not verify_colouring(c, col, cliques):
            raise AssertionError("solver produced an invalid colouring")
        total += 1
        if mode == "decide":
            return ColouringResult(Status.SAT, col)
        if mode == "enumerate":
            found.append(col)
        elif not found:
            found.append(col)
    status = Status.SAT if total else Status.UNSAT
    witness = found[0] if found else None
    if mode == "decide":
        return ColouringResult(status)
    return ColouringResult(
        status,
        witness,
        count=total,
        witnesses=found if mode == "enumerate" else None,
    )


def export_cnf(c: Configuration, cliques: Optional[Sequence[tuple[int, ...]]] = None) -> str:
    """DIMACS CNF; variable ``i + 1`` is true when ray ``i`` is red."""
    if cliques is None:
        cliques = full_cliques(c)
    adj = c.graph.adj
    binary = [(i, j) for i in range(len(c)) for j in iter_bits(adj[i]) if j > i]
    lines = [f"c good bicolourings of {c.name or 'configuration'}, d={c.d}"]
    for i, r in enumerate(c.rays):
        coords = " ".join(f"{x.a},{x.b}" for x in r.v)
        lines.append(f"c ray {i + 1} = {coords}")
    lines.append(f"p cnf {len(c)} {len(binary) + len(cliques)}")
    for i, j in binary:
        lines.append(f"-{i + 1} -{j + 1} 0")
    for q in cliques:
        lines.append(" ".join(str(i + 1) for i in q) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    nvars, clauses, cur = 0, [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            _, _, v, _ = line.split()
            nvars = int(v)
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    return nvars, clauses


def dpll_cnf(nvars: int, clauses: Sequence[Sequence[int]]) -> Optional[dict[int, bool]]:
    """Plain DPLL on clause lists; independent of :func:`solve`."""

    def simplify(cls, lit):
        out = []
        for cl in cls:
            if lit in cl:
                continue
            reduced = [x for x in cl if x != -lit]
            out.append(reduced)
        return out

    def rec(cls, model):
        while True:
            if any(len(cl) == 0 for cl in cls):
                return None
            unit = next((cl[0] for cl in cls if len(cl) == 1), None)
            if unit is None:
                break
            model[abs(unit)] = unit > 0
            cls = simplify(cls, unit)
        if not cls:
            return model
        counts: dict[int, int] = {}
        for cl in cls:
            for x in cl:
                counts[x] = counts.get(x, 0) + 1
        lit = max(counts, key=lambda x: (counts[x], -abs(x), x))
        for choice in (lit, -lit):
            res = rec(simplify(cls, choice), {**model, abs(choice): choice > 0})
            if res is not None:
                return res
        return None

    model = rec([list(cl) for cl in clauses], {})
    if model is None:
        return None
    return {v: model.get(v, False) for v in range(1, nvars + 1)}


def blockwise_sdr_search(c: Configuration, blocks: Sequence[Sequence[int]]) -> int:
    """Deepest number of leading blocks admitting pairwise non-orthogonal representatives.

    A good colouring would pick one red ray per block with no two orthogonal,
    so a result below ``len(blocks)`` proves non-colourability.
    """
    n = len(c)
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise ValueError("empty block")
        for i in b:
            if not 0 <= i < n:
                raise ValueError(f"block index {i} out of range")
            if i in seen:
                raise ValueError(f"blocks overlap at ray {i}")
            seen.add(i)
        if any(not c.graph.adjacent(i, j) for i, j in combinations(b, 2)):
            raise ValueError("block is not a clique of mutually orthogonal rays")
    if len(seen) != n:
        raise ValueError("blocks do not cover the configuration")
    adj = c.graph.adj
    best = 0

    def rec(depth: int, forbidden: int) -> bool:
        nonlocal best
        best = max(best, depth)
        if depth == len(blocks):
            return True
        for i in blocks[depth]:
            if not forbidden >> i & 1:
                if rec(depth + 1, forbidden | adj[i]):
                    return True
        return False

    rec(0, 0)
    return best
