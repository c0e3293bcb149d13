"""The saturated extensions of the E6 configuration in R^9.

``A``       36 E6 rays, the orbits of lambda_1 and lambda_2.
``A_ext``   162 rays obtained by placing a copy of the G2 configuration in
            the plane orthogonal to each of the 135 orthogonal 4-tuples of A.
``A~``      A + A_ext (198 rays), equal to the union of the orbits of
            lambda_1..lambda_5 under S3 wr S3.
``A^``      558 rays, the orbits of lambda_1..lambda_6 once block negations
            are added to the group.

:func:`replay_uniqueness_proof` recomputes, step by step, the argument that
A~ has exactly one good colouring, and :func:`replay_a_hat_noncolourability`
finishes the argument that A^ has none.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Optional, Sequence

from . import roots
from .colouring import verify_colouring
from .config import Configuration, Ray, canonical_ray, iter_cliques
from .symmetry import (
    GroupElement9,
    act,
    act_set,
    exact_cover_count,
    orbit,
    set_orbit,
    signed_generators,
    wreath_elements,
    wreath_generators,
)

log = logging.getLogger(__name__)

XI = {1: (2, -1, -1), 2: (-1, 2, -1), 3: (-1, -1, 2)}
THETA = (0, 0, 0)


def _neg(v):
    return tuple(-x for x in v)


def blocks_ray(x, y, z) -> Ray:
    """The ray ``[x; y; z]`` from three coordinate blocks."""
    return canonical_ray(tuple(x) + tuple(y) + tuple(z))


LAMBDA = {
    1: blocks_ray((1, -1, 0), THETA, THETA),
    2: blocks_ray((2, -1, -1), (2, -1, -1), (2, -1, -1)),
    3: blocks_ray((1, -1, 0), (1, -1, 0), THETA),
    4: blocks_ray((2, -1, -1), (-2, 1, 1), THETA),
    5: blocks_ray((-4, 2, 2), (2, -1, -1), (2, -1, -1)),
    6: blocks_ray((2, -1, -1), THETA, THETA),
}

G2_TRIPLES = [(1, -1, 0), (1, 0, -1), (0, 1, -1), (2, -1, -1), (-1, 2, -1), (-1, -1, 2)]

Q1 = frozenset([
    blocks_ray((1, -1, 0), THETA, THETA),
    blocks_ray(THETA, (1, -1, 0), THETA),
    blocks_ray(THETA, THETA, (1, -1, 0)),
    blocks_ray((1, 1, -2), (1, 1, -2), (1, 1, -2)),
])
Q2 = frozenset([
    blocks_ray((1, -1, 0), THETA, THETA),
    blocks_ray((1, 1, -2), (-2, 1, 1), (-2, 1, 1)),
    blocks_ray((1, 1, -2), (1, -2, 1), (1, -2, 1)),
    blocks_ray((1, 1, -2), (1, 1, -2), (1, 1, -2)),
])
Q3 = frozenset([
    blocks_ray((-2, 1, 1), (-2, 1, 1), (-2, 1, 1)),
    blocks_ray((-2, 1, 1), (1, -2, 1), (1, -2, 1)),
    blocks_ray((1, -2, 1), (-2, 1, 1), (1, -2, 1)),
    blocks_ray((1, -2, 1), (1, -2, 1), (-2, 1, 1)),
])

# [xi(1,1,-2); eta(1,1,-2); zeta(1,1,-2)], shared by Q1 and Q3
_ATT_Q1 = frozenset(
    blocks_ray((a, a, -2 * a), (b, b, -2 * b), (c, c, -2 * c)) for a, b, c in G2_TRIPLES
)
# [0,0,0; xi,eta,zeta; -xi,-eta,-zeta]
_ATT_Q2 = frozenset(blocks_ray(THETA, (a, b, c), (-a, -b, -c)) for a, b, c in G2_TRIPLES)

REPRESENTATIVES = {"Q1type": (Q1, _ATT_Q1), "Q2type": (Q2, _ATT_Q2), "Q3type": (Q3, _ATT_Q1)}

# One element of O(lambda_4) plus five rays of A_ext, pairwise orthogonal.
P_SEED = [
    blocks_ray(THETA, (2, -1, -1), (-2, 1, 1)),
    blocks_ray(THETA, (0, 1, -1), (0, 1, -1)),
    blocks_ray(THETA, (0, 1, -1), (0, -1, 1)),
    blocks_ray((-4, 2, 2), (2, -1, -1), (2, -1, -1)),
    blocks_ray((2, -4, 2), (2, -1, -1), (2, -1, -1)),
    blocks_ray((2, 2, -4), (2, -1, -1), (2, -1, -1)),
]


def _s(*pairs):
    """An s-set from (zero block, i, j) triples: [.. xi_i .. -xi_j ..]."""
    out = []
    for zero, i, j in pairs:
        blocks = {"x": [THETA, XI[i], _neg(XI[j])],
                  "y": [_neg(XI[i]), THETA, XI[j]],
                  "z": [XI[i], _neg(XI[j]), THETA]}[zero]
        out.append(blocks_ray(*blocks))
    return frozenset(out)


# The fixed partition of the 27 rays a_i exactly as printed.  Entry 7 repeats
# [-xi_2; 0; xi_1] from entry 4 and never covers [-xi_2; 0; xi_3].
PRINTED_PARTITION = [
    _s(("x", 1, 2), ("x", 2, 3), ("x", 3, 1)),
    _s(("x", 1, 1), ("x", 2, 2), ("x", 3, 3)),
    _s(("y", 1, 1), ("y", 2, 2), ("y", 3, 3)),
    _s(("y", 2, 1), ("y", 3, 2), ("y", 1, 3)),
    _s(("z", 1, 2), ("z", 2, 3), ("z", 3, 1)),
    _s(("z", 1, 1), ("z", 2, 2), ("z", 3, 3)),
    _s(("x", 1, 3), ("y", 2, 1), ("z", 2, 1)),
    _s(("x", 3, 2), ("y", 1, 2), ("z", 1, 3)),
    _s(("x", 2, 1), ("y", 3, 1), ("z", 3, 2)),
]
# Entry 7 with its middle ray replaced by [-xi_2; 0; xi_3], following the
# (i,j), (k,j), (k,i) pattern of entries 8 and 9.
CORRECTED_PARTITION = list(PRINTED_PARTITION)
CORRECTED_PARTITION[6] = _s(("x", 1, 3), ("y", 2, 3), ("z", 2, 1))


def block_negation(block: int) -> GroupElement9:
    return GroupElement9.negate_block(block)


REFLECTIONS = [block_negation(b) for b in range(3)]


# --- constructions -----------------------------------------------------------

@lru_cache(maxsize=None)
def orbits() -> dict[int, tuple[Ray, ...]]:
    """O(lambda_i) under S3 wr S3."""
    gens = wreath_generators()
    return {i: tuple(orbit(r, gens)) for i, r in LAMBDA.items()}


@lru_cache(maxsize=None)
def signed_orbits() -> dict[int, tuple[Ray, ...]]:
    gens = signed_generators()
    return {i: tuple(orbit(r, gens)) for i, r in LAMBDA.items()}


def _union(parts) -> list[Ray]:
    out: set[Ray] = set()
    for p in parts:
        if out & set(p):
            raise AssertionError("orbits are expected to be pairwise disjoint")
        out |= set(p)
    return sorted(out)


@lru_cache(maxsize=None)
def e6_configuration() -> Configuration:
    rays = _union(orbits()[i] for i in (1, 2))
    c = Configuration(rays, 6, "E6")
    if c.ray_set() != roots.configuration("E6").ray_set():
        raise AssertionError("orbits of lambda_1, lambda_2 differ from the E6 roots")
    return c


@lru_cache(maxsize=None)
def four_cliques() -> tuple[frozenset[Ray], ...]:
    """T_1..T_135 in lexicographic order of canonical ray indices."""
    e6 = e6_configuration()
    return tuple(
        frozenset(e6.rays[i] for i in q) for q in iter_cliques(e6.graph.adj, 4)
    )


@dataclass(frozen=True)
class FourCliqueClass:
    cls: str
    members: frozenset[Ray]


@lru_cache(maxsize=None)
def _transport() -> dict[frozenset[Ray], tuple[str, frozenset[Ray]]]:
    """Each E6 4-clique with its class and its G2 attachment.

    Every group element carrying a representative onto a clique is tried;
    they must all carry the attachment to the same six rays.
    """
    table: dict[frozenset[Ray], tuple[str, set[frozenset[Ray]]]] = {}
    for g in wreath_elements():
        for name, (rep, att) in REPRESENTATIVES.items():
            t = act_set(g, rep)
            entry = table.setdefault(t, (name, set()))
            if entry[0] != name:
                raise AssertionError(f"4-clique lies in two classes {entry[0]}, {name}")
            entry[1].add(act_set(g, att))
    out = {}
    for t, (name, atts) in table.items():
        if len(atts) != 1:
            raise AssertionError("G2 attachment depends on the transporting element")
        out[t] = (name, next(iter(atts)))
    return out


def classify_4cliques(e6: Optional[Configuration] = None) -> list[FourCliqueClass]:
    if e6 is not None and e6.ray_set() != e6_configuration().ray_set():
        raise ValueError("classification is defined for the 36-ray E6 configuration only")
    table = _transport()
    cliques = four_cliques()
    if set(cliques) != set(table):
        raise AssertionError("class orbits do not cover the E6 4-cliques")
    return [FourCliqueClass(table[t][0], t) for t in cliques]


def attach_g2(t: Sequence[Ray] | frozenset[Ray]) -> frozenset[Ray]:
    """The six G2 rays placed in the orthogonal plane of 4-clique ``t``."""
    key = frozenset(t)
    try:
        return _transport()[key][1]
    except KeyError:
        raise ValueError("not a 4-clique of the E6 configuration") from None


@lru_cache(maxsize=None)
def a_ext() -> tuple[Ray, ...]:
    return tuple(sorted(set().union(*(attach_g2(t) for t in four_cliques()))))


@lru_cache(maxsize=None)
def build_a_tilde() -> Configuration:
    by_orbits = _union(orbits()[i] for i in range(1, 6))
    by_attachment = sorted(set(e6_configuration().rays) | set(a_ext()))
    if by_orbits != by_attachment:
        raise AssertionError("orbit and G2-attachment constructions of A~ disagree")
    return Configuration(by_orbits, 6, "E6-tilde")


def reflected_copies(c: Configuration) -> list[frozenset[Ray]]:
    return [act_set(g, c.rays) for g in REFLECTIONS]


@lru_cache(maxsize=None)
def build_a_hat() -> Configuration:
    rays = _union(signed_orbits()[i] for i in range(1, 7))
    c = Configuration(rays, 6, "E6-hat")
    tilde = build_a_tilde()
    for part in [tilde.ray_set(), *reflected_copies(tilde)]:
        if not part <= c.ray_set():
            raise AssertionError("A^ does not contain A~ and its reflected copies")
    return c


@lru_cache(maxsize=None)
def p_tuples() -> tuple[frozenset[Ray], ...]:
    """The 27 orthogonal 6-tuples of A_ext generated from the seed tuple."""
    return tuple(set_orbit(P_SEED, wreath_generators()))


# --- the staged uniqueness argument ---------------------------------------------

class ProofStepError(AssertionError):
    def __init__(self, step: str, expected: Any, computed: Any):
        super().__init__(f"step {step}: expected {expected!r}, computed {computed!r}")
        self.step = step


@dataclass
class Step:
    name: str
    claim: str
    expected: Any
    computed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": self.passed,
        }


def _jsonable(x: Any) -> Any:
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Ray):
        return str(x)
    return x


@dataclass
class ProofLedger:
    steps: list[Step] = field(default_factory=list)
    P: list[frozenset[Ray]] = field(default_factory=list)
    a: list[Ray] = field(default_factory=list)
    delta: dict[tuple[int, Ray], tuple[int, int, int]] = field(default_factory=dict)
    D: list[tuple[int, int, int]] = field(default_factory=list)
    G: dict[tuple[int, int, int], list[tuple[int, Ray]]] = field(default_factory=dict)
    sigma: list[tuple] = field(default_factory=list)
    s: list[frozenset[Ray]] = field(default_factory=list)
    partition: list[int] = field(default_factory=list)
    partition_count: int = 0
    alphas: list[tuple[int, ...]] = field(default_factory=list)
    candidates: dict[tuple[int, int], list[frozenset[Ray]]] = field(default_factory=dict)
    L: list[list[tuple[int, ...]]] = field(default_factory=list)
    red_by_k: list[list[frozenset[Ray]]] = field(default_factory=list)
    triples: list[tuple[int, int, int]] = field(default_factory=list)
    triple_unions: list[frozenset[frozenset[Ray]]] = field(default_factory=list)
    red_options: list[frozenset[Ray]] = field(default_factory=list)
    blue_closures: list[frozenset[Ray]] = field(default_factory=list)
    survivors: list[int] = field(default_factory=list)
    red: frozenset[Ray] = frozenset()

    def record(self, name: str, claim: str, expected: Any, computed: Any, strict: bool = False) -> Step:
        step = Step(name, claim, expected, computed)
        self.steps.append(step)
        log.info("step %s: %s -> %s", name, computed, "PASS" if step.passed else "FAIL")
        if strict and not step.passed:
            raise ProofStepError(name, expected, computed)
        return step

    def step(self, name: str) -> Step:
        return next(s for s in self.steps if s.name == name)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]


def replay_uniqueness_proof(
    a_tilde: Optional[Configuration] = None, strict: bool = False
) -> ProofLedger:
    """Recompute every intermediate count of the uniqueness argument for A~.

    Each step is recorded as (expected, computed).  With ``strict`` the first
    mismatch raises :class:`ProofStepError`.  Steps ``d`` and ``e`` carry the
    printed claims; ``d.meets`` and ``e.corrected`` carry the readings that
    the remaining steps build on.
    """
    c = build_a_tilde() if a_tilde is None else a_tilde
    if c.ray_set() != build_a_tilde().ray_set():
        raise ValueError("replay expects the 198-ray configuration A~")
    idx = c.index
    adj = c.graph.adj

    def orth(x: Ray, y: Ray) -> bool:
        return bool(adj[idx[x]] >> idx[y] & 1)

    led = ProofLedger()
    T = four_cliques()
    o4 = set(orbits()[4])
    led.P = list(p_tuples())
    for P in led.P:
        hit = P & o4
        if len(hit) != 1:
            raise ProofStepError("P", 1, len(hit))
        led.a.append(next(iter(hit)))

    # (a) three E6 4-tuples orthogonal to a_i and each b in P_i \ {a_i}
    sizes = set()
    for i, P in enumerate(led.P):
        for b in sorted(P - {led.a[i]}):
            ms = tuple(
                m for m, t in enumerate(T)
                if all(orth(x, led.a[i]) and orth(x, b) for x in t)
            )
            sizes.add(len(ms))
            led.delta[(i, b)] = ms
    led.record("a", "every (a_i, b) is orthogonal to exactly 3 of the 135 E6 4-tuples", {3}, sizes, strict)

    # (b) the distinct triples Delta
    led.D = sorted(set(led.delta.values()))
    led.record("b", "|D| = 45", 45, len(led.D), strict)

    # (c) each Delta arises from three pairs with distinct i
    for d in led.D:
        led.G[d] = sorted((k for k, v in led.delta.items() if v == d), key=lambda k: (k[0], k[1]))
    mult = {len(g) for g in led.G.values()}
    distinct_i = all(len({i for i, _ in g}) == len(g) for g in led.G.values())
    led.record("c", "each Delta comes from exactly 3 pairs (i, b)", ({3}, True), (mult, distinct_i), strict)
    led.sigma = [(d, tuple((led.a[i], b) for i, b in led.G[d])) for d in led.D]
    led.s = [frozenset(led.a[i] for i, _ in led.G[d]) for d in led.D]

    disjoint = {sum(1 for t in led.s if not t & x) for x in led.s}
    meets = {sum(1 for t in led.s if t & x) - 1 for x in led.s}
    led.record("d", "each s_p is disjoint from exactly 12 other s-sets", {12}, disjoint)
    led.record("d.meets", "each s_p meets exactly 12 other s-sets", {12}, meets, strict)

    # (e) the fixed partition s_{p_1}..s_{p_9}
    all_a = frozenset(led.a)
    printed_ok = (
        all(x in led.s for x in PRINTED_PARTITION)
        and frozenset().union(*PRINTED_PARTITION) == all_a
        and sum(map(len, PRINTED_PARTITION)) == len(all_a)
    )
    led.record("e", "the printed s_{p_1}..s_{p_9} partition the 27 rays a_i", True, printed_ok)
    corrected_ok = (
        all(x in led.s for x in CORRECTED_PARTITION)
        and frozenset().union(*CORRECTED_PARTITION) == all_a
        and sum(map(len, CORRECTED_PARTITION)) == len(all_a)
    )
    led.record("e.corrected", "s_{p_1}..s_{p_9} with s_{p_7} repaired partition the a_i",
               True, corrected_ok, strict)
    if not corrected_ok:
        return led
    led.partition = [led.s.index(x) for x in CORRECTED_PARTITION]
    rows = [frozenset(led.a.index(x) for x in t) for t in led.s]
    led.partition_count = exact_cover_count(range(len(led.a)), rows)

    # (f) selector functions alpha with pairwise disjoint T_{i, alpha(i)}
    Tij = [[T[m] for m in led.D[p]] for p in led.partition]
    UV = [[(led.a[i], b) for i, b in led.G[led.D[p]]] for p in led.partition]
    led.alphas = [
        al for al in product(range(3), repeat=9)
        if all(not Tij[i][al[i]] & Tij[j][al[j]] for i, j in combinations(range(9), 2))
    ]
    led.record("f", "exactly 6 selector functions alpha", 6, len(led.alphas), strict)

    # (g) local colourings of c_{i,k} and pairwise compatibility D_k
    sizes_c = set()
    compat = set()
    for k, al in enumerate(led.alphas):
        for i in range(9):
            led.candidates[(i, k)] = local_colourings(Tij[i][al[i]], UV[i], orth)
            sizes_c.add(len(led.candidates[(i, k)]))
        for i1, i2 in combinations(range(9), 2):
            c1, c2 = led.candidates[(i1, k)], led.candidates[(i2, k)]
            compat.add(sum(1 for r1 in c1 for r2 in c2 if _compatible(r1, r2, orth)))
    led.record("g.local", "12 candidate colourings of each c_{i,k}", {12}, sizes_c, strict)
    led.record("g", "42 compatible (l_1, l_2) for every i_1 < i_2", {42}, compat, strict)

    # (h) global choices L_k
    for k in range(len(led.alphas)):
        cand = [led.candidates[(i, k)] for i in range(9)]
        led.L.append(_compatible_tuples(cand, orth))
        led.red_by_k.append(sorted(
            (frozenset().union(*(cand[i][l] for i, l in enumerate(ls))) for ls in led.L[k]),
            key=lambda r: (len(r), sorted(r)),
        ))
    led.record("h", "|L_k| = 5 for every k", {5}, {len(L) for L in led.L}, strict)

    # (i) the red sets R_1..R_5
    families = {frozenset(r) for r in led.red_by_k}
    led.red_options = led.red_by_k[0] if led.red_by_k else []
    led.record("i", "the red sets R_k(l_*) agree for all k and have sizes 27,27,21,21,21",
               (1, [21, 21, 21, 27, 27]), (len(families), sorted(len(r) for r in led.red_options)), strict)

    # (j) triples of k with pairwise disjoint selected 4-tuples
    chosen = [frozenset(Tij[i][al[i]] for i in range(9)) for al in led.alphas]
    led.triples = [
        q for q in combinations(range(len(led.alphas)), 3)
        if all(not chosen[x] & chosen[y] for x, y in combinations(q, 2))
    ]
    domains = [
        frozenset().union(*(Tij[i][al[i]] | {x for pr in UV[i] for x in pr} for i in range(9)))
        for al in led.alphas
    ]
    led.triple_unions = [_triple_unions(q, led.red_by_k, domains, orth) for q in led.triples]
    led.record("j", "exactly 2 triples (q_1, q_2, q_3)", 2, len(led.triples), strict)
    led.record(
        "j.union",
        "both triples give the same red unions, namely R_1..R_5",
        True,
        len(set(led.triple_unions)) == 1 and led.triple_unions[0] == frozenset(led.red_options),
        strict,
    )

    # (k) rule out R_m whose blue closure contains a full orthogonal 6-tuple
    sixes = [frozenset(q) for q in iter_cliques(adj, 6)]
    for m, R in enumerate(led.red_options):
        blue = frozenset(
            x for x in c.rays if any(orth(x, y) for y in R)
        )
        led.blue_closures.append(blue)
        blue_idx = {idx[x] for x in blue}
        if not any(q <= blue_idx for q in sixes):
            led.survivors.append(m)
    led.record("k", "exactly one R_m survives", 1, len(led.survivors), strict)

    # (l) the survivor is O(lambda_4) and is a good colouring
    led.red = led.red_options[led.survivors[0]] if led.survivors else frozenset()
    good = bool(led.red) and verify_colouring(c, [idx[x] for x in led.red])
    led.record("l", "the surviving red set is O(lambda_4), 27 rays, and colours A~ well",
               (True, 27, True), (led.red == frozenset(o4), len(led.red), good), strict)
    return led


def local_colourings(t: frozenset[Ray], uv: Sequence[tuple[Ray, Ray]], orth) -> list[frozenset[Ray]]:
    """Red sets on ``t + uv`` with one red per 6-tuple ``t + {u, v}`` and no orthogonal reds."""
    elems = sorted(t) + [x for pair in uv for x in pair]
    sextets = [t | set(pair) for pair in uv]
    out = []
    for bits in product((0, 1), repeat=len(elems)):
        red = frozenset(e for e, bit in zip(elems, bits) if bit)
        if all(len(red & q) == 1 for q in sextets) and not any(
            orth(x, y) for x, y in combinations(red, 2)
        ):
            out.append(red)
    return out


def _compatible(r1: frozenset[Ray], r2: frozenset[Ray], orth) -> bool:
    return not any(orth(x, y) for x in r1 for y in r2)


def _compatible_tuples(cand: list[list[frozenset[Ray]]], orth) -> list[tuple[int, ...]]:
    n = len(cand)
    ok = {
        (i1, l1, i2, l2): _compatible(cand[i1][l1], cand[i2][l2], orth)
        for i1, i2 in combinations(range(n), 2)
        for l1 in range(len(cand[i1]))
        for l2 in range(len(cand[i2]))
    }
    out: list[tuple[int, ...]] = []

    def rec(ls: list[int]) -> None:
        i = len(ls)
        if i == n:
            out.append(tuple(ls))
            return
        for l in range(len(cand[i])):
            if all(ok[(j, ls[j], i, l)] for j in range(i)):
                ls.append(l)
                rec(ls)
                ls.pop()

    rec([])
    return out


def _triple_unions(q, red_by_k, domains, orth) -> frozenset[frozenset[Ray]]:
    """Unions of one option per k in ``q`` that agree on shared rays and have no orthogonal reds."""
    out = set()
    for combo in product(*(red_by_k[k] for k in q)):
        agree = all(
            not (combo[x] & domains[q[y]]) - combo[y]
            for x in range(3) for y in range(3)
        )
        u = frozenset().union(*combo)
        if agree and not any(orth(x, y) for x, y in combinations(u, 2)):
            out.add(u)
    return frozenset(out)


@dataclass
class HatCertificate:
    red: frozenset[Ray]
    witness: tuple[Ray, ...]
    red_in_witness: int


def replay_a_hat_noncolourability(red_tilde: Optional[frozenset[Ray]] = None) -> HatCertificate:
    """Forced red rays of A^ and an orthogonal 6-tuple that they colour badly."""
    if red_tilde is None:
        red_tilde = frozenset(orbits()[4])
    red_hat = frozenset(red_tilde).union(*(act_set(g, red_tilde) for g in REFLECTIONS))
    c = build_a_hat()
    red_idx = {c.index[r] for r in red_hat}
    for q in iter_cliques(c.graph.adj, 6):
        hits = sum(1 for i in q if i in red_idx)
        if hits != 1:
            return HatCertificate(red_hat, tuple(c.rays[i] for i in q), hits)
    raise AssertionError("no 6-tuple of A^ violates the forced red set")

