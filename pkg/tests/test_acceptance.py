"""Acceptance gate.

Every check carries ``@pytest.mark.criterion(n)``; the terminal summary
prints one PASS/FAIL line per criterion.  All values are exact integers.
"""

from __future__ import annotations

import random
import zlib
from collections import Counter
from itertools import combinations

import pytest

from ksroots import colouring, e6ext, symmetry
from ksroots.config import (
    analyze_saturation,
    canonical_ray,
    count_nonorthogonal_cliques,
    count_orthogonal_cliques,
    naive_clique_count,
    nonorthogonal_profile,
    orthogonal_profile,
)
from ksroots.scalar import GoldenInt, dot, scale

from helpers import naive_feasible, sample_subconfiguration

criterion = pytest.mark.criterion


# --- 1. cardinalities -------------------------------------------------------------

@criterion(1)
@pytest.mark.parametrize(
    "system, rays", [("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("H3", 15), ("H4", 60)]
)
def test_c1_system_rays(systems, system, rays):
    assert len(systems[system]) == rays


@criterion(1)
def test_c1_a_tilde_rays(a_tilde):
    assert len(a_tilde) == 198


@criterion(1)
def test_c1_a_hat_rays(a_hat):
    assert len(a_hat) == 558


# --- 2. E7 profiles ---------------------------------------------------------------

@criterion(2)
def test_c2_e7_clique_profile(systems):
    assert orthogonal_profile(systems["E7"]) == {2: 945, 3: 4095, 4: 4725, 5: 2835, 6: 945, 7: 135}


@criterion(2)
def test_c2_e7_anticlique_profile(systems):
    assert nonorthogonal_profile(systems["E7"], 8) == {
        2: 1008, 3: 5376, 4: 10080, 5: 8064, 6: 2016, 7: 288, 8: 0,
    }


# --- 3. E6 ------------------------------------------------------------------------

@criterion(3)
def test_c3_e6_clique_profile(systems):
    assert orthogonal_profile(systems["E6"]) == {2: 270, 3: 540, 4: 135, 5: 0, 6: 0}


@criterion(3)
def test_c3_e6_degrees(systems):
    e6 = systems["E6"]
    assert [e6.graph.degree(i) for i in range(len(e6))] == [15] * 36


@criterion(3)
def test_c3_e6_four_clique_classes(systems):
    classes = Counter(x.cls for x in e6ext.classify_4cliques(systems["E6"]))
    assert sorted(classes.values()) == [27, 54, 54]
    assert classes == {"Q1type": 27, "Q2type": 54, "Q3type": 54}


# --- 4. extension profiles --------------------------------------------------------

@criterion(4)
@pytest.mark.parametrize("k, expected", [(2, 4995), (3, 25920), (4, 32400), (5, 15552), (6, 2592)])
def test_c4_a_tilde_profile(a_tilde, k, expected):
    assert count_orthogonal_cliques(a_tilde, k).count == expected


@criterion(4)
@pytest.mark.parametrize("k, expected", [(2, 18423), (3, 104978), (4, 136620), (5, 66744), (6, 11124)])
def test_c4_a_hat_profile(a_hat, k, expected):
    assert count_orthogonal_cliques(a_hat, k).count == expected


# --- 5. saturation ----------------------------------------------------------------

@criterion(5)
@pytest.mark.parametrize("system", ["F4", "E7", "E8", "H4", "H3"])
def test_c5_systems_saturated(systems, system):
    s = analyze_saturation(systems[system])
    assert s.saturated and s.witness is None


@criterion(5)
def test_c5_extensions_saturated(a_tilde, a_hat):
    assert analyze_saturation(a_tilde).saturated
    assert analyze_saturation(a_hat).saturated


@criterion(5)
def test_c5_e6_not_saturated_with_ladder(systems):
    s = analyze_saturation(systems["E6"])
    assert not s.saturated
    assert len(s.witness) == 4
    assert (s.ladder[2], s.ladder[3], s.ladder[4]) == (True, True, False)


# --- 6. colourability -------------------------------------------------------------

@criterion(6)
@pytest.mark.parametrize("system", ["F4", "E7", "E8", "H4"])
def test_c6_systems_unsat(systems, system):
    assert colouring.solve(systems[system]).status is colouring.Status.UNSAT


@criterion(6)
def test_c6_a_hat_unsat(a_hat):
    assert colouring.solve(a_hat).status is colouring.Status.UNSAT


@criterion(6)
def test_c6_h3_count(systems):
    res = colouring.solve(systems["H3"], "count")
    assert res.status is colouring.Status.SAT
    assert res.count == 243


@criterion(6)
def test_c6_a_tilde_unique_colouring(a_tilde):
    res = colouring.solve(a_tilde, "enumerate")
    assert res.status is colouring.Status.SAT
    assert res.count == 1
    red = {a_tilde.rays[i] for i in res.witnesses[0].red}
    assert red == set(e6ext.orbits()[4])


# --- 7. E7 structure --------------------------------------------------------------

@criterion(7)
def test_c7_blocks_partition_into_7_cliques(systems):
    e7 = systems["E7"]
    blocks = symmetry.e7_block_indices(e7)
    assert len(blocks) == 9
    assert sorted(i for b in blocks for i in b) == list(range(63))
    for b in blocks:
        assert len(b) == 7
        assert all(e7.graph.adjacent(i, j) for i in b for j in b if i != j)


@criterion(7)
def test_c7_partition_count(systems):
    assert symmetry.count_clique_partitions(systems["E7"]) == 960


@criterion(7)
def test_c7_sdr_search_depth(systems):
    e7 = systems["E7"]
    depth = colouring.blockwise_sdr_search(e7, symmetry.e7_block_indices(e7))
    assert 7 <= depth < 9


@criterion(7)
def test_c7_lambda_rays_pairwise_nonorthogonal(systems):
    e7 = systems["E7"]
    lab = symmetry.e7_labelled_rays()
    lam = [lab[symmetry.E7Label("lambda", k)] for k in range(7)]
    blocks = symmetry.e7_blocks()
    # one lambda ray in each of seven different blocks
    homes = {name for name, members in blocks.items() for x in members if x.kind == "lambda"}
    assert len(homes) == 7
    assert not any(x.is_orthogonal(y) for x in lam for y in lam)
    assert all(x in e7 for x in lam)


# --- 8. extension cross-validation ------------------------------------------------

@criterion(8)
def test_c8_orbit_and_attachment_constructions_agree(a_tilde):
    orbits = e6ext.orbits()
    by_orbits = frozenset().union(*(frozenset(orbits[i]) for i in range(1, 6)))
    by_attachment = e6ext.e6_configuration().ray_set() | frozenset(e6ext.a_ext())
    assert by_orbits == by_attachment == a_tilde.ray_set()


@criterion(8)
def test_c8_p_tuples_partition_a_ext():
    ext = frozenset(e6ext.a_ext())
    o4 = frozenset(e6ext.orbits()[4])
    tuples = e6ext.p_tuples()
    assert len(ext) == 162
    assert len(tuples) == 27
    assert sum(map(len, tuples)) == 162
    assert frozenset().union(*tuples) == ext
    assert all(len(p & o4) == 1 for p in tuples)


# --- 9. proof replay --------------------------------------------------------------

@criterion(9)
@pytest.mark.parametrize("step", list("abcdefghijkl"))
def test_c9_proof_step(ledger, step):
    s = ledger.step(step)
    assert s.computed == s.expected, s.claim


@criterion(9)
def test_c9_proof_expected_values(ledger):
    expected = {
        "a": {3}, "b": 45, "c": ({3}, True), "d": {12}, "e": True, "f": 6,
        "g": {42}, "h": {5}, "i": (1, [21, 21, 21, 27, 27]), "j": 2, "k": 1,
        "l": (True, 27, True),
    }
    assert {k: ledger.step(k).expected for k in expected} == expected


@criterion(9)
def test_c9_red_hat_and_violating_clique(ledger, a_hat):
    cert = e6ext.replay_a_hat_noncolourability(ledger.red)
    assert len(cert.red) == 54
    assert len(cert.witness) == 6
    assert all(x.is_orthogonal(y) for x in cert.witness for y in cert.witness if x != y)
    assert all(x in a_hat for x in cert.witness)
    assert cert.red_in_witness != 1


# --- 10. property suites ----------------------------------------------------------

def _random_scalar(rng: random.Random) -> GoldenInt:
    while True:
        x = GoldenInt(rng.randint(-9, 9), rng.randint(-9, 9))
        if x:
            return x


@criterion(10)
def test_c10_canonical_ray_invariance(systems, a_hat):
    rng = random.Random(20260901)
    pool = [r for c in systems.values() for r in c] + list(a_hat)
    cases = 0
    while cases < 10_000:
        if rng.random() < 0.5:
            base = rng.choice(pool).v
        else:
            n = rng.randint(2, 9)
            base = tuple(GoldenInt(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n))
            if not any(base):
                continue
        r = canonical_ray(base)
        assert canonical_ray(r.v) == r
        assert canonical_ray(scale(_random_scalar(rng), base)) == r
        assert canonical_ray(scale(_random_scalar(rng) * rng.randint(1, 7), r.v)) == r
        cases += 1
    assert cases >= 10_000


@criterion(10)
@pytest.mark.parametrize("name", ["G2", "F4", "E6", "E7", "E8", "H3", "H4", "E6-tilde", "E6-hat"])
def test_c10_clique_counter_vs_naive(systems, a_tilde, a_hat, name):
    c = {"E6-tilde": a_tilde, "E6-hat": a_hat}.get(name) or systems[name]
    rng = random.Random(zlib.crc32(name.encode()))
    compared = 0
    for size in (8, 12, 16, 20, 28, 40):
        for _ in range(2):
            sub = sample_subconfiguration(c, size, rng)
            for k in range(2, c.d + 1):
                if naive_feasible(len(sub), k):
                    assert count_orthogonal_cliques(sub, k).count == naive_clique_count(sub, k)
                    compared += 1
            for q in (2, 3):
                if naive_feasible(len(sub), q):
                    assert count_nonorthogonal_cliques(sub, q).count == _naive_anticliques(sub, q)
    assert compared > 0


def _naive_anticliques(sub, q):
    return sum(
        1
        for t in combinations(sub.rays, q)
        if not any(x.is_orthogonal(y) for x, y in combinations(t, 2))
    )


@criterion(10)
@pytest.mark.parametrize("name", ["G2", "F4", "E6", "E7", "E8", "H3", "H4", "E6-tilde", "E6-hat"])
def test_c10_solver_count_vs_brute_force(systems, a_tilde, a_hat, name):
    c = {"E6-tilde": a_tilde, "E6-hat": a_hat}.get(name) or systems[name]
    rng = random.Random(7 * len(c) + c.d)
    for size in (6, 10, 14, 20):
        sub = sample_subconfiguration(c, size, rng)
        res = colouring.solve(sub, "count")
        assert res.count == colouring.brute_force_count(sub)
        assert (res.status is colouring.Status.SAT) == (res.count > 0)


@criterion(10)
def test_c10_group_action_preserves_orthogonality(a_hat):
    rng = random.Random(9)
    group = symmetry.signed_elements()
    rays = list(a_hat)
    seen = Counter()
    for _ in range(10_000):
        g = rng.choice(group)
        r, s = rng.choice(rays), rng.choice(rays)
        gr, gs = symmetry.act(g, r), symmetry.act(g, s)
        assert dot(g.apply_vec(r.v), g.apply_vec(s.v)) == dot(r.v, s.v)
        assert gr.is_orthogonal(gs) == r.is_orthogonal(s)
        seen[r.is_orthogonal(s)] += 1
    assert seen[True] > 0 and seen[False] > 0
