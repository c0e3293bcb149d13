"""Root systems G2, F4, E6, E7, E8, H3, H4 as exact Z[tau] vectors.

Every generator rescales so that all roots are integral and share one
length; the scale factor is irrelevant once roots become rays.

========  ======  =====  ===================================  =======
system    roots   rank   model                                scale
========  ======  =====  ===================================  =======
G2        12      2      x+y+z=0 in R^3                       1
F4        48      4      R^4                                  2
E6        72      6      block sums zero in R^9               3
E7        126     7      coordinate sum zero in R^8           2
E8        240     8      D8 plus half-integer vectors         2
H3        30      3      cyclic perms of (1, 1/tau, tau)      tau
H4        120     4      600-cell vertices                    2
========  ======  =====  ===================================  =======
"""

from __future__ import annotations

from itertools import permutations, product

from .config import Configuration, canonical_ray
from .scalar import GoldenInt, GoldenVec, TAU, rank, scale, vec

SYSTEMS = ("G2", "F4", "E6", "E7", "E8", "H3", "H4")
ROOT_COUNTS = {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240, "H3": 30, "H4": 120}
RANKS = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8, "H3": 3, "H4": 4}


def _key(v: GoldenVec):
    return tuple((x.a, x.b) for x in v)


def _finish(vectors) -> list[GoldenVec]:
    return sorted({vec(v) for v in vectors}, key=_key)


def _g2():
    out = set()
    for p in permutations((1, -1, 0)):
        out.add(p)
    for p in permutations((2, -1, -1)):
        out.add(p)
        out.add(tuple(-x for x in p))
    return out


def _f4():
    # long roots +-e_i+-e_j have squared length 2, short roots +-e_i and
    # (+-1/2)^4 have squared length 1; doubling gives (+-2,+-2,0,0),
    # (+-2,0,0,0), (+-1,+-1,+-1,+-1).
    out = set()
    for i, j in product(range(4), repeat=2):
        if i < j:
            for si, sj in product((2, -2), repeat=2):
                v = [0] * 4
                v[i], v[j] = si, sj
                out.add(tuple(v))
    for i in range(4):
        for s in (2, -2):
            v = [0] * 4
            v[i] = s
            out.add(tuple(v))
    out.update(product((1, -1), repeat=4))
    return out


def _e6():
    out = set()
    pairs = [p for p in permutations((1, -1, 0))]
    for block in range(3):
        for p in pairs:
            v = [0] * 9
            v[3 * block : 3 * block + 3] = [3 * x for x in p]
            out.add(tuple(v))
    thirds = [(2, -1, -1), (-1, 2, -1), (-1, -1, 2)]
    for x, y, z in product(thirds, repeat=3):
        v = x + y + z
        out.add(v)
        out.add(tuple(-t for t in v))
    return out


def _e7():
    out = set()
    out.update(permutations((2, -2, 0, 0, 0, 0, 0, 0)))
    out.update(permutations((1, 1, 1, 1, -1, -1, -1, -1)))
    return out


def _e8():
    out = set()
    for i, j in product(range(8), repeat=2):
        if i < j:
            for si, sj in product((2, -2), repeat=2):
                v = [0] * 8
                v[i], v[j] = si, sj
                out.add(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.add(signs)
    return out


def _h3():
    # doubled icosidodecahedron: tau * (+-2, 0, 0) and tau * (+-1, +-1/tau, +-tau),
    # cyclically permuted, all of squared length 4 tau**2; 1/tau = tau - 1.
    inv = GoldenInt(-1, 1)
    out = set()
    base = [vec([2 * s, 0, 0]) for s in (1, -1)]
    for s in product((1, -1), repeat=3):
        base.append(vec([s[0], inv * s[1], TAU * s[2]]))
    for v in base:
        w = scale(TAU, v)
        for shift in range(3):
            out.add(w[shift:] + w[:shift])
    return out


_EVEN_PERMS_4 = [p for p in permutations(range(4)) if sum(
    1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0]


def _h4():
    # doubled 600-cell: (+-2,0,0,0), (+-1)^4, even perms of (+-tau,+-1,+-1/tau,0)
    out = set()
    for i in range(4):
        for s in (2, -2):
            v = [0] * 4
            v[i] = s
            out.add(vec(v))
    for signs in product((1, -1), repeat=4):
        out.add(vec(signs))
    inv = GoldenInt(-1, 1)
    for s in product((1, -1), repeat=3):
        base = (TAU * s[0], GoldenInt(s[1]), inv * s[2], GoldenInt(0))
        for p in _EVEN_PERMS_4:
            out.add(tuple(base[p[i]] for i in range(4)))
    return out


_GENERATORS = {
    "G2": _g2,
    "F4": _f4,
    "E6": _e6,
    "E7": _e7,
    "E8": _e8,
    "H3": _h3,
    "H4": _h4,
}


def generate(system: str) -> list[GoldenVec]:
    """Roots of ``system`` in a fixed sorted order."""
    try:
        gen = _GENERATORS[system]
    except KeyError:
        raise ValueError(f"unknown root system {system!r}") from None
    return _finish(gen())


def projectivize(roots, name: str = "") -> Configuration:
    """One canonical ray per antipodal pair; ``d`` is the rank of the span."""
    roots = [vec(v) for v in roots]
    keys = {_key(v) for v in roots}
    for v in roots:
        if _key(tuple(-x for x in v)) not in keys:
            raise ValueError(f"root set not closed under negation at {_key(v)}")
    rays = sorted({canonical_ray(v) for v in roots})
    return Configuration(rays, rank(roots), name)


def configuration(system: str) -> Configuration:
    return projectivize(generate(system), system)
