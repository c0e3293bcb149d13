"""Exact arithmetic in the golden integers Z[tau], tau**2 = tau + 1.

Values are immutable. Vectors are plain tuples of :class:`GoldenInt`.
Nothing in this package touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

# Entries in this artifact stay tiny; anything past this is a logic bug.
INT_LIMIT = 2**62


def _checked(n: int) -> int:
    if -INT_LIMIT <= n <= INT_LIMIT:
        return n
    raise OverflowError(f"golden-integer component {n} exceeds {INT_LIMIT}")


@dataclass(frozen=True, slots=True)
class GoldenInt:
    """The number ``a + b*tau`` with integer ``a`` and ``b``."""

    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, x: Union["GoldenInt", int, Sequence[int]]) -> "GoldenInt":
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        a, b = x
        return cls(int(a), int(b))

    def __add__(self, other: "GoldenInt | int") -> "GoldenInt":
        o = GoldenInt.coerce(other)
        return GoldenInt(_checked(self.a + o.a), _checked(self.b + o.b))

    __radd__ = __add__

    def __sub__(self, other: "GoldenInt | int") -> "GoldenInt":
        o = GoldenInt.coerce(other)
        return GoldenInt(_checked(self.a - o.a), _checked(self.b - o.b))

    def __rsub__(self, other: "GoldenInt | int") -> "GoldenInt":
        return GoldenInt.coerce(other) - self

    def __neg__(self) -> "GoldenInt":
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other: "GoldenInt | int") -> "GoldenInt":
        return gi_mul(self, GoldenInt.coerce(other))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conj(self) -> "GoldenInt":
        """Galois conjugate, sending tau to 1 - tau."""
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """Field norm ``x * conj(x)`` (a rational integer)."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def sign(self) -> int:
        return gi_sign(self)

    def to_pair(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}t"
        return f"{self.a}{self.b:+d}t"


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
TAU = GoldenInt(0, 1)

GoldenVec = Tuple[GoldenInt, ...]


def gi_mul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    """Product in Z[tau] using the rewrite tau**2 = tau + 1."""
    bb = x.b * y.b
    return GoldenInt(
        _checked(x.a * y.a + bb),
        _checked(x.a * y.b + x.b * y.a + bb),
    )


def gi_sign(x: GoldenInt) -> int:
    """Sign of the real number ``a + b(1 + sqrt5)/2``.

    Twice the value is ``(2a + b) + b*sqrt5``; the comparison is done on
    integers, squaring only when the two parts have opposite signs.
    """
    p = 2 * x.a + x.b
    q = x.b
    if p >= 0 and q >= 0:
        return 0 if p == 0 and q == 0 else 1
    if p <= 0 and q <= 0:
        return -1
    # opposite signs: compare p**2 with 5 q**2
    lhs, rhs = p * p, 5 * q * q
    if lhs == rhs:  # impossible for integers unless both zero
        return 0
    dominant = p if lhs > rhs else q
    return 1 if dominant > 0 else -1


def vec(entries: Iterable[Union[GoldenInt, int, Sequence[int]]]) -> GoldenVec:
    """Build a GoldenVec from ints, ``(a, b)`` pairs or GoldenInts."""
    return tuple(GoldenInt.coerce(e) for e in entries)


def dot(u: Sequence[GoldenInt], v: Sequence[GoldenInt]) -> GoldenInt:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    sa = sb = 0
    for x, y in zip(u, v):
        bb = x.b * y.b
        sa += x.a * y.a + bb
        sb += x.a * y.b + x.b * y.a + bb
    return GoldenInt(_checked(sa), _checked(sb))


def scale(c: GoldenInt, v: Sequence[GoldenInt]) -> GoldenVec:
    return tuple(gi_mul(c, x) for x in v)


# --- the field Q(tau), used only for rank computations ---------------------

QTau = Tuple[Fraction, Fraction]


def _q_mul(x: QTau, y: QTau) -> QTau:
    bb = x[1] * y[1]
    return (x[0] * y[0] + bb, x[0] * y[1] + x[1] * y[0] + bb)


def _q_inv(x: QTau) -> QTau:
    a, b = x
    n = a * a + a * b - b * b
    if n == 0:
        raise ZeroDivisionError("inverse of zero in Q(tau)")
    return ((a + b) / n, -b / n)


def rank(vectors: Iterable[Sequence[GoldenInt]]) -> int:
    """Rank over Q(tau) by exact Gaussian elimination."""
    rows: list[list[QTau]] = [
        [(Fraction(x.a), Fraction(x.b)) for x in v] for v in vectors
    ]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(r, len(rows)) if rows[i][col] != (0, 0)), None
        )
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = _q_inv(rows[r][col])
        rows[r] = [_q_mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != (0, 0):
                f = rows[i][col]
                rows[i] = [
                    (x[0] - p[0], x[1] - p[1])
                    for x, p in zip(rows[i], (_q_mul(f, y) for y in rows[r]))
                ]
        r += 1
        if r == len(rows):
            break
    return r

