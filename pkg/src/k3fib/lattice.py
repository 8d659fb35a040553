"""Integral lattices, discriminant groups, and the map SL2 -> SO(1,2).

The map is evaluated over Q(i*sqrt(n)) with exact rational coordinates so
that identities such as A(conj_fricke) == IOTA are exact equalities.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .errors import DegenerateLattice, InvalidSpan, NotUnimodular


@dataclass(frozen=True)
class Lattice:
    label: str
    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        if any(len(row) != len(g) for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(len(g)) for j in range(len(g))):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        if not self.gram:
            return 1
        return int(Matrix(self.gram).det())

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(u[i] * self.gram[i][j] * v[j]
                   for i in range(self.rank) for j in range(self.rank))


@dataclass(frozen=True)
class DiscriminantGroup:
    invariant_factors: tuple

    @property
    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{f}" for f in self.invariant_factors)


# E8 Dynkin diagram: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
_E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]


def _e8_gram():
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = 1
    return g


def hyperbolic_plane() -> Lattice:
    return Lattice("H", ((0, 1), (1, 0)))


def e8() -> Lattice:
    return Lattice("E8", _e8_gram())


def span(m: int) -> Lattice:
    if m == 0:
        raise InvalidSpan("<0> is degenerate")
    return Lattice(f"<{m}>", ((m,),))


def builtin_lattice(name: str, m: int | None = None) -> Lattice:
    key = name.upper()
    if key == "H":
        return hyperbolic_plane()
    if key == "E8":
        return e8()
    if key == "SPAN":
        if m is None:
            raise InvalidSpan("Span needs a generator norm")
        return span(m)
    raise ValueError(f"unknown lattice {name!r}")


def direct_sum(*lattices: Lattice, label: str | None = None) -> Lattice:
    size = sum(L.rank for L in lattices)
    gram = [[0] * size for _ in range(size)]
    offset = 0
    for L in lattices:
        for i, row in enumerate(L.gram):
            gram[offset + i][offset:offset + L.rank] = row
        offset += L.rank
    if label is None:
        label = " + ".join(L.label for L in lattices)
    return Lattice(label, gram)


def mn_lattice(n: int) -> Lattice:
    """H + E8 + E8 + <-2n>, the generic Neron-Severi lattice."""
    return direct_sum(hyperbolic_plane(), e8(), e8(), span(-2 * n), label=f"M_{n}")


def mn_perp(n: int) -> Lattice:
    """H + <2n> in the ordered basis (f, e, g), e generating <2n>."""
    if n < 1:
        raise InvalidSpan("n must be positive")
    gram = ((0, 0, 1), (0, 2 * n, 0), (1, 0, 0))
    return Lattice(f"M_{n}^perp = H + <{2 * n}>, basis (f, e, g), e^2 = {2 * n}", gram)


def signed_pairing(n: int) -> tuple:
    """Gram matrix of M_n^perp in the basis (f, e, -g)."""
    return ((0, 0, -1), (0, 2 * n, 0), (-1, 0, 0))


def discriminant_group(lattice: Lattice) -> DiscriminantGroup:
    if lattice.det() == 0:
        raise DegenerateLattice(f"{lattice.label} is degenerate")
    factors = invariant_factors(Matrix(lattice.gram), domain=ZZ)
    return DiscriminantGroup(tuple(abs(int(f)) for f in factors if abs(int(f)) > 1))


# --------------------------------------------------------------------------
# exact arithmetic in Q(omega), omega^2 = -n

@dataclass(frozen=True)
class QuadRingElement:
    """rat + surd * omega with omega = i*sqrt(n)."""

    rat: Fraction
    surd: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rat", Fraction(self.rat))
        object.__setattr__(self, "surd", Fraction(self.surd))

    @classmethod
    def omega(cls, n: int) -> "QuadRingElement":
        return cls(Fraction(0), Fraction(1), n)

    def _coerce(self, other) -> "QuadRingElement":
        if isinstance(other, QuadRingElement):
            if other.n != self.n:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, numbers.Rational):
            return QuadRingElement(Fraction(other), Fraction(0), self.n)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRingElement(self.rat + o.rat, self.surd + o.surd, self.n)

    __radd__ = __add__

    def __neg__(self):
        return QuadRingElement(-self.rat, -self.surd, self.n)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRingElement(self.rat * o.rat - self.n * self.surd * o.surd,
                               self.rat * o.surd + self.surd * o.rat, self.n)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRingElement":
        return QuadRingElement(self.rat, -self.surd, self.n)

    def norm(self) -> Fraction:
        return self.rat * self.rat + self.n * self.surd * self.surd

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(i sqrt n)")
        num = self * o.conjugate()
        return QuadRingElement(num.rat / nrm, num.surd / nrm, self.n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.rat == o.rat and self.surd == o.surd

    def __hash__(self):
        if self.surd == 0:
            return hash(self.rat)
        return hash((self.rat, self.surd, self.n))

    def __repr__(self):
        if self.surd == 0:
            return str(self.rat)
        return f"({self.rat} + {self.surd}*w)"


def _lift(x, n: int) -> QuadRingElement:
    if isinstance(x, QuadRingElement):
        return x
    return QuadRingElement(Fraction(x), Fraction(0), n)


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), start=0 * a[0][0])
             for j in range(len(b[0]))] for i in range(len(a))]


def det3(m) -> object:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def dolgachev_map(gamma, n: int) -> list:
    """Image of a 2x2 matrix under A, as a 3x3 matrix over Q(i*sqrt(n)).

    The result acts on M_n^perp in the basis (f, e, -g).  gamma must have
    determinant +1 or -1; the complex-rotated Fricke element has -1.
    """
    if all(isinstance(x, numbers.Rational) for row in gamma for x in row):
        # rational input stays in Q; much faster than the field arithmetic
        (a, b), (c, d) = [[Fraction(x) for x in row] for row in gamma]
    else:
        (a, b), (c, d) = [[_lift(x, n) for x in row] for row in gamma]
    det = a * d - b * c
    if det != 1 and det != -1:
        raise NotUnimodular(f"det(gamma) = {det}")
    return [
        [a * a, -2 * n * a * b, n * b * b],
        [-(a * c) / n, a * d + b * c, -(b * d)],
        [c * c / n, -2 * c * d, d * d],
    ]


def conj_fricke(n: int) -> list:
    """sqrt(-1) times the Fricke involution, with entries in Q(i*sqrt(n))."""
    w = QuadRingElement.omega(n)
    zero = QuadRingElement(0, 0, n)
    return [[zero, -w / n], [w, zero]]


IOTA = ((0, 0, -1), (0, 1, 0), (-1, 0, 0))


def is_isometry(m, n: int) -> bool:
    if all(isinstance(x, numbers.Rational) for row in m for x in row):
        g = [[Fraction(x) for x in row] for row in signed_pairing(n)]
    else:
        g = [[_lift(x, n) for x in row] for row in signed_pairing(n)]
    mt = [list(col) for col in zip(*m)]
    return _matmul(_matmul(mt, g), m) == g


def matmul(a, b):
    return _matmul(a, b)
