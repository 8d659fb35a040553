"""Tabulated data for the modular families of M_n-polarized K3 surfaces.

All values are stored verbatim: partitions of the ramification over the
a-orbifold point, the orbifold signatures of the moduli curves, component
counts of the fibre over lambda = 0 in ramified covers, and the ADE
configuration of the generic fibre.  Partitions are canonical descending
tuples throughout the package.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import NotAllowedPartition, OutOfTable, UnsupportedN

SUPPORTED_N = (2, 3, 4, 5, 6, 7, 8, 9, 11)

Partition = tuple


def canonical(parts: Iterable[int]) -> tuple:
    """Sort a partition into descending order."""
    return tuple(sorted((int(p) for p in parts), reverse=True))


def check_n(n: int) -> int:
    if n not in SUPPORTED_N:
        raise UnsupportedN(f"n={n} is not one of {SUPPORTED_N}")
    return n


# --------------------------------------------------------------------------
# orbifold points of the moduli curve

@dataclass(frozen=True)
class Elliptic:
    order: int

    def __str__(self):
        return f"elliptic({self.order})"


@dataclass(frozen=True)
class Cusp:
    width: int

    def __str__(self):
        return f"cusp(width {self.width})"


@dataclass(frozen=True)
class OrbifoldSignature:
    n: int
    orbifold_type: tuple
    zero_point: object
    q: int
    lambda_labels: tuple
    infinity_cusp_width: int = 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "orbifold_type": [_fmt_order(a) for a in self.orbifold_type],
            "zero_point": str(self.zero_point),
            "q": self.q,
            "lambda_labels": list(self.lambda_labels),
            "infinity_cusp_width": self.infinity_cusp_width,
        }


INF = float("inf")


def _fmt_order(a):
    return "∞" if a == INF else int(a)


_CUBIC = "λ³-20λ²+56λ-44"

# n -> (orbifold type, point at lambda = 0, lambda_i labels)
_ORBIFOLD = {
    2: ((2, 4, INF), Elliptic(4), ("256",)),
    3: ((2, 6, INF), Elliptic(6), ("108",)),
    4: ((2, INF, INF), Cusp(2), ("64",)),
    5: ((2, 2, 2, INF), Elliptic(2), ("22+10√5", "22-10√5")),
    6: ((2, 2, INF, INF), Cusp(1), ("17+12√2", "17-12√2")),
    7: ((2, 2, 3, INF), Elliptic(3), ("-1", "27")),
    8: ((2, 2, INF, INF), Cusp(1), ("12+8√2", "12-8√2")),
    9: ((2, 2, INF, INF), Cusp(1), ("9+6√3", "9-6√3")),
    11: ((2, 2, 2, 2, INF), Elliptic(2),
         tuple(f"root {i} of {_CUBIC}" for i in (1, 2, 3))),
}


def orbifold_signature(n: int) -> OrbifoldSignature:
    check_n(n)
    otype, zero, labels = _ORBIFOLD[n]
    q = otype.count(2) - (1 if zero == Elliptic(2) else 0)
    if q != len(labels):
        raise AssertionError(f"orbifold table row {n} is inconsistent")
    return OrbifoldSignature(n=n, orbifold_type=otype, zero_point=zero, q=q,
                             lambda_labels=labels, infinity_cusp_width=1)


# --------------------------------------------------------------------------
# allowable ramification profiles over lambda = 0

_ALLOWED = {
    2: ["1,1", "1,2", "1,3", "1,4", "2,2", "2,3", "2,4", "3,3", "3,4", "4,4",
        "5", "6", "7", "8"],
    3: ["1,1", "1,2", "1,3", "2,2", "2,3", "3,3", "4", "5", "6"],
    4: ["1,1", "1,2", "2,2", "3", "4"],
    5: ["1,1", "1,2", "2,2", "3", "4"],
    6: ["1,1", "2"],
    7: ["1,1", "2", "3"],
    8: ["1,1", "2"],
    9: ["1,1", "2"],
    11: ["1,1", "2"],
}
ALLOWED_PARTITIONS = {
    n: frozenset(canonical(int(x) for x in row.split(",")) for row in rows)
    for n, rows in _ALLOWED.items()
}


def allowed_zero_partitions(n: int) -> frozenset:
    return ALLOWED_PARTITIONS[check_n(n)]


# --------------------------------------------------------------------------
# components of the fibre over lambda = 0

class Marker(enum.Enum):
    PLAIN = ""
    STAR = "*"
    DAGGER = "†"
    STAR_DAGGER = "*†"

    @property
    def star(self) -> bool:
        return self in (Marker.STAR, Marker.STAR_DAGGER)

    @property
    def dagger(self) -> bool:
        return self in (Marker.DAGGER, Marker.STAR_DAGGER)


@dataclass(frozen=True)
class ComponentEntry:
    count: int
    marker: Marker = Marker.PLAIN

    def __str__(self):
        return f"{self.count}{self.marker.value}"

    @classmethod
    def parse(cls, cell: str) -> "ComponentEntry":
        digits = cell.rstrip("*†")
        return cls(int(digits), Marker(cell[len(digits):]))


_ZERO_FIBRES = {
    2: "31 11 4 1* 31 11 4 1*",
    3: "21 6 1 21 6 1*†",
    4: "15 3* 18 6*",
    5: "11 1* 11 1*",
    6: "8* 26*",
    7: "6 15 1*†",
    8: "4* 10*",
    9: "3* 6*",
    11: "1† 1*†",
}
ZERO_FIBRE_TABLE = {
    n: {y: ComponentEntry.parse(cell) for y, cell in enumerate(row.split(), start=1)}
    for n, row in _ZERO_FIBRES.items()
}


def zero_fibre_components(n: int, y: int, table: dict | None = None) -> ComponentEntry:
    table = ZERO_FIBRE_TABLE if table is None else table
    try:
        return table[n][y]
    except KeyError:
        raise OutOfTable(f"no entry for n={n}, ramification {y}") from None


def max_zero_column(n: int, table: dict | None = None) -> int:
    table = ZERO_FIBRE_TABLE if table is None else table
    return max(table[check_n(n)])


# --------------------------------------------------------------------------
# correction term for non-generic profiles over lambda = 0

_DELTA = {
    (2, (3, 3)): 2, (2, (7,)): 2,
    (2, (3, 1)): 1, (2, (3, 2)): 1, (2, (4, 3)): 1,
    (2, (5,)): 1, (2, (6,)): 1, (2, (8,)): 1,
    (3, (5,)): 1,
    (5, (3,)): 1, (5, (4,)): 1,
}


def delta_correction(n: int, zero_partition) -> int:
    y = canonical(zero_partition)
    if y not in allowed_zero_partitions(n):
        raise NotAllowedPartition(f"{list(y)} is not allowed over lambda=0 for n={n}")
    return _DELTA.get((n, y), 0)


# --------------------------------------------------------------------------
# generic fibre singularities

_SINGULARITIES = {
    2: [("A3", 6)],
    3: [("A1", 3), ("A2", 6)],
    4: [("A1", 12)],
    5: [("A1", 3), ("D4", 3)],
    6: [("A1", 3), ("A2", 2), ("A3", 2)],
    7: [("A1", 1), ("A2", 3), ("A3", 1), ("A4", 1)],
    8: [("A1", 6), ("A2", 3)],
    9: [("A1", 3), ("A2", 3), ("D4", 1)],
    11: [("A1", 2), ("A2", 1), ("A3", 2)],
}

# documentation only; never evaluated
FAMILY_EQUATIONS = {
    2: ("P3[x,y,z,t]", "t^4 + λxyz(x+y+z-t) = 0"),
    3: ("P1[r,s] x P2[x,y,z]", "s^2z^3 + λr(r-s)xy(z-x-y) = 0"),
    4: ("P1 x P1 x P1", "s1^2s2^2s3^2 - λr1(s1-r1)r2(s2-r2)r3(s3-r3) = 0"),
    5: ("P3[x,y,z,t]", "(x^2+xy+xz+xt+yz+yt+zt)^2 - λxyzt = 0"),
    6: ("P3[x,y,z,t]", "(x+z+t)(x+y+z+t)(z+t)(y+z) - λxyzt = 0"),
    7: ("P3[x,y,z,t]", "(x+y+z+t)(y+z+t)(z+t)^2 + (x+y+z+t)^2yz - λxyzt = 0"),
    8: ("P3[x,y,z,t]", "(x+y+z+t)(x+t)(y+t)(z+t) - λxyzt = 0"),
    9: ("P3[x,y,z,t]", "(x+y+z)(xt^2+yt^2+zt^2+xyt+xzt+yzt+xyz) - λxyzt = 0"),
    11: ("P3[x,y,z,t]", "(z+t)(x+y+t)(xy+zt)+x^2y^2+xyz^2+3xyzt - λxyzt = 0"),
}


def generic_fibre_singularities(n: int) -> list:
    return list(_SINGULARITIES[check_n(n)])


def ade_rank(symbol: str) -> int:
    """Rank of an ADE root lattice given as e.g. 'A3', 'D4', 'E8'."""
    return int(symbol[1:])


def ade_rank_sum(n: int) -> int:
    return sum(ade_rank(t) * count for t, count in generic_fibre_singularities(n))


def dump_tables() -> dict:
    """All embedded tables as JSON-ready data keyed by n."""
    key = lambda n: str(n)  # noqa: E731
    return {
        "orbifold_points": {key(n): orbifold_signature(n).as_dict() for n in SUPPORTED_N},
        "allowed_zero_partitions": {
            key(n): [list(p) for p in sorted(ALLOWED_PARTITIONS[n], key=lambda p: (sum(p), p))]
            for n in SUPPORTED_N
        },
        "zero_fibre_components": {
            key(n): {str(y): str(e) for y, e in ZERO_FIBRE_TABLE[n].items()}
            for n in SUPPORTED_N
        },
        "delta": {
            key(n): [{"partition": list(y), "delta": v}
                     for (m, y), v in sorted(_DELTA.items()) if m == n]
            for n in SUPPORTED_N
        },
        "generic_fibre_singularities": {
            key(n): [[t, c] for t, c in _SINGULARITIES[n]] for n in SUPPORTED_N
        },
        "families": {
            key(n): {"ambient": a, "equation": e} for n, (a, e) in FAMILY_EQUATIONS.items()
        },
    }
