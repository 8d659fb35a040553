"""Rank-3 local systems on P^1 described by local monodromy classes.

A class is either semisimple, given by three eigenvalue exponents e with
eigenvalues exp(2 pi i e), or a single 3x3 Jordan block with eigenvalue
exponent 0 or 1/2.  Nothing here needs explicit matrices: the H^1 rank only
depends on the dimension of the fixed space at each point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .covers import BranchData, partitions_of
from .errors import (DomainMismatch, EmptySystem, InternalInconsistency,
                     NegativeRank, NonZeroDefect, UnsupportedN)
from .modular import cusp_count, elliptic_counts, genus_x0_plus, k_smooth
from .permsearch import MAX_DEGREE, realizable_cycle_types
from .tables import SUPPORTED_N, orbifold_signature

RANK = 3


def _frac(x) -> Fraction:
    return Fraction(x) % 1


def _fmt(x: Fraction) -> str:
    return str(x) if x.denominator != 1 else str(x.numerator)


class LocalMonodromyClass:
    """Common interface of the two class variants."""

    @property
    def fixed_dim(self) -> int:
        raise NotImplementedError

    @property
    def order(self):
        raise NotImplementedError

    @property
    def R(self) -> int:
        return RANK - self.fixed_dim

    @property
    def is_identity(self) -> bool:
        return self.R == 0


@dataclass(frozen=True)
class Semisimple(LocalMonodromyClass):
    exponents: tuple

    def __init__(self, *exponents):
        if len(exponents) == 1 and isinstance(exponents[0], (tuple, list)):
            exponents = tuple(exponents[0])
        if len(exponents) != RANK:
            raise ValueError("a rank-3 class needs three exponents")
        object.__setattr__(self, "exponents", tuple(sorted(_frac(e) for e in exponents)))

    @property
    def fixed_dim(self) -> int:
        return sum(1 for e in self.exponents if e == 0)

    @property
    def order(self) -> int:
        return math.lcm(*(e.denominator for e in self.exponents))

    def __str__(self):
        return "Semisimple(" + ",".join(_fmt(e) for e in self.exponents) + ")"


@dataclass(frozen=True)
class FullJordan(LocalMonodromyClass):
    eps: Fraction

    def __init__(self, eps=0):
        eps = _frac(eps)
        if eps not in (0, Fraction(1, 2)):
            raise ValueError("Jordan eigenvalue exponent must be 0 or 1/2")
        object.__setattr__(self, "eps", eps)

    @property
    def fixed_dim(self) -> int:
        return 1 if self.eps == 0 else 0

    @property
    def order(self) -> float:
        return math.inf

    def __str__(self):
        return f"FullJordan({_fmt(self.eps)})"


HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
FRICKE = Semisimple(0, 0, HALF)
ELLIPTIC2 = Semisimple(0, HALF, HALF)
ELLIPTIC3 = Semisimple(0, THIRD, 2 * THIRD)
CUSP = FullJordan(0)
IDENTITY = Semisimple(0, 0, 0)


def class_power(c: LocalMonodromyClass, e: int) -> LocalMonodromyClass:
    if e < 1:
        raise ValueError("exponent must be positive")
    if isinstance(c, Semisimple):
        return Semisimple(*(e * x for x in c.exponents))
    return FullJordan(e * c.eps)


@dataclass(frozen=True)
class Rotation:
    theta: Fraction

    def __init__(self, theta):
        object.__setattr__(self, "theta", _frac(theta))


class _Parabolic:
    def __repr__(self):
        return "Parabolic"


Parabolic = _Parabolic()


def sym_square_class(c) -> LocalMonodromyClass:
    """Class of Sym^2 of a weight-one local monodromy (rotation or parabolic)."""
    if isinstance(c, Rotation):
        return Semisimple(2 * c.theta, 0, -2 * c.theta)
    if c is Parabolic:
        return CUSP
    raise TypeError(f"expected Rotation or Parabolic, got {c!r}")


@dataclass(frozen=True)
class LocalSystemOnP1:
    points: tuple
    base_genus: int = 0
    rank: int = RANK

    def __post_init__(self):
        pts = tuple((str(lab), c) for lab, c in self.points if not c.is_identity)
        labels = [lab for lab, _ in pts]
        if len(set(labels)) != len(labels):
            raise ValueError("point labels must be distinct")
        object.__setattr__(self, "points", pts)

    def R_values(self) -> tuple:
        return tuple(c.R for _, c in self.points)

    def as_dict(self) -> dict:
        return {"rank": self.rank, "base_genus": self.base_genus,
                "points": [{"label": lab, "class": str(c), "R": c.R} for lab, c in self.points]}


# class at lambda = 0 for the labeled systems; lambda_i always carry FRICKE
_ZERO_CLASS = {
    2: Semisimple(Fraction(1, 4), HALF, Fraction(3, 4)),
    3: Semisimple(THIRD, HALF, 2 * THIRD),
    4: FullJordan(HALF),
    5: ELLIPTIC2,
    6: CUSP,
    7: ELLIPTIC3,
    8: CUSP,
    9: CUSP,
    11: FRICKE,
}


def zero_class(n: int) -> LocalMonodromyClass:
    if n not in _ZERO_CLASS:
        raise UnsupportedN(f"no labeled zero point for n={n}")
    return _ZERO_CLASS[n]


def _generic_multiset(n: int) -> list:
    nu2, nu3 = elliptic_counts(n)
    return ([FRICKE] * k_smooth(n) + [ELLIPTIC2] * (nu2 // 2)
            + [ELLIPTIC3] * (nu3 // 2) + [CUSP] * (cusp_count(n) // 2))


def _sort_key(c):
    return (str(type(c).__name__), str(c))


def vplus_system(n: int) -> LocalSystemOnP1:
    """Local monodromy of V_n^+ on X_0(n)^+."""
    if n < 2:
        raise UnsupportedN("need n >= 2")
    if n in SUPPORTED_N:
        sig = orbifold_signature(n)
        pts = [(lab, FRICKE) for lab in sig.lambda_labels]
        pts += [("0", zero_class(n)), ("∞", CUSP)]
        system = LocalSystemOnP1(tuple(pts), base_genus=0)
        if n > 4:
            got = sorted((c for _, c in system.points), key=_sort_key)
            want = sorted(_generic_multiset(n), key=_sort_key)
            if got != want:
                raise InternalInconsistency(f"labeled classes for n={n} disagree with the generic list")
        return system
    pts = []
    for name, classes in (("fricke", [FRICKE] * k_smooth(n)),
                          ("e2", [ELLIPTIC2] * (elliptic_counts(n)[0] // 2)),
                          ("e3", [ELLIPTIC3] * (elliptic_counts(n)[1] // 2)),
                          ("cusp", [CUSP] * (cusp_count(n) // 2))):
        pts += [(f"{name}{i + 1}", c) for i, c in enumerate(classes)]
    return LocalSystemOnP1(tuple(pts), base_genus=genus_x0_plus(n))


def h1_rank(V: LocalSystemOnP1) -> int:
    """sum R(p) + 2(g - 1) rank."""
    if not V.points and V.base_genus == 0:
        raise EmptySystem("an empty local system on P^1 has no meaningful H^1 rank")
    value = sum(V.R_values()) + 2 * (V.base_genus - 1) * V.rank
    if value < 0:
        raise NegativeRank(f"H^1 rank came out as {value}")
    return value


def pullback_system(n: int, b: BranchData) -> LocalSystemOnP1:
    """g^* V_n^+ for the cover g described by b."""
    if b.n != n:
        raise DomainMismatch(f"branch datum is for n={b.n}, not n={n}")
    if b.hurwitz_defect != 0:
        raise NonZeroDefect(f"Hurwitz defect is {b.hurwitz_defect}; the source is not P^1")
    sig = orbifold_signature(n)
    pts = []
    pts += [(f"∞.{i + 1}", class_power(CUSP, x)) for i, x in enumerate(b.part_infinity)]
    pts += [(f"0.{i + 1}", class_power(zero_class(n), y)) for i, y in enumerate(b.part_zero)]
    for lab, z_part in zip(sig.lambda_labels, b.part_lambda):
        pts += [(f"{lab}.{i + 1}", class_power(FRICKE, z)) for i, z in enumerate(z_part)]
    return LocalSystemOnP1(tuple(pts), base_genus=0)


def monodromy_profile(V: LocalSystemOnP1) -> tuple:
    """Sorted orders of the non-trivial local monodromies (inf last)."""
    return tuple(sorted(c.order for _, c in V.points))


@dataclass(frozen=True)
class CoverDescriptor:
    d: int
    partitions: tuple
    r_extra: int
    witness: object

    def as_dict(self) -> dict:
        return {"d": self.d, "r": self.r_extra,
                "partitions": {lab: list(p) for lab, p in self.partitions}}


def profile_preserving_covers(V: LocalSystemOnP1, d_max: int) -> list:
    """Realizable genus-0 covers of degree 2..d_max branched over V's points
    (plus simple branching elsewhere) whose pullback has V's profile."""
    target = monodromy_profile(V)
    labels = [lab for lab, _ in V.points]
    classes = [c for _, c in V.points]
    out = []
    for d in range(2, min(d_max, MAX_DEGREE) + 1):
        parts = partitions_of(d)
        for choice in product(parts, repeat=len(classes)):
            r = 2 * d - 2 - sum(d - len(p) for p in choice)
            if r < 0:
                continue
            orders = [class_power(c, e).order for c, p in zip(classes, choice) for e in p
                      if not class_power(c, e).is_identity]
            if tuple(sorted(orders)) != target:
                continue
            simple = (2,) + (1,) * (d - 2)
            witness = realizable_cycle_types(list(choice) + [simple] * r, d,
                                             labels=labels + [f"r{i + 1}" for i in range(r)])
            if witness is not None:
                out.append(CoverDescriptor(d, tuple(zip(labels, choice)), r, witness))
    return out
