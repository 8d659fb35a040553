"""Branch data of covers P^1 -> X_0(n)^+ and their realizability.

A branch datum fixes the degree d, the ramification profiles over the cusp
at infinity, over lambda = 0 and over each lambda_i, and a number r of
further simple branch points.  The source is rational exactly when the
Hurwitz defect vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import InvalidInput, NonZeroDefect, UnsupportedN
from .permsearch import PermWitness, realizable_cycle_types
from .tables import SUPPORTED_N, allowed_zero_partitions, canonical, orbifold_signature

__all__ = ["BranchData", "PermWitness", "hurwitz_defect", "partitions_of",
           "enumerate_branch_data", "dedup_lambda", "realizable",
           "realizable_cycle_types", "branch_labels"]


def partitions_of(d: int) -> list:
    """All partitions of d as descending tuples, in ascending lexicographic order."""
    out = [canonical(k for k, m in p.items() for _ in range(m))
           for p in _sympy_partitions(d)]
    return sorted(out)


def _part(value, d: int | None = None) -> tuple:
    p = canonical(value)
    if not p or any(x < 1 for x in p):
        raise InvalidInput(f"{list(value)} is not a partition")
    if d is not None and sum(p) != d:
        raise InvalidInput(f"{list(p)} does not sum to the degree {d}")
    return p


@dataclass(frozen=True)
class BranchData:
    n: int
    d: int
    part_infinity: tuple
    part_zero: tuple
    part_lambda: tuple
    r_extra: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise InvalidInput("degree must be at least 1")
        if self.r_extra < 0:
            raise InvalidInput("r_extra must be non-negative")
        object.__setattr__(self, "part_infinity", _part(self.part_infinity, self.d))
        object.__setattr__(self, "part_zero", _part(self.part_zero, self.d))
        lam = tuple(_part(z, self.d) for z in self.part_lambda)
        object.__setattr__(self, "part_lambda", lam)
        if self.n in SUPPORTED_N:
            q = orbifold_signature(self.n).q
            if len(lam) != q:
                raise InvalidInput(f"n={self.n} needs {q} lambda partitions, got {len(lam)}")
        if self.hurwitz_defect == 0 and (self.m_odd - self.q * self.d) % 2:
            raise AssertionError("parity of odd lambda parts is inconsistent")

    @classmethod
    def solve(cls, n: int, infinity, zero, lambdas) -> "BranchData":
        """Build the datum whose r_extra makes the Hurwitz defect vanish."""
        infinity = canonical(infinity)
        d = sum(infinity)
        zero = canonical(zero)
        lambdas = tuple(canonical(z) for z in lambdas)
        r = len(infinity) + len(zero) + sum(len(z) for z in lambdas) - len(lambdas) * d - 2
        if r < 0:
            raise NonZeroDefect(f"no r >= 0 balances the Hurwitz identity (would need r={r})")
        return cls(n, d, infinity, zero, lambdas, r)

    @property
    def q(self) -> int:
        return len(self.part_lambda)

    @property
    def k(self) -> int:
        return len(self.part_infinity)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.part_zero)

    @property
    def m(self) -> tuple:
        return tuple(len(z) for z in self.part_lambda)

    @property
    def m_odd(self) -> int:
        return sum(1 for z in self.part_lambda for x in z if x % 2)

    @property
    def hurwitz_defect(self) -> int:
        return self.k + self.l + sum(self.m) - self.q * self.d - self.r_extra - 2

    def sort_key(self) -> tuple:
        return (self.d, self.part_infinity, self.part_zero, self.part_lambda, self.r_extra)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "infinity": list(self.part_infinity),
            "zero": list(self.part_zero),
            "lambda": [list(z) for z in self.part_lambda],
            "r": self.r_extra,
            "k": self.k,
            "l": self.l,
            "m": list(self.m),
            "m_odd": self.m_odd,
        }

    def __str__(self):
        fmt = lambda p: "[" + ",".join(map(str, p)) + "]"  # noqa: E731
        lam = " ".join(fmt(z) for z in self.part_lambda)
        return (f"n={self.n} d={self.d} inf={fmt(self.part_infinity)} "
                f"zero={fmt(self.part_zero)} lambda={lam} r={self.r_extra}")


def hurwitz_defect(b: BranchData) -> int:
    return b.hurwitz_defect


def enumerate_branch_data(n: int, d_max: int, require_smooth: bool = False,
                          r_max: int | None = None,
                          lambda_unordered: bool = False) -> list:
    """All genus-0 branch data of degree at most d_max, in lexicographic order.

    Zero profiles come from the allowed list for n; the other profiles range
    over all partitions (all-ones over each lambda_i when require_smooth);
    r_extra is solved from the Hurwitz identity.
    """
    if n not in SUPPORTED_N:
        raise UnsupportedN(f"n={n} is not one of {SUPPORTED_N}")
    if d_max < 1:
        raise InvalidInput("d_max must be at least 1")
    q = orbifold_signature(n).q
    allowed = allowed_zero_partitions(n)
    out = []
    for d in range(1, d_max + 1):
        parts = partitions_of(d)
        zeros = [y for y in parts if y in allowed]
        lam_choices = [(1,) * d] if require_smooth else parts
        for x in parts:
            for y in zeros:
                for lam in product(lam_choices, repeat=q):
                    r = len(x) + len(y) + sum(len(z) for z in lam) - q * d - 2
                    if r < 0 or (r_max is not None and r > r_max):
                        continue
                    out.append(BranchData(n, d, x, y, lam, r))
    out.sort(key=BranchData.sort_key)
    if lambda_unordered:
        out = dedup_lambda(out)
    return out


def dedup_lambda(data) -> list:
    """Keep the first datum of each class under permuting the lambda slots."""
    seen = set()
    out = []
    for b in data:
        key = (b.n, b.d, b.part_infinity, b.part_zero, tuple(sorted(b.part_lambda)), b.r_extra)
        if key not in seen:
            seen.add(key)
            out.append(b)
    return out


def branch_labels(b: BranchData) -> list:
    """Point labels in the order infinity, 0, lambda_1..lambda_q, extras."""
    if b.n in SUPPORTED_N:
        lam = [f"λ={s}" for s in orbifold_signature(b.n).lambda_labels]
    else:
        lam = [f"λ{i + 1}" for i in range(b.q)]
    return ["∞", "0"] + lam + [f"r{i + 1}" for i in range(b.r_extra)]


def realizable(b: BranchData, backend: str | None = None) -> PermWitness | None:
    """A permutation witness for b, or None if no cover has this branching."""
    if b.hurwitz_defect != 0:
        raise NonZeroDefect(f"Hurwitz defect is {b.hurwitz_defect}, not 0")
    simple = (2,) + (1,) * (b.d - 2) if b.d >= 2 else (1,)
    types = [b.part_infinity, b.part_zero, *b.part_lambda] + [simple] * b.r_extra
    return realizable_cycle_types(types, b.d, labels=branch_labels(b), backend=backend)
