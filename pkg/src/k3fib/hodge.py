"""Admissibility, smoothness, Hodge numbers and singular fibres of X_{n,g}.

Every smooth record carries h^{2,1} computed twice: from the closed formula
in the branch data, and as half the H^1 rank of the pulled-back local system
minus one.  ``classify`` refuses to return a record where they differ.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .covers import BranchData, enumerate_branch_data
from .errors import (InternalInconsistency, NotAdmissible, NotAllowedPartition,
                     NotSmooth, UnsupportedN)
from .modular import cy_existence_class
from .monodromy import h1_rank, pullback_system
from .tables import (SUPPORTED_N, ComponentEntry, allowed_zero_partitions,
                     delta_correction, orbifold_signature, zero_fibre_components)


class Obstruction(enum.Enum):
    N7 = "N7"
    N11 = "N11"
    RAMIFIED_OVER_LAMBDA = "RamifiedOverLambda"
    N3_PROFILE_6 = "N3Profile6"


def admissibility_reasons(b: BranchData) -> list:
    reasons = []
    if b.n not in SUPPORTED_N:
        reasons.append(f"UnsupportedN: n={b.n} has no family in the table")
    if b.hurwitz_defect != 0:
        reasons.append(f"NonZeroDefect: Hurwitz defect is {b.hurwitz_defect}")
    if b.n in SUPPORTED_N and b.part_zero not in allowed_zero_partitions(b.n):
        reasons.append(f"NotAllowedPartition: {list(b.part_zero)} over λ=0")
    return reasons


def is_admissible(b: BranchData) -> bool:
    return not admissibility_reasons(b)


def _require_admissible(b: BranchData):
    reasons = admissibility_reasons(b)
    if reasons:
        raise NotAdmissible("; ".join(reasons))


def smooth_obstructions(b: BranchData) -> list:
    _require_admissible(b)
    out = []
    if b.n == 7:
        out.append(Obstruction.N7)
    if b.n == 11:
        out.append(Obstruction.N11)
    if any(max(z) > 1 for z in b.part_lambda):
        out.append(Obstruction.RAMIFIED_OVER_LAMBDA)
    if b.n == 3 and b.part_zero == (6,):
        out.append(Obstruction.N3_PROFILE_6)
    return out


def is_smooth(b: BranchData) -> bool:
    return is_admissible(b) and not smooth_obstructions(b)


def _require_smooth(b: BranchData, allow_singular: bool):
    _require_admissible(b)
    if not allow_singular:
        obstructions = smooth_obstructions(b)
        if obstructions:
            names = ", ".join(o.value for o in obstructions)
            raise NotSmooth(f"X_(n,g) is not smooth: {names}")


def _zero_count(n: int, y: int, allow_singular: bool) -> int:
    entry = zero_fibre_components(n, y)
    if entry.marker.dagger and not allow_singular:
        raise InternalInconsistency(f"smooth datum reached a singular-total-space cell ({n},{y})")
    return entry.count


def h11(b: BranchData, allow_singular: bool = False) -> int:
    _require_smooth(b, allow_singular)
    n = b.n
    return (20 + sum(n * x * x + 1 for x in b.part_infinity)
            + sum(_zero_count(n, y, allow_singular) - 1 for y in b.part_zero))


def h21_formula(b: BranchData, allow_singular: bool = False) -> int:
    _require_smooth(b, allow_singular)
    half = Fraction(b.m_odd - b.q * b.d, 2)
    if half.denominator != 1:
        raise InternalInconsistency("odd-part count has the wrong parity")
    value = b.k + b.l - 2 + int(half) + delta_correction(b.n, b.part_zero)
    if value < 0:
        raise InternalInconsistency(f"h21 came out negative ({value})")
    return value


def b3_monodromy(b: BranchData, allow_singular: bool = False) -> int:
    _require_smooth(b, allow_singular)
    rank = h1_rank(pullback_system(b.n, b))
    if rank % 2 or rank < 2:
        raise InternalInconsistency(f"b3 = {rank} is not an even number >= 2")
    return rank


def h21_monodromy(b: BranchData, allow_singular: bool = False) -> int:
    return b3_monodromy(b, allow_singular) // 2 - 1


# --------------------------------------------------------------------------
# singular fibres

class FibreKind(enum.Enum):
    SMOOTH_K3 = "SmoothK3"
    NODAL_K3 = "NodalK3"
    TYPE_III = "TypeIII"
    ZERO_FIBRE = "ZeroFibre"
    TERMINAL_POINT = "TerminalPoint"


@dataclass(frozen=True)
class FibreReport:
    point: str
    ramification: int
    kind: FibreKind
    components: int | None = None
    entry: ComponentEntry | None = None
    singularity: str | None = None
    detail: str = ""

    @property
    def location(self) -> str:
        return f"{self.point} (e={self.ramification})"

    def as_dict(self) -> dict:
        return {
            "location": self.location,
            "point": self.point,
            "ramification": self.ramification,
            "kind": self.kind.value,
            "components": self.components,
            "entry": None if self.entry is None else str(self.entry),
            "singularity": self.singularity,
            "detail": self.detail,
        }


def _zero_detail(entry: ComponentEntry) -> str:
    if entry.count == 1:
        smooth = "smooth" if entry.marker.star else "nodal"
        if entry.marker.dagger:
            return f"singular K3 in a singular total space, analytically resolvable to a {smooth} K3"
        return f"{smooth} K3 in a smooth total space"
    if entry.marker.star:
        return f"semistable Type III fibre with {entry.count} components"
    return f"{entry.count} components"


def singular_fibre_report(b: BranchData) -> list:
    _require_admissible(b)
    n = b.n
    reports = []
    for x in b.part_infinity:
        reports.append(FibreReport("∞", x, FibreKind.TYPE_III, components=n * x * x + 2,
                                   detail="semistable Type III"))
    for y in b.part_zero:
        entry = zero_fibre_components(n, y)
        reports.append(FibreReport("0", y, FibreKind.ZERO_FIBRE, components=entry.count,
                                   entry=entry,
                                   detail=_zero_detail(entry)))
    labels = orbifold_signature(n).lambda_labels
    for label, z_part in zip(labels, b.part_lambda):
        special = n == 7 and label == "-1"
        for z in z_part:
            if z == 1:
                detail = "A2 point + threefold node" if special else "isolated node on the fibre"
                reports.append(FibreReport(f"λ={label}", 1, FibreKind.NODAL_K3, detail=detail))
            else:
                sing = f"cA_{2 * z - 1}" if special else f"cA_{z - 1}"
                reports.append(FibreReport(f"λ={label}", z, FibreKind.TERMINAL_POINT,
                                           singularity=sing,
                                           detail=f"isolated {sing} singularity"))
    return reports


# --------------------------------------------------------------------------
# records

@dataclass(frozen=True)
class CYRecord:
    branch: BranchData
    admissible: bool
    reasons: tuple = ()
    smooth: bool = False
    obstructions: tuple = ()
    delta: int | None = None
    h11: int | None = None
    h21: int | None = None
    b3: int | None = None
    euler: int | None = None
    fibre_reports: tuple = field(default_factory=tuple)
    existence_class: str | None = None

    def as_dict(self) -> dict:
        return {
            "branch": self.branch.as_dict(),
            "admissible": self.admissible,
            "reasons": list(self.reasons),
            "smooth": self.smooth,
            "obstructions": list(self.obstructions),
            "delta": self.delta,
            "h11": self.h11,
            "h21": self.h21,
            "b3": self.b3,
            "euler": self.euler,
            "fibre_reports": [f.as_dict() for f in self.fibre_reports],
            "existence_class": self.existence_class,
        }


def _existence(n: int):
    try:
        return cy_existence_class(n).value
    except UnsupportedN:
        return None


def classify(b: BranchData) -> CYRecord:
    reasons = admissibility_reasons(b)
    if reasons:
        return CYRecord(branch=b, admissible=False, reasons=tuple(reasons),
                        existence_class=_existence(b.n))
    obstructions = tuple(o.value for o in smooth_obstructions(b))
    delta = delta_correction(b.n, b.part_zero)
    reports = tuple(singular_fibre_report(b))
    if obstructions:
        return CYRecord(branch=b, admissible=True, smooth=False, obstructions=obstructions,
                        delta=delta, fibre_reports=reports,
                        existence_class=_existence(b.n))
    a, c = h11(b), h21_formula(b)
    via_monodromy = h21_monodromy(b)
    if c != via_monodromy:
        raise InternalInconsistency(
            f"h21 routes disagree for {b}: formula {c}, monodromy {via_monodromy}")
    return CYRecord(branch=b, admissible=True, smooth=True, delta=delta,
                    h11=a, h21=c, b3=2 * (c + 1), euler=2 * (a - c),
                    fibre_reports=reports, existence_class=_existence(b.n))


# --------------------------------------------------------------------------
# mirror pairs

def mirror_pairs(d_max: int = 8) -> list:
    """Sorted (n, y) with y a part over 0 in an l = 2, delta = 0 datum."""
    pairs = set()
    for n in SUPPORTED_N:
        for b in enumerate_branch_data(n, d_max, require_smooth=True):
            if b.l != 2:
                continue
            try:
                if delta_correction(n, b.part_zero) != 0:
                    continue
            except NotAllowedPartition:
                continue
            pairs.update((n, y) for y in b.part_zero)
    return sorted(pairs)


def fano_anticanonical_degree(degree: int, index: int) -> Fraction:
    if degree < 1 or index < 1:
        raise ValueError("degree and index must be positive")
    return Fraction(degree, 2 * index * index)
