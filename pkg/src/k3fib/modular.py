"""Invariants of Gamma_0(n), X_0(n) and the Fricke quotient X_0(n)^+."""
from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import totient
from sympy.ntheory import divisors, factorint

from .errors import InternalInconsistency, InvalidDiscriminant, UnsupportedN

# from the explicit check of small levels: tau_n fixes one smooth point and
# one orbifold point (n = 2, 3) or one cusp (n = 4)
_SMALL_LEVEL_FIXED = {2: 2, 3: 2, 4: 2}
_SMALL_LEVEL_SMOOTH = {2: 1, 3: 1, 4: 1}


def gamma0_index(n: int) -> int:
    """Index of Gamma_0(n) in PSL_2(Z): n * prod_{p | n} (1 + 1/p)."""
    mu = Fraction(n)
    for p in factorint(n):
        mu *= Fraction(p + 1, p)
    return int(mu)


def _kronecker_m4(p: int) -> int:
    # (-4/p) for a prime p
    if p == 2:
        return 0
    return 1 if p % 4 == 1 else -1


def _kronecker_m3(p: int) -> int:
    # (-3/p) for a prime p
    if p == 3:
        return 0
    if p == 2:
        return -1
    return 1 if p % 3 == 1 else -1


def elliptic_counts(n: int) -> tuple:
    """(nu2, nu3) for X_0(n)."""
    primes = factorint(n)
    nu2 = 0 if n % 4 == 0 else math.prod(1 + _kronecker_m4(p) for p in primes)
    nu3 = 0 if n % 9 == 0 else math.prod(1 + _kronecker_m3(p) for p in primes)
    return nu2, nu3


def cusp_count(n: int) -> int:
    return sum(int(totient(math.gcd(d, n // d))) for d in divisors(n))


def genus_x0(n: int) -> int:
    mu = gamma0_index(n)
    nu2, nu3 = elliptic_counts(n)
    g = 1 + Fraction(mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusp_count(n), 2)
    if g.denominator != 1 or g < 0:
        raise InternalInconsistency(f"genus of X_0({n}) came out as {g}")
    return int(g)


@lru_cache(maxsize=None)
def form_class_number(D: int) -> int:
    """Number of primitive reduced positive definite forms of discriminant D."""
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{D} is not a negative discriminant")
    count = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if c == a and b < 0:
                continue
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            count += 1
        a += 1
    return count


def field_class_number(d: int) -> int:
    """Class number of Q(sqrt(d)) for d < 0, i.e. of the maximal order."""
    core = d
    for p, e in factorint(-d).items():
        core //= p ** (e - e % 2)
    disc = core if core % 4 == 1 else 4 * core
    return form_class_number(disc)


def _check_level(n: int):
    if n < 2:
        raise UnsupportedN(f"level {n} has no Fricke quotient in scope (need n >= 2)")


def fricke_fixed_count(n: int) -> int:
    """Total number of fixed points of tau_n on X_0(n)."""
    _check_level(n)
    if n in _SMALL_LEVEL_FIXED:
        return _SMALL_LEVEL_FIXED[n]
    h = form_class_number(-4 * n)
    if n % 4 == 3:
        h += form_class_number(-n)
    return h


def k_smooth(n: int) -> int:
    """Number of smooth points of X_0(n) fixed by tau_n."""
    _check_level(n)
    if n in _SMALL_LEVEL_SMOOTH:
        return _SMALL_LEVEL_SMOOTH[n]
    return fricke_fixed_count(n)


def k_field_reading(n: int) -> int:
    """k_n with h read as the class number of the field (diagnostic only)."""
    _check_level(n)
    h = field_class_number(-4 * n)
    if n % 4 == 3:
        h += field_class_number(-n)
    return h


def genus_x0_plus(n: int) -> int:
    _check_level(n)
    g = Fraction(2 * genus_x0(n) + 2 - fricke_fixed_count(n), 4)
    if g.denominator != 1 or g < 0:
        raise InternalInconsistency(f"genus of X_0({n})^+ came out as {g}")
    return int(g)


def h1_invariant(n: int) -> int:
    """Rank of H^1(X_0(n)^+, i_* V_n^+)."""
    _check_level(n)
    if n in (2, 3, 4):
        return 0
    nu2, nu3 = elliptic_counts(n)
    return k_smooth(n) + nu2 + nu3 + cusp_count(n) + 6 * (genus_x0_plus(n) - 1)


class ExistenceClass(enum.Enum):
    NON_RIGID_ALLOWED = "NonRigidAllowed"
    RIGID_ONLY = "RigidOnly"
    NO_CALABI_YAU = "NoCalabiYau"


def cy_existence_class(n: int) -> ExistenceClass:
    if genus_x0_plus(n) != 0:
        return ExistenceClass.NO_CALABI_YAU
    h1 = h1_invariant(n)
    if h1 == 0:
        return ExistenceClass.NON_RIGID_ALLOWED
    if h1 == 2:
        return ExistenceClass.RIGID_ONLY
    return ExistenceClass.NO_CALABI_YAU


@dataclass(frozen=True)
class ModularCurveData:
    n: int
    index: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int
    fricke_fixed: int
    k_smooth: int
    genus_plus: int
    h1_vplus: int

    def as_dict(self) -> dict:
        return asdict(self)


def modular_curve_data(n: int) -> ModularCurveData:
    _check_level(n)
    nu2, nu3 = elliptic_counts(n)
    nu_inf = cusp_count(n)
    data = ModularCurveData(
        n=n,
        index=gamma0_index(n),
        nu2=nu2,
        nu3=nu3,
        nu_inf=nu_inf,
        genus=genus_x0(n),
        fricke_fixed=fricke_fixed_count(n),
        k_smooth=k_smooth(n),
        genus_plus=genus_x0_plus(n),
        h1_vplus=h1_invariant(n),
    )
    if n > 4 and (nu2 % 2 or nu3 % 2 or nu_inf % 2):
        raise InternalInconsistency(f"odd orbifold counts for n={n}: {nu2}, {nu3}, {nu_inf}")
    if (2 * data.genus + 2 - data.fricke_fixed) % 4:
        raise InternalInconsistency(f"Riemann-Hurwitz fails for the Fricke quotient at n={n}")
    return data
