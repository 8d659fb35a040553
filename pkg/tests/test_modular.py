import math

import pytest
from hypothesis import given, strategies as st
from sympy.functions.combinatorial.numbers import kronecker_symbol

from k3fib.errors import InvalidDiscriminant, UnsupportedN
from k3fib.modular import (ExistenceClass, cusp_count, cy_existence_class, elliptic_counts,
                           field_class_number, form_class_number, fricke_fixed_count,
                           gamma0_index, genus_x0, genus_x0_plus, h1_invariant, k_field_reading,
                           k_smooth, modular_curve_data)


def _phi(n):
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def index_by_projective_line(n):
    # |P^1(Z/n)| = #{(c, d) mod n primitive} / phi(n)
    prim = sum(1 for c in range(n) for d in range(n) if math.gcd(math.gcd(c, d), n) == 1)
    return prim // _phi(n)


def nu2_by_roots(n):
    return 0 if n % 4 == 0 else sum(1 for x in range(n) if (x * x + 1) % n == 0)


def nu3_by_roots(n):
    return 0 if n % 9 == 0 else sum(1 for x in range(n) if (x * x + x + 1) % n == 0)


def cusps_by_orbits(n):
    # cusps of Gamma_0(n) correspond to pairs (c mod gcd(c, n/c)) units, c | n
    total = 0
    for c in range(1, n + 1):
        if n % c == 0:
            g = math.gcd(c, n // c)
            total += _phi(g)
    return total


def class_number_analytic(D):
    # Dirichlet's formula for a fundamental discriminant D < -4
    return -sum(kronecker_symbol(D, a) * a for a in range(1, -D)) // (-D)


@pytest.mark.parametrize("n", range(1, 60))
def test_index_matches_projective_line_count(n):
    assert gamma0_index(n) == index_by_projective_line(n)


@pytest.mark.parametrize("n", range(1, 120))
def test_elliptic_counts_match_root_counts(n):
    assert elliptic_counts(n) == (nu2_by_roots(n), nu3_by_roots(n))


@pytest.mark.parametrize("n", range(1, 120))
def test_cusp_count(n):
    assert cusp_count(n) == cusps_by_orbits(n)


def test_small_genera():
    assert [genus_x0(n) for n in (11, 22, 23, 37, 64)] == [1, 2, 2, 2, 3]


@pytest.mark.parametrize("D", [-7, -8, -15, -20, -23, -24, -31, -39, -47, -56, -71, -84, -95, -104])
def test_form_class_number_matches_analytic_formula(D):
    assert form_class_number(D) == class_number_analytic(D)


@pytest.mark.parametrize("D,h", [(-3, 1), (-4, 1), (-12, 1), (-16, 1), (-27, 1), (-28, 1),
                                 (-36, 2), (-44, 3), (-236, 9), (-4 * 59, 9)])
def test_form_class_numbers_known(D, h):
    assert form_class_number(D) == h


def test_field_reading_differs_from_forms():
    assert field_class_number(-44) == 1 and form_class_number(-44) == 3
    assert k_field_reading(11) == 2 and k_smooth(11) == 4
    assert k_field_reading(19) == 2 and k_smooth(19) == 4


def test_bad_discriminant():
    with pytest.raises(InvalidDiscriminant):
        form_class_number(-5)
    with pytest.raises(InvalidDiscriminant):
        form_class_number(8)


def test_fixed_points():
    assert fricke_fixed_count(59) == 12
    assert k_smooth(17) == 4
    assert k_smooth(7) == 2
    assert [k_smooth(n) for n in (2, 3, 4)] == [1, 1, 1]


def test_genus_plus_rational_list():
    rational = [n for n in range(2, 200) if genus_x0_plus(n) == 0]
    assert 37 not in rational and 71 in rational and 59 in rational


def test_h1_values():
    assert h1_invariant(13) == 2
    assert h1_invariant(2) == 0
    assert [h1_invariant(n) for n in (18, 20, 24)] == [4, 4, 6]


def test_existence_classes():
    assert cy_existence_class(5) is ExistenceClass.NON_RIGID_ALLOWED
    assert cy_existence_class(10) is ExistenceClass.RIGID_ONLY
    assert cy_existence_class(37) is ExistenceClass.NO_CALABI_YAU
    assert cy_existence_class(18) is ExistenceClass.NO_CALABI_YAU


def test_unsupported_level():
    with pytest.raises(UnsupportedN):
        k_smooth(1)
    with pytest.raises(UnsupportedN):
        modular_curve_data(0)


@given(st.integers(min_value=2, max_value=400))
def test_fricke_quotient_riemann_hurwitz(n):
    data = modular_curve_data(n)
    assert 2 * data.genus + 2 - data.fricke_fixed == 4 * data.genus_plus
    assert data.genus_plus <= data.genus
