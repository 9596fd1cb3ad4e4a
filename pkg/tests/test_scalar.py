import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exceptional_z3.scalar import (CycScalar, cos2pi, imag_unit, nu, omega, root_of_unity, sin2pi, sqrt3,
                                   solve_rational)

ks = st.integers(min_value=-100, max_value=100)


def z(k, n=36):
    return cmath.exp(2j * cmath.pi * k / n)


@given(ks, ks)
def test_root_products_match_complex(a, b):
    x = root_of_unity(a, 36) * root_of_unity(b, 36)
    assert abs(x.to_float() - z(a + b)) < 1e-9
    assert x == root_of_unity(a + b, 36)


@given(ks, ks, st.integers(-5, 5), st.integers(-5, 5))
def test_linear_combinations_match_complex(a, b, p, q):
    x = root_of_unity(a, 36) * p + root_of_unity(b, 36) * q
    assert abs(x.to_float() - (p * z(a) + q * z(b))) < 1e-9


@given(ks, st.integers(1, 6))
def test_inverse_and_power(a, m):
    x = root_of_unity(a, 36) * 2 + 1
    if x.is_zero():
        return
    assert x * x.inv() == CycScalar(1, 36)
    assert abs((x ** m).to_float() - x.to_float() ** m) < 1e-6 * abs(x.to_float()) ** m + 1e-9


def test_named_constants():
    assert omega() ** 3 == CycScalar(1)
    assert not omega() == CycScalar(1)
    assert nu() ** 3 == omega()
    assert imag_unit() ** 2 == CycScalar(-1)
    assert sqrt3() ** 2 == CycScalar(3)
    assert abs(omega().to_float() - z(1, 3)) < 1e-12


@given(ks)
def test_cos_sin_are_real_and_pythagorean(k):
    c, s = cos2pi(k, 36), sin2pi(k, 36)
    assert c.is_real() and s.is_real()
    assert c * c + s * s == CycScalar(1)
    assert abs(c.to_float() - cmath.cos(2 * cmath.pi * k / 36)) < 1e-12


@given(ks)
def test_conj_is_inverse_on_roots(k):
    x = root_of_unity(k, 36)
    assert x.conj() == x.inv()


def test_rational_embedding_and_fraction():
    x = CycScalar(Fraction(3, 4))
    assert x.is_rational() and x.to_fraction() == Fraction(3, 4)
    assert (x / 3).to_fraction() == Fraction(1, 4)


def test_conductor_180_contains_fifth_roots():
    e = root_of_unity(1, 5, 180)
    assert e ** 5 == CycScalar(1, 180)
    assert abs(e.to_float() - z(1, 5)) < 1e-12


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        CycScalar(0).inv()


def test_galois_fixes_rationals_and_moves_roots():
    x = root_of_unity(1, 36)
    assert x.galois(5) == root_of_unity(5, 36)
    assert CycScalar(7).galois(5) == CycScalar(7)


def test_solve_rational_small_system():
    sol = solve_rational([[2, 1], [1, 3]], [3, 5])
    assert [Fraction(v) for v in sol] == [Fraction(4, 5), Fraction(7, 5)]
