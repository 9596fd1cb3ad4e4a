import numpy as np
from hypothesis import given, settings, strategies as st

from exceptional_z3.cayley import Octonion
from exceptional_z3.cycarray import CycArray
from exceptional_z3.jordan import (DIM, E, F, JordanElem, circ, cross, det, inner, matrix_product_circ, trace)
from exceptional_z3.scalar import CycScalar

import oracle

vec = st.lists(st.integers(-3, 3), min_size=27, max_size=27)


def elem(ints):
    return JordanElem(CycArray.from_rational(np.array(ints)))


def fl(x):
    return x.v.to_complex().real


@settings(max_examples=30, deadline=None)
@given(vec, vec)
def test_circ_matches_matrix_oracle(a, b):
    got = fl(circ(elem(a), elem(b)))
    assert np.allclose(got, oracle.circ(np.array(a, float), np.array(b, float)))


@settings(max_examples=30, deadline=None)
@given(vec, vec)
def test_cross_and_inner_match_oracle(a, b):
    x, y = elem(a), elem(b)
    fa, fb = np.array(a, float), np.array(b, float)
    assert np.allclose(fl(cross(x, y)), oracle.cross(fa, fb))
    assert abs(inner(x, y).to_float() - oracle.inner(fa, fb)) < 1e-9


@settings(max_examples=20, deadline=None)
@given(vec, vec)
def test_exact_matrix_product_agrees(a, b):
    x, y = elem(a), elem(b)
    assert circ(x, y) == matrix_product_circ(x, y)


@settings(max_examples=20, deadline=None)
@given(vec)
def test_cubic_identities(a):
    x = elem(a)
    # X x X is the adjoint: X o (X x X) = det(X) E
    assert circ(x, cross(x, x)) == E() * det(x)
    assert trace(x) == inner(E(), x)


def test_unit_and_idempotents():
    e1 = E(1)
    assert circ(e1, e1) == e1
    assert circ(E(), F(1, Octonion.basis(3))) == F(1, Octonion.basis(3))
    assert det(E()) == CycScalar(1)
    assert DIM == 27
