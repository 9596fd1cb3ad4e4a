import numpy as np
from hypothesis import given, settings, strategies as st

from exceptional_z3.cayley import (Octonion, from_split, omul, oconj, qmul, split_product, to_split, OCT_TABLE)
from exceptional_z3.cycarray import CycArray
from exceptional_z3.scalar import CycScalar

import oracle

small = st.lists(st.integers(-4, 4), min_size=8, max_size=8)


def oct_of(ints):
    return Octonion(list(ints))


@given(small, small)
def test_product_matches_float_doubling(a, b):
    got = (oct_of(a) * oct_of(b)).v.to_complex().real
    assert np.allclose(got, oracle.omul(np.array(a, float), np.array(b, float)))


def test_basis_conventions():
    e = [Octonion.basis(k) for k in range(8)]
    assert e[1] * e[2] == e[3]
    assert e[1] * e[4] == e[5]
    assert e[2] * e[4] == e[6]
    assert e[3] * e[4] == e[7]
    for k in range(1, 8):
        assert e[k] * e[k] == Octonion.scalar(-1)


@given(small, small)
def test_alternative_and_norm_multiplicative(a, b):
    x, y = oct_of(a), oct_of(b)
    assert (x * x) * y == x * (x * y)
    assert (y * x) * x == y * (x * x)
    assert (x * y).norm() == x.norm() * y.norm()


@given(small)
def test_conjugate_gives_norm(a):
    x = oct_of(a)
    assert x * x.conj() == Octonion.scalar(x.norm())


@given(small, small)
def test_split_model_product(a, b):
    x, y = oct_of(a), oct_of(b)
    assert from_split(split_product(to_split(x), to_split(y))) == x * y


def test_table_is_integer_and_unital():
    assert OCT_TABLE.dtype.kind == "i"
    assert (OCT_TABLE[0] == np.eye(8, dtype=np.int64)).all()
    assert (OCT_TABLE[:, 0] == np.eye(8, dtype=np.int64)).all()


def test_quaternion_product():
    i = CycArray.from_rational(np.array([0, 1, 0, 0]))
    j = CycArray.from_rational(np.array([0, 0, 1, 0]))
    k = CycArray.from_rational(np.array([0, 0, 0, 1]))
    assert qmul(i, j) == k
    assert qmul(j, i) == k * -1
