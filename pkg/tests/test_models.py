import numpy as np
from hypothesis import given, settings, strategies as st

from exceptional_z3.cycarray import CycArray
from exceptional_z3.jordan import JordanElem, circ
from exceptional_z3.models import (cmatmul, from_csplit, from_hsplit, k_arr, k_inv_arr, k_J, k_J_inv, qmatmul, qstar,
                                   to_csplit, to_hsplit)

import oracle

vec = st.lists(st.integers(-3, 3), min_size=27, max_size=27)


def elem(ints):
    return JordanElem(CycArray.from_rational(np.array(ints)))


@settings(max_examples=25, deadline=None)
@given(vec)
def test_split_models_roundtrip(a):
    x = elem(a)
    assert from_hsplit(to_hsplit(x)) == x
    assert from_csplit(to_csplit(x)) == x


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=36, max_size=36), st.lists(st.integers(-3, 3), min_size=36, max_size=36))
def test_k_is_multiplicative_on_quaternion_matrices(a, b):
    x = CycArray.from_rational(np.array(a).reshape(3, 3, 4))
    y = CycArray.from_rational(np.array(b).reshape(3, 3, 4))
    assert k_arr(qmatmul(x, y)) == k_arr(x) @ k_arr(y)
    assert k_inv_arr(k_arr(x)) == x


def test_quaternion_matmul_matches_float():
    rng = np.random.default_rng(3)
    a, b = rng.integers(-3, 4, (2, 3, 4)), rng.integers(-3, 4, (3, 2, 4))
    got = qmatmul(CycArray.from_rational(a), CycArray.from_rational(b)).to_complex().real
    want = np.stack([[sum(oracle.qmul(a[i, k], b[k, j]) for k in range(3)) for j in range(2)] for i in range(2)])
    assert np.allclose(got, want)


@settings(max_examples=15, deadline=None)
@given(vec)
def test_k_J_roundtrip_on_hermitian(a):
    m = to_hsplit(elem(a)).M
    s = k_J(m)
    assert s.T == s * -1
    assert k_J_inv(s) == m
