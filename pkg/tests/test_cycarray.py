import numpy as np
import pytest
from fractions import Fraction

from exceptional_z3.cycarray import CycArray
from exceptional_z3.scalar import CycScalar, root_of_unity

from conftest import rand_scalar


def rand_matrix(rng, shape, n=36):
    vals = np.empty(shape, dtype=object)
    for idx in np.ndindex(*shape):
        vals[idx] = rand_scalar(rng, n)
    return CycArray.from_scalars(vals.tolist(), n)


def test_matmul_matches_complex(rng):
    a = rand_matrix(rng, (4, 3))
    b = rand_matrix(rng, (3, 5))
    assert np.allclose((a @ b).to_complex(), a.to_complex() @ b.to_complex())


def test_batched_matmul_matches_complex(rng):
    a = rand_matrix(rng, (2, 3, 3))
    b = rand_matrix(rng, (3, 2))
    assert np.allclose((a @ b).to_complex(), a.to_complex() @ b.to_complex())


def test_elementwise_and_scalar_ops(rng):
    a = rand_matrix(rng, (3, 3))
    b = rand_matrix(rng, (3, 3))
    s = root_of_unity(5, 36)
    assert np.allclose((a * b).to_complex(), a.to_complex() * b.to_complex())
    assert np.allclose((a + b - b).to_complex(), a.to_complex())
    assert np.allclose((a * s).to_complex(), a.to_complex() * s.to_float())
    assert np.allclose((a / 3).to_complex(), a.to_complex() / 3)


def test_conj_transpose_and_trace(rng):
    a = rand_matrix(rng, (3, 3))
    assert np.allclose(a.H().to_complex(), a.to_complex().conj().T)
    assert abs(a.trace().to_float() - np.trace(a.to_complex())) < 1e-9


def test_lin_acts_on_last_axis(rng):
    a = rand_matrix(rng, (2, 3))
    m = np.array([[1, 0], [2, -1], [0, 3]])
    assert np.allclose(a.lin(m).to_complex(), a.to_complex() @ m)


def test_equality_is_exact():
    a = CycArray.from_fractions([[Fraction(1, 3), 0], [0, 1]])
    b = CycArray.from_rational(np.array([[1, 0], [0, 3]]), 3)
    assert a == b
    assert not a == CycArray.eye(2)


def test_float_input_rejected():
    with pytest.raises(TypeError):
        CycArray.from_rational(np.eye(2))


def test_large_entries_stay_exact():
    big = 3 ** 45
    a = CycArray.from_rational(np.array([[big, 1], [0, big]], dtype=object))
    sq = a @ a
    assert sq.scalar(0, 0) == CycScalar(big * big)
    assert sq.scalar(0, 1) == CycScalar(2 * big)
