import numpy as np
import sympy

from exceptional_z3 import fieldla
from exceptional_z3.cycarray import CycArray
from exceptional_z3.scalar import CycScalar, root_of_unity

from test_cycarray import rand_matrix


def test_rank_and_nullspace_on_rank_deficient(rng):
    a = rand_matrix(rng, (3, 5))
    m = CycArray.concatenate([a, (a[0] + a[1] * root_of_unity(2, 36)).reshape(1, 5)], axis=0)
    assert fieldla.rank(m) == 3
    ns = fieldla.nullspace(m)
    assert fieldla.nullity(m) == 2 == ns.shape[0]
    assert (m @ ns.T).is_zero()


def test_inverse_roundtrip(rng):
    a = rand_matrix(rng, (4, 4))
    inv = fieldla.inverse(a)
    assert a @ inv == CycArray.eye(4)


def test_det_matches_complex(rng):
    a = rand_matrix(rng, (4, 4))
    assert abs(fieldla.det(a).to_float() - np.linalg.det(a.to_complex())) < 1e-6


def test_det_of_singular_is_zero(rng):
    a = rand_matrix(rng, (2, 3))
    m = CycArray.concatenate([a, a[0:1] * 2], axis=0)
    assert fieldla.det(m) == CycScalar(0)


def test_rational_helpers_agree_with_sympy():
    ints = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert fieldla.rational_rank(ints) == sympy.Matrix(ints).rank() == 2
    ns = fieldla.rational_nullspace(ints)
    assert len(ns) == 1
    assert all(sum(r[j] * ns[0][j] for j in range(3)) == 0 for r in ints.tolist())
    inv, den = fieldla.rational_inverse(np.array([[2, 1], [1, 1]]))
    assert (np.array([[2, 1], [1, 1]]) @ inv.astype(np.int64) == den * np.eye(2, dtype=np.int64)).all()


def test_rank_mod_p():
    ints = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert fieldla.rank_mod_p(ints) == 2
    assert fieldla.rank_mod_p(np.eye(5, dtype=np.int64) * 7) == 5
