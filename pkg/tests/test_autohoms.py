import numpy as np
import pytest

from exceptional_z3 import autohoms as ah
from exceptional_z3.cayley import Octonion, cxmul, qmul
from exceptional_z3.cycarray import CycArray
from exceptional_z3.groups import CAYLEY8, JORDAN27
from exceptional_z3.jordan import E, F
from exceptional_z3.models import cmatmul
from exceptional_z3.scalar import CycScalar, omega, root_of_unity
from exceptional_z3.verify import Domain, Ctx, _sample_tuples

CTX = Ctx()


def test_validators_reject_bad_parameters():
    with pytest.raises(ValueError):
        ah.check_unit_quat(ah.quat(1, 1))
    with pytest.raises(ValueError):
        ah.check_unit_cx(ah.cx(2))
    with pytest.raises(ValueError):
        ah.check_cx_unitary(ah.cx_scalar_matrix(ah.cx(0, 1)), special=True)
    ah.check_cx_unitary(ah.cx_scalar_matrix(ah.cx(0, 1)), special=False)
    with pytest.raises(ValueError):
        ah.check_block_unitary(ah.field_diag([root_of_unity(1, 4)] + [1] * 5), (1, 5))
    ah.check_block_unitary(CycArray.eye(6) * -1, (1, 5))
    with pytest.raises(ValueError):
        ah.phi_e6_gamma(ah.quat(1), CycArray.eye(6) * 2)


def test_field_cx_bridge_roundtrip():
    (m,) = _sample_tuples((Domain("SU", 3),), 1, 5, CTX, "t")[0:1][0]
    assert ah.cx_to_field(ah.field_to_cx(m)) == m


@pytest.mark.parametrize("name,group,space", [
    ("gamma3", "G2", CAYLEY8), ("w3", "G2", CAYLEY8),
    ("gamma3", "F4", JORDAN27), ("sigma3", "F4", JORDAN27), ("w3", "F4", JORDAN27), ("sigma", "F4", JORDAN27),
    ("nu3", "E6", JORDAN27), ("mu3", "E6", JORDAN27), ("deltaR", "E6", JORDAN27), ("deltaQ", "E6", JORDAN27),
    ("deltaN", "E6", JORDAN27), ("sigma3p", "E6", JORDAN27), ("mu3p", "E6", JORDAN27), ("w3p", "E6", JORDAN27),
])
def test_named_membership(name, group, space):
    assert ah.named_auto(name, space).in_group(group)


def test_gamma3_on_cayley_is_left_mult_on_e4_part():
    g = ah.named_auto("gamma3", CAYLEY8)
    x = Octonion.basis(4)
    w = ah.quat_omega()
    want = Octonion(CycArray.concatenate([CycArray.zeros(4), w]))
    assert g(x) == want
    assert g(Octonion.basis(1)) == Octonion.basis(1)


def test_D_and_phi6sigma_are_homomorphisms():
    a, b = ah.cx_exp(5, 36), ah.cx_exp(11, 36)
    assert ah.D(cxmul(a, b)) == ah.D(a) @ ah.D(b)
    t, u = root_of_unity(7, 36), root_of_unity(4, 36)
    assert ah.phi6sigma(t * u) == ah.phi6sigma(t) @ ah.phi6sigma(u)
    assert ah.phi6sigma(CycScalar(-1)) == ah.named_auto("sigma")


def test_phi_f4_w3_hom_law_on_samples():
    doms = (Domain("SUcx", 3), Domain("SUcx", 3))
    xs = _sample_tuples(doms, 2, 1, CTX, "x")
    ys = _sample_tuples(doms, 2, 1, CTX, "y")
    for x, y in zip(xs, ys):
        lhs = ah.phi_f4_w3(cmatmul(x[0], y[0]), cmatmul(x[1], y[1]))
        assert lhs == ah.phi_f4_w3(*x) @ ah.phi_f4_w3(*y)


def test_kernels():
    assert ah.phi_g2_gamma(ah.quat(-1), ah.quat(-1)).is_identity()
    assert ah.phi_f4_gamma(ah.quat(-1), ah.quat_eye(3) * -1).is_identity()
    assert ah.phi_e6_gamma(ah.quat(-1), CycArray.eye(6) * -1).is_identity()
    w = ah.cx_scalar_matrix(ah.cx_omega())
    assert ah.phi_e6_w3(w, w, w).is_identity()
    assert not ah.phi_e6_w3(w, ah.cx_eye(), ah.cx_eye()).is_identity()


def test_embeddings_shapes_and_dets():
    w = omega()
    assert ah.f431(w, w) == CycArray.eye(3) * w
    assert ah.f461(root_of_unity(1, 5, 180), CycArray.eye(5, 180) * root_of_unity(-1, 5, 180)) == CycArray.eye(6, 180)
    p = ah.f472(CycScalar(-1), CycScalar(-1), CycScalar(1), CycArray.eye(2), CycArray.eye(2))
    ah.check_block_unitary(p, (1, 1, 2, 2))


def test_f452_literal_determinant_is_not_one():
    # the literal formula carries det (ab)^-2; recorded as a known defect
    a, b = root_of_unity(1, 36), root_of_unity(2, 36)
    with pytest.raises(ValueError):
        ah.check_block_unitary(ah.f452(a, b, CycArray.eye(2), CycArray.eye(2), CycArray.eye(2)), (2, 2, 2))


def test_h_embedding_is_symplectic():
    h = ah.g421_f421(ah.quat(0, 1), ah.cx_scalar_matrix(ah.cx(0, 1), 2))
    ah.check_sp3(h)


def test_lemma_embed_dispatch():
    assert ah.lemma_embed("f431", omega(), omega()) == ah.f431(omega(), omega())
    with pytest.raises((KeyError, ValueError)):
        ah.lemma_embed("nope")
