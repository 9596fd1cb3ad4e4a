import numpy as np
import pytest

from exceptional_z3 import autohoms as ah, liealg
from exceptional_z3.cayley import OCT_TABLE
from exceptional_z3.groups import CAYLEY8

import oracle


@pytest.fixture(scope="module")
def float_algebras():
    ot = np.array([[oracle.omul(a, b) for b in np.eye(8)] for a in np.eye(8)])
    ct = oracle.circ_tensor()
    return {"g2": oracle.derivation_basis(ot), "f4": oracle.derivation_basis(ct),
            "e6": oracle.form_invariance_basis(oracle.cubic_tensor(ct))}


def test_float_oracle_dimensions(float_algebras):
    assert [len(float_algebras[k]) for k in ("g2", "f4", "e6")] == [14, 52, 78]


@pytest.mark.parametrize("name,dim", [("g2", 14), ("f4", 52), ("e6", 78)])
def test_exact_dimensions(name, dim):
    assert liealg.basis_for(name).dim == dim


def test_f4_certificate_bounds():
    cert = liealg.f4_certificate()
    assert cert["lower_bound"] == cert["upper_bound"] == 52


def test_g2_basis_are_derivations():
    b = liealg.g2_basis()
    for k in range(b.dim):
        assert liealg.is_derivation(b.num[k], OCT_TABLE)


def test_brackets_close():
    assert liealg.g2_basis().bracket_closed()
    assert liealg.e6_infinitesimal_ok()


def test_exact_span_agrees_with_float_oracle(float_algebras):
    for name in ("g2", "f4", "e6"):
        exact = liealg.basis_for(name)
        m = (exact.num / exact.den).reshape(exact.dim, -1).astype(float)
        fl = float_algebras[name].reshape(len(float_algebras[name]), -1)
        assert np.linalg.matrix_rank(np.vstack([m, fl]), tol=1e-8) == exact.dim


@pytest.mark.parametrize("alg,name,space,dim", [
    ("g2", "gamma3", CAYLEY8, 4), ("g2", "w3", CAYLEY8, 8),
    ("f4", "gamma3", "Jordan27", 22), ("f4", "sigma3", "Jordan27", 22), ("f4", "w3", "Jordan27", 16),
    ("e6", "gamma3", "Jordan27", 36), ("e6", "sigma3", "Jordan27", 30), ("e6", "nu3", "Jordan27", 28),
    ("e6", "mu3", "Jordan27", 46), ("e6", "w3", "Jordan27", 24),
])
def test_single_fixed_dims_exact_and_float(float_algebras, alg, name, space, dim):
    g = ah.named_auto(name, space)
    assert liealg.basis_for(alg).fixed_dim([g]) == dim
    assert oracle.fixed_dim(float_algebras[alg], [g.matrix.to_complex()]) == dim


def test_trace_formula_matches_nullity():
    e6 = liealg.e6_basis()
    gs = [ah.named_auto("gamma3"), ah.named_auto("w3")]
    assert e6.fixed_dim(gs) == e6.fixed_dim_nullity(gs) == 18


def test_order_zero_falls_back_to_nullity(float_algebras):
    # mu3p has Ad-order 9: its cube is not a scalar
    g = ah.named_auto("mu3p")
    e6 = liealg.e6_basis()
    assert liealg._order(e6.ad(g)) == 0
    d = e6.fixed_dim([ah.named_auto("gamma3"), g])
    assert d == oracle.fixed_dim(float_algebras["e6"], [ah.named_auto("gamma3").matrix.to_complex(),
                                                         g.matrix.to_complex()])
    with pytest.raises(ArithmeticError):
        e6.fixed_projector([g])


def test_projector_is_idempotent_with_right_rank():
    f4 = liealg.f4_basis()
    p = f4.fixed_projector([ah.named_auto("w3")])
    assert p @ p == p
    assert liealg.same_image(p, p)
    assert round(p.trace().to_float().real) == 16


def test_non_member_rejected():
    from exceptional_z3.groups import AlgMap
    from exceptional_z3.scalar import CycScalar
    with pytest.raises(ValueError):
        liealg.f4_basis().fixed_dim([AlgMap.scalar("Jordan27", CycScalar(2))])


def test_noncommuting_rejected():
    f4 = liealg.f4_basis()
    from exceptional_z3.cycarray import CycArray
    perm = ah.cx_to_quat(ah.field_to_cx(CycArray.from_rational(np.array([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]))))
    a = ah.phi_f4_gamma(ah.quat(1), perm)
    b = ah.named_auto("sigma3")
    assert not a.commutes(b)
    with pytest.raises(ArithmeticError):
        f4.fixed_dim([a, b])
