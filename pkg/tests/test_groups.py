import numpy as np
import pytest

from exceptional_z3 import autohoms as ah
from exceptional_z3.cayley import Octonion
from exceptional_z3.cycarray import CycArray
from exceptional_z3.groups import CAYLEY8, JORDAN27, AlgMap, extend_g2
from exceptional_z3.jordan import E, F, JordanElem, circ, cross
from exceptional_z3.scalar import CycScalar, omega


def test_identity_in_all_groups():
    assert AlgMap.identity(CAYLEY8).is_g2()
    ident = AlgMap.identity(JORDAN27)
    assert ident.is_f4() and ident.is_e6()


def test_scalar_map_membership():
    w = AlgMap.scalar(JORDAN27, omega())
    assert w.is_e6()  # omega E scales the cubic form by omega^3 = 1
    assert not w.is_f4()  # not real
    two = AlgMap.scalar(JORDAN27, CycScalar(2))
    assert not two.is_e6()


def test_non_automorphism_rejected():
    m = np.eye(8, dtype=np.int64)
    m[[1, 2]] = m[[2, 1]]
    swap = AlgMap(CAYLEY8, CycArray.from_rational(m))
    assert not swap.is_g2()  # swaps e1, e2 but fixes e3


def test_named_maps_act_as_automorphisms_on_elements():
    g = ah.named_auto("w3")
    x = F(1, Octonion.basis(3)) + E(2)
    y = F(2, Octonion.basis(5)) + F(3, Octonion.basis(1))
    assert g(circ(x, y)) == circ(g(x), g(y))


def test_e6_cross_rule_on_elements():
    s = ah.named_auto("nu3")
    x = F(1, Octonion.basis(3)) + E(2)
    y = F(2, Octonion.basis(5)) + E(1)
    # alpha X x alpha Y = tau alpha tau (X x Y)
    assert cross(s(x), s(y)) == s.tau_conj()(cross(x, y))


def test_inverse_and_power():
    g = ah.named_auto("gamma3")
    assert g.power(3).is_identity()
    assert g.inverse() == g.power(2)
    assert g.power(-1) == g.power(2)


def test_extend_g2_lands_in_f4():
    g = extend_g2(ah.named_auto("w3", CAYLEY8))
    assert g.is_f4()
    assert g.stabilizes([E(1), E(2), E(3)])


def test_space_mismatch():
    with pytest.raises(ValueError):
        AlgMap.identity(CAYLEY8).compose(AlgMap.identity(JORDAN27))
    with pytest.raises(ValueError):
        AlgMap(CAYLEY8, CycArray.eye(7))
