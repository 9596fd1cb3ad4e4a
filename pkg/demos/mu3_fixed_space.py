"""mu3 fixes exactly the same part of e6 as sigma, so pairs built on it are too big.

The primed variant mu3' gives the expected sizes, but its adjoint has order 9.
"""
from exceptional_z3.autohoms import named_auto
from exceptional_z3.liealg import basis_for, same_image

e6 = basis_for("e6")
auto = {k: named_auto(k) for k in ("sigma", "mu3", "mu3p", "gamma3", "nu3", "w3")}

p_sigma = e6.fixed_projector([auto["sigma"]])
p_mu = e6.fixed_projector([auto["mu3"]])
print("e6 fixed by sigma == e6 fixed by mu3:", same_image(p_sigma, p_mu))

for a, b in (("gamma3", "mu3"), ("nu3", "mu3"), ("mu3", "w3"), ("gamma3", "mu3p"), ("nu3", "mu3p")):
    print(f"dim e6 fixed by ({a}, {b}) = {e6.fixed_dim([auto[a], auto[b]])}")
