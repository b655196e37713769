"""
Drinfeld modules from level structures
======================================

A basis e_1..e_r of an F_q-subspace of L determines
phi_t(X) = t X prod_{v != 0} (1 - X / lambda(v)), whose kernel is that
subspace.  Quotienting by the whole t-torsion gives back an isomorphic
module.
"""

import numpy as np

from dforms import gf, LevelStructure, from_level, quotient_by, is_isomorphic, kernel_roots
from dforms.drinfeld import isomorphism_unit

q, r = 3, 2
L = gf(q).extension(4)
rng = np.random.default_rng(1)

while True:
    lam = LevelStructure(L, q, [L(int(c)) for c in rng.integers(1, L.order, size=r)])
    if lam.is_injective():
        break

theta = L(7)
M = from_level(lam, theta)
print("phi_t =", M.phi_t)
print("rank", M.rank)

# the kernel of phi_t is the image of the level structure
kernel = {x.value for x in kernel_roots(M.phi_t, L)}
print("kernel == lambda(V_r):", kernel == {x.value for x in lam.image_set()})

# quotient by the full t-torsion
M2, xi = quotient_by(M, kernel)
print("isogeny intertwines:", xi.check())
print("quotient isomorphic to M:", is_isomorphic(M, M2), " unit u =", isomorphism_unit(M, M2))
