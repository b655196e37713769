"""
The universal family and boundary strata
========================================

Expanding prod_v (1 - u_v X) over all non-zero v leaves only exponents
X^(q^i - 1); the surviving coefficients c_1..c_r are GL_r(F_q)-invariant
and algebraically independent.  Setting the generators outside a subspace
V' to zero gives the universal family of smaller rank.
"""

from dforms import universal_coeffs, group_act, standard_group
from dforms.fields import gf
from dforms.satake import enumerate_subspaces, stratum_matches, span_dim_r, weighted_hilbert
from dforms.verify import weighted_monomials

U = universal_coeffs(2, 3)
for i, c in enumerate(U.coeffs, start=1):
    print(f"c_{i} (degree {c.degree}) = {c}")

G = standard_group("gl", 3, 2)
print("invariant under GL_2(F_3):", all(group_act(c, g) == c for c in U.coeffs for g in G.gens))

# no relations among c_1, c_2 in low weights
for k in range(0, 11, 2):
    print(k, span_dim_r(weighted_monomials(U.coeffs, k)), weighted_hilbert([2, 8], k))

# strata of the rank-3 family over F_2
U3 = universal_coeffs(3, 2)
for basis in enumerate_subspaces(gf(2), 3):
    S, ok, rank = stratum_matches(U3, basis)
    print(f"V' = {basis}: rank {rank}, matches the rank-{len(basis)} family: {ok}")
