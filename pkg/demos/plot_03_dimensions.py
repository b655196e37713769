"""
Dimensions of spaces of modular forms
=====================================

The degree-k piece of the ring R_r generated by the reciprocals 1/v of
non-zero linear forms is the space of weight-k forms.  Its dimension is
computed by row-reducing numerators and compared with the closed formula
sum_i q^(sum nu*i_nu) binomial(k, sum i_nu).
"""

from dforms import graded_dim, dim_formula
from dforms.satake import satake_ring, clear_denominators

R = satake_ring(2, 2)
ux, uy, uxy = (R.gen_of(v) for v in [(1, 0), (0, 1), (1, 1)])

# the partial-fraction relation in degree 2
rel = ux * uy + ux * uxy + uy * uxy
print("relation:", rel, " numerator:", clear_denominators(rel), " zero:", rel.is_zero())

for q, r, kmax in [(2, 2, 6), (3, 2, 4), (2, 3, 4)]:
    oracle = [graded_dim(r, q, k) for k in range(kmax + 1)]
    formula = [dim_formula(r, q, k) for k in range(kmax + 1)]
    print(f"q={q} r={r}: {oracle}  formula agrees: {oracle == formula}")
