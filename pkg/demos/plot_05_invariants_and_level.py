"""
Invariants for level subgroups
==============================

Forms for a level subgroup K are K-invariants in R_r.  For GL, SL and the
unipotent group the invariant rings are weighted polynomial rings; for
unipotent images the dimension is also given by a double-coset formula.
The trace from a subgroup multiplies invariants by the index.
"""

from dforms import invariant_dim, level_dim_formula, standard_group, trace_invariants
from dforms.fields import gf
from dforms.groups import special_linear
from dforms.satake import gl_weights, invariant_basis, sl_weights, weighted_hilbert
from dforms.verify import half_unipotent

q, r = 3, 2
for kind, w in [("gl", gl_weights(q, r)), ("sl", sl_weights(q, r))]:
    K = standard_group(kind, q, r)
    print(kind, [invariant_dim(K, k) for k in range(9)], [weighted_hilbert(w, k) for k in range(9)])

K = half_unipotent(4)
print("index-2 subgroup of the unipotent group, q=4:",
      [invariant_dim(K, k) for k in range(5)], [level_dim_formula(K, 2, 4, k) for k in range(5)])

GL, SL = standard_group("gl", 3, 2), special_linear(gf(3), 2)
f = invariant_basis(GL, 2)[0]
print("f =", f)
print("trace_SL^GL(f) == 2 f:", trace_invariants(f, SL, GL) == f.scale(2))
