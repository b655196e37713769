"""Drinfeld modules with level-t structure, the ring R_r of modular forms,
invariants of level subgroups and spherical Hecke products over F_q[t].
"""

__version__ = "0.1.0"

from .fields import GF, FieldElement, FieldError, field_make, gf
from .linalg import FqMatrix, mat_rref
from .groups import (MatrixGroup, double_cosets, group_elements, is_fine_image,
                     standard_group)
from .mpoly import MPoly, mpoly_arith, substitute_linear
from .skew import SkewPoly, kernel_roots, skew_mul, skew_right_divide
from .drinfeld import (DrinfeldModule, Isogeny, LevelStructure, act_level, from_level,
                       is_isomorphic, phi_a, quotient_by, rank_of)
from .satake import (RElement, SatakeRing, UniversalFamily, clear_denominators,
                     dim_formula, graded_dim, group_act, invariant_dim,
                     level_dim_formula, specialize_stratum, trace_invariants,
                     universal_coeffs, weighted_hilbert)
from .hecke import (HeckeElement, convolve, hco_expand, index_count, left_cosets,
                    smith_type)
