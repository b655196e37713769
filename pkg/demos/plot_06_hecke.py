"""
Spherical Hecke products
========================

Double cosets K diag(t^a) K in GL_r over F_q[[t]] are labelled by
elementary-divisor types.  Products are computed twice: by counting pairs
of right cosets, and by orbits on the double quotient with subgroup
indices as coefficients.
"""

from dforms import convolve, hco_expand, left_cosets, smith_type
from dforms.hecke import types_up_to

print("Smith type of [[t,1],[0,t]]:", smith_type([[[0, 1], [1]], [[0], [0, 1]]], q=2, N=3))

for q in (2, 3):
    print(f"q={q}: cosets in K diag(1,t) K: {len(left_cosets((0, 1), q))}")
    for a in types_up_to(2, 2):
        for b in types_up_to(2, 3 - sum(a)):
            if sum(a) and sum(b):
                c, h = convolve(a, b, q), hco_expand(a, b, q)
                print(f"  T{a} T{b} = {h}   pair count agrees: {c == h}")
