from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dforms.caps import CapExceeded, override
from dforms.drinfeld import LevelStructure, from_level
from dforms.fields import gf
from dforms.groups import general_linear, special_linear, standard_group, trivial, unipotent
from dforms.linalg import FqMatrix, rank
from dforms.mpoly import MPoly
from dforms.satake import (ConsistencyError, RElement, clear_denominators, dim_formula,
                           enumerate_subspaces, generalized_binomial, graded_dim, group_act,
                           invariant_basis, invariant_dim, is_invariant, level_dim_formula,
                           level_dim_terms, satake_ring, span_dim_r, specialize_stratum,
                           stratum_matches, trace_invariants, universal_coeffs,
                           weighted_hilbert)
from dforms.verify import half_unipotent, weighted_monomials


def ring22():
    R = satake_ring(2, 2)
    ux = R.gen_of((1, 0))
    uy = R.gen_of((0, 1))
    uxy = R.gen_of((1, 1))
    return R, ux, uy, uxy


def test_lines_are_normalised_and_sorted():
    R = satake_ring(3, 2)
    assert R.lines == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert R.L == 4


def test_scaling_relation():
    R = satake_ring(3, 2)
    # 1/(2x) = 2^{-1} * 1/x = 2 * u_x
    assert R.gen_of((2, 0)).structurally_equal(R.gen_of((1, 0)).scale(2))


def test_clear_denominators_examples():
    R, ux, uy, uxy = ring22()
    x, y = MPoly.var(R.F, 2, 0), MPoly.var(R.F, 2, 1)
    assert clear_denominators(ux) == y * (x + y)
    assert clear_denominators(R.zero(3)).is_zero()
    rel = ux * uy + ux * uxy + uy * uxy
    assert clear_denominators(rel).is_zero()
    assert rel.is_zero() and rel == R.zero(2)


def test_clear_denominators_is_linear_and_matches_product():
    R = satake_ring(3, 2)
    rng = np.random.default_rng(0)
    for _ in range(20):
        f = RElement(R, 2, {m: int(rng.integers(1, 3)) for m in R.monomials(2)[:5]})
        g = RElement(R, 2, {m: int(rng.integers(1, 3)) for m in R.monomials(2)[3:]})
        assert clear_denominators(f + g) == clear_denominators(f) + clear_denominators(g)
    f = R.gen(2) * R.gen(3)
    D = R.denominator
    # f * D^2 computed with sparse polynomials
    expected = MPoly.const(R.F, 2, 1)
    for i, n in enumerate(R.lines):
        e = 2 - (1 if i in (2, 3) else 0)
        for _ in range(e):
            expected = expected * MPoly.linear_form(R.F, n)
    assert clear_denominators(f) == expected
    assert D.degree() == R.L


def eval_rank_dim(r, q, k, n, npts=200, seed=0):
    """Independent oracle: rank of monomials evaluated at points of F_{q^n}^r."""
    L = gf(q).extension(n)
    R = satake_ring(q, r)
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < npts:
        z = [int(c) for c in rng.integers(0, L.order, size=r)]
        try:
            R.gen(0).evaluate(L, z)
            for i in range(R.L):
                R.gen(i).evaluate(L, z)
        except ZeroDivisionError:
            continue
        pts.append(z)
    monos = R.monomials(k)
    M = np.array([[RElement(R, k, {e: 1}).evaluate(L, z) for z in pts] for e in monos])
    return rank(L, M)


@pytest.mark.parametrize("r,q,k,n", [(2, 2, 3, 8), (2, 3, 2, 5), (3, 2, 2, 8), (2, 4, 2, 4)])
def test_graded_dim_against_evaluation_oracle(r, q, k, n):
    assert graded_dim(r, q, k) == eval_rank_dim(r, q, k, n)


def test_graded_dim_examples():
    assert graded_dim(2, 2, 2) == 5
    assert graded_dim(2, 3, 0) == 1
    assert graded_dim(3, 2, 1) == 7


@pytest.mark.parametrize("r,q", [(1, 2), (1, 5), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)])
def test_degree_one_generators_independent(r, q):
    assert graded_dim(r, q, 1) == (q ** r - 1) // (q - 1)


def test_dim_formula_examples():
    assert dim_formula(2, 2, 3) == 7
    assert all(dim_formula(1, q, k) == 1 for q in (2, 3) for k in range(6))
    assert dim_formula(3, 2, 4) == 73 == 1 + 2 * 4 + 4 * 4 + 8 * 6


@given(st.integers(2, 9), st.integers(0, 30))
def test_dim_formula_rank_two(q, k):
    assert dim_formula(2, q, k) == 1 + q * k


def test_graded_dim_cap():
    with override(monomials=10):
        with pytest.raises(CapExceeded):
            graded_dim(2, 2, 4)


@pytest.mark.parametrize("r,q,k", [(2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_degree_one_generation(r, q, k):
    R = satake_ring(q, r)
    ones = [R.gen(i) for i in range(R.L)]
    prods = [g * RElement(R, k, {m: 1}) for g in ones for m in R.monomials(k)]
    assert span_dim_r(prods) == graded_dim(r, q, k + 1)


def test_universal_rank_one():
    U = universal_coeffs(1, 3)
    R = U.ring
    assert U.coeffs[0] == (R.gen(0) ** 2).scale(2)


def test_universal_q2_r2():
    R, ux, uy, uxy = ring22()
    U = universal_coeffs(2, 2)
    assert U.coeffs[0].structurally_equal(ux + uy + uxy)
    assert U.coeffs[1].structurally_equal(ux * uy * uxy)
    assert U.degrees() == [1, 3]
    assert str(U.coeffs[0]) == "u_x + u_y + u_{x+y}"


@pytest.mark.parametrize("q,r,n", [(2, 2, 6), (3, 2, 4), (2, 3, 7), (4, 2, 3)])
def test_universal_matches_from_level_at_points(q, r, n):
    """c_i(z) equals the coefficient of from_level with images z and t = 1."""
    U = universal_coeffs(r, q)
    L = gf(q).extension(n)
    rng = np.random.default_rng(q * 10 + r)
    done = 0
    while done < 5:
        z = [int(c) for c in rng.integers(0, L.order, size=r)]
        lam = LevelStructure(L, q, [L(c) for c in z])
        if not lam.is_injective():
            continue
        M = from_level(lam, L(1))
        for i, c in enumerate(U.coeffs, start=1):
            assert c.evaluate(L, z) == M.coeffs[i].value
        done += 1


def test_universal_coefficients_are_gl_invariant():
    for q, r in [(2, 2), (3, 2), (2, 3)]:
        U = universal_coeffs(r, q)
        G = general_linear(gf(q), r)
        for c in U.coeffs:
            assert is_invariant(c, G)


@pytest.mark.parametrize("q,r,kmax", [(2, 2, 8), (3, 2, 10), (2, 3, 6)])
def test_algebraic_independence(q, r, kmax):
    U = universal_coeffs(r, q)
    w = [q ** i - 1 for i in range(1, r + 1)]
    for k in range(kmax + 1):
        assert span_dim_r(weighted_monomials(U.coeffs, k)) == weighted_hilbert(w, k)


def test_stratum_examples():
    U = universal_coeffs(2, 2)
    S = specialize_stratum(U, [(1, 0)])
    R1 = S.ring
    assert S.coeffs[0].structurally_equal(R1.gen(0))
    assert S.coeffs[1].is_zero()
    assert S.rank() == 1
    full = specialize_stratum(U, [(1, 0), (0, 1)])
    assert all(a.structurally_equal(b) for a, b in zip(full.coeffs, U.coeffs))
    with pytest.raises(ValueError):
        specialize_stratum(U, [])
    with pytest.raises(ValueError):
        specialize_stratum(U, [(1, 1), (1, 1)])


def test_hyperplanes_have_rank_r_minus_one():
    U = universal_coeffs(3, 3)
    for basis in enumerate_subspaces(gf(3), 3):
        if len(basis) == 2:
            S, ok, rk = stratum_matches(U, basis)
            assert ok and rk == 2


def test_subspace_counts():
    assert len(enumerate_subspaces(gf(2), 3)) == 7 + 7 + 1
    assert len(enumerate_subspaces(gf(3), 2)) == 4 + 1


def test_group_act_is_right_action():
    R = satake_ring(3, 2)
    G = general_linear(gf(3), 2).elements()
    f = R.gen(0) * R.gen(1) + R.gen(2) ** 2
    for g, h in [(G[3], G[11]), (G[20], G[40])]:
        assert group_act(group_act(f, g), h) == group_act(f, g @ h)
    assert group_act(f, FqMatrix.identity(gf(3), 2)).structurally_equal(f)


def test_group_act_matches_substitution_on_linear_forms():
    from dforms.mpoly import substitute_linear
    R = satake_ring(3, 2)
    for g in general_linear(gf(3), 2).elements()[::5]:
        for i in range(R.L):
            # 1/v | g = 1/(v o g), so its numerator times (v o g) is D
            img = group_act(R.gen(i), g)
            vg = substitute_linear(MPoly.linear_form(R.F, R.lines[i]), g)
            assert clear_denominators(img) * vg == R.denominator


def test_invariant_examples():
    F2 = gf(2)
    assert [invariant_dim(trivial(F2, 2), k) for k in range(5)] == [graded_dim(2, 2, k) for k in range(5)]
    assert invariant_dim(unipotent(F2, 2), 2) == 3 == comb(2 + 1, 1)
    assert invariant_dim(general_linear(F2, 2), 3) == 2


def test_invariant_basis_is_invariant():
    for kind, q in [("gl", 3), ("sl", 3), ("unipotent", 2)]:
        K = standard_group(kind, q, 2)
        for k in range(5):
            B = invariant_basis(K, k)
            assert len(B) == invariant_dim(K, k)
            assert all(is_invariant(f, K) for f in B)
            if B:
                assert span_dim_r(B) == len(B)


def test_weighted_hilbert_examples():
    assert all(weighted_hilbert([1] * 3, k) == comb(k + 2, 2) for k in range(10))
    assert weighted_hilbert([1, 3], 3) == 2
    assert weighted_hilbert([2, 8], 10) == 2
    with pytest.raises(ValueError):
        weighted_hilbert([], 2)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 25))
def test_weighted_hilbert_brute_force(weights, k):
    count = sum(1 for e in product(*(range(k // w + 1) for w in weights))
                if sum(a * w for a, w in zip(e, weights)) == k)
    assert weighted_hilbert(weights, k) == count


def test_level_formula_examples():
    F2 = gf(2)
    assert level_dim_formula(trivial(F2, 2), 2, 2, 3) == 7 == dim_formula(2, 2, 3)
    assert level_dim_formula(unipotent(F2, 2), 2, 2, 3) == 4
    for K in (trivial(F2, 2), unipotent(F2, 2), trivial(gf(3), 2), unipotent(F2, 3)):
        assert level_dim_formula(K, K.r, K.field.order, 0) == 1


def test_level_formula_double_coset_terms():
    q = 3
    terms = level_dim_terms(unipotent(gf(q), 2))
    assert terms == [(1, 2 * (q - 1), q - 1), (2, (q * q - 1) * (q * q - q) // q, (q - 1) * (q * q - 1))]


def test_level_formula_intermediate_group():
    K = half_unipotent(4)
    assert K.order == 2
    assert [level_dim_formula(K, 2, 4, k) for k in range(5)] == [2 * k + 1 for k in range(5)]


def test_level_formula_requires_unipotent():
    with pytest.raises(ValueError):
        level_dim_formula(general_linear(gf(2), 2), 2, 2, 1)


def test_generalized_binomial():
    assert generalized_binomial(-1, 0) == 1
    assert generalized_binomial(-1, 1) == -1
    assert generalized_binomial(-1, 2) == 1
    assert all(generalized_binomial(n, j) == comb(n, j) for n in range(8) for j in range(8))


def test_trace_examples():
    F3 = gf(3)
    GL, SL = general_linear(F3, 2), special_linear(F3, 2)
    for k in (2, 4):
        for f in invariant_basis(GL, k):
            assert trace_invariants(f, GL, GL) == f
            assert trace_invariants(f, SL, GL) == f.scale(2)
    U = unipotent(F3, 2)
    for f in invariant_basis(U, 3):
        assert trace_invariants(f, trivial(F3, 2), U).is_zero()


def test_trace_preconditions():
    F3 = gf(3)
    GL, SL = general_linear(F3, 2), special_linear(F3, 2)
    with pytest.raises(ValueError):
        trace_invariants(satake_ring(3, 2).gen(0), GL, SL)
    with pytest.raises(ValueError):
        trace_invariants(satake_ring(3, 2).gen(0), SL, GL)


def test_trace_output_is_invariant():
    F2 = gf(2)
    G = general_linear(F2, 2)
    U = unipotent(F2, 2)
    for k in range(4):
        for f in invariant_basis(U, k):
            assert is_invariant(trace_invariants(f, U, G), G)


def test_consistency_error_is_assertion():
    assert issubclass(ConsistencyError, AssertionError)
