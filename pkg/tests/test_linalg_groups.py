import numpy as np
import pytest
from hypothesis import given, strategies as st

from dforms.caps import CapExceeded, override
from dforms.fields import gf
from dforms.groups import (MatrixGroup, columns_fixed, double_cosets, format_subgroup_text,
                           general_linear, group_elements, is_fine_image, parse_subgroup_text,
                           special_linear, trivial, unipotent)
from dforms.linalg import FqMatrix, det, mat_rref, nullspace, rank, rref


def test_identity_rank():
    F = gf(5)
    assert rank(F, np.eye(4, dtype=np.int64)) == 4


def test_equal_rows_rank_one():
    assert mat_rref(FqMatrix(gf(2), [[1, 1], [1, 1]]))[0] == 1


def test_rank_vs_determinant_random():
    F = gf(3)
    rng = np.random.default_rng(0)
    for _ in range(100):
        M = rng.integers(0, 3, size=(3, 3))
        assert (rank(F, M) == 3) == (det(F, M) != 0)


@given(st.lists(st.integers(0, 8), min_size=12, max_size=12), st.permutations(range(3)))
def test_rref_idempotent_and_row_permutation(entries, perm):
    F = gf(9)
    M = np.array(entries).reshape(3, 4)
    rk, R, piv = rref(F, M)
    rk2, R2, _ = rref(F, R)
    assert rk == rk2 and np.array_equal(R, R2)
    assert rank(F, M[list(perm)]) == rk


@given(st.lists(st.integers(0, 6), min_size=12, max_size=12))
def test_nullspace_is_kernel(entries):
    F = gf(7)
    M = np.array(entries).reshape(3, 4)
    N = nullspace(F, M)
    assert len(N) == 4 - rank(F, M)
    for v in N:
        assert not ((M @ np.asarray(v)) % 7).any()


def test_matrix_inverse():
    F = gf(4)
    g = FqMatrix(F, [[1, 2], [2, 1]])
    assert g.is_invertible()
    assert g @ g.inverse() == FqMatrix.identity(F, 2)


def test_gl2_f2_order():
    assert len(group_elements(general_linear(gf(2), 2))) == 6


def test_trivial_group():
    assert group_elements(trivial(gf(3), 2)) == [FqMatrix.identity(gf(3), 2)]


def test_unipotent_f4_order():
    assert unipotent(gf(4), 2).order == 4


@pytest.mark.parametrize("q,r,order", [(2, 3, 168), (3, 2, 48), (4, 2, 180), (5, 2, 480)])
def test_gl_orders(q, r, order):
    assert general_linear(gf(q), r).order == order


def test_sl_order():
    assert special_linear(gf(3), 2).order == 24


def test_group_closure_axioms():
    G = general_linear(gf(3), 2)
    els = G.element_set()
    one = G.identity
    assert one in els
    for g in G.elements()[:12]:
        assert g.inverse() in els
        for h in G.elements()[::7]:
            assert g @ h in els


def test_double_cosets_examples():
    F = gf(3)
    G = general_linear(F, 2)
    assert double_cosets(G, G, G)[0] == 1
    T = trivial(F, 2)
    assert double_cosets(T, G, T)[0] == 48
    count, _, sizes = double_cosets(unipotent(F, 2), G, columns_fixed(F, 2, 1))
    assert count == 4 == 2 * (3 - 1)
    assert sum(sizes) == 48


def test_double_cosets_rejects_foreign_subgroup():
    F = gf(3)
    with pytest.raises(ValueError):
        double_cosets(general_linear(F, 2), special_linear(F, 2), trivial(F, 2))


def test_fineness():
    assert is_fine_image(trivial(gf(2), 2))
    assert is_fine_image(unipotent(gf(2), 2))
    assert not is_fine_image(general_linear(gf(2), 2))


def test_group_cap():
    with override(group=100):
        with pytest.raises(CapExceeded):
            general_linear(gf(3), 3).elements()


def test_subgroup_file_roundtrip():
    G = unipotent(gf(4), 2)
    H = parse_subgroup_text(format_subgroup_text(G))
    assert H.element_set() == G.element_set()


def test_subgroup_file_errors():
    with pytest.raises(ValueError):
        parse_subgroup_text("2 2\n1 0 0\n")
    with pytest.raises(ValueError):
        parse_subgroup_text("")


def test_right_coset_reps_partition():
    F = gf(3)
    G = general_linear(F, 2)
    H = special_linear(F, 2)
    reps = H.right_coset_reps(G)
    assert len(reps) == 2
    cosets = [{h @ x for h in H.elements()} for x in reps]
    assert set().union(*cosets) == G.element_set()
