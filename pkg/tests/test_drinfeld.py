import numpy as np
import pytest

from dforms.drinfeld import (DrinfeldModule, LevelError, LevelStructure, QuotientError,
                             act_level, from_level, is_isomorphic, isomorphism_unit,
                             kernel_polynomial, module_from_text, module_to_text,
                             moore_subspace_polynomial, phi_a, quotient_by, rank_of, torsion)
from dforms.fields import gf
from dforms.funcfield import function_field
from dforms.groups import general_linear
from dforms.linalg import FqMatrix
from dforms.skew import SkewPoly, kernel_roots, skew_mul
from dforms.verify import random_level


def test_rank_one_q3_generic():
    K = function_field(gf(3), 0)
    t = K.gen("t")
    M = from_level(LevelStructure(K, 3, [K.one]), t)
    # t X - t X^3
    assert M.phi_t == SkewPoly(K, [t, -t], 3)
    assert rank_of(M) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_rank_one_any_q(q):
    L = gf(q).extension(2)
    theta = L(L.order - 1)
    M = from_level(LevelStructure(L, q, [L(1)]), theta)
    assert M.coeffs[1] == -theta


def test_dependent_images_rejected():
    L = gf(2).extension(4)
    with pytest.raises(LevelError):
        from_level(LevelStructure(L, 2, [L(3), L(3)]), L(1))


def test_phi_of_constants_and_powers():
    rng = np.random.default_rng(5)
    M = from_level(random_level(rng, 3, 2, 4), gf(3).extension(4)(5))
    assert phi_a(M, [1]) == SkewPoly(M.ring, [M.ring(1)], 3)
    assert phi_a(M, [0, 0, 1]) == skew_mul(M.phi_t, M.phi_t)
    tp1 = phi_a(M, [1, 1])
    assert tp1 == M.phi_t + 1
    assert phi_a(M, [0, 1, 1]) == skew_mul(M.phi_t, tp1) == skew_mul(tp1, M.phi_t)
    assert phi_a(M, [2, 0, 1]).degree == 2 * M.rank


def test_torsion_counts_and_closure():
    rng = np.random.default_rng(6)
    lam = random_level(rng, 2, 3, 6)
    L = lam.ring
    M = from_level(lam, L(9))
    T = torsion(M, [0, 1])
    assert len(T) == 2 ** 3
    codes = {x.value for x in T}
    assert all(L.add(a, b) in codes for a in codes for b in codes)
    assert all(M.phi_t(L(a)).value in codes for a in codes)


def test_quotient_trivial_subgroup():
    rng = np.random.default_rng(7)
    lam = random_level(rng, 3, 2, 4)
    M = from_level(lam, lam.ring(2))
    M2, xi = quotient_by(M, {0})
    assert M2 == M and xi.psi == SkewPoly(M.ring, [M.ring(1)], 3)


def test_quotient_full_torsion_is_isomorphic():
    rng = np.random.default_rng(8)
    for q, r, n in [(2, 2, 4), (3, 2, 3), (4, 1, 2), (2, 3, 5)]:
        lam = random_level(rng, q, r, n)
        L = lam.ring
        theta = L(int(rng.integers(1, L.order)))
        M = from_level(lam, theta)
        M2, xi = quotient_by(M, {x.value for x in lam.image_set()})
        assert xi.check()
        u = isomorphism_unit(M, M2)
        assert u is not None
        assert all(M2.coeffs[i] == u ** (q ** i - 1) * M.coeffs[i] for i in range(r + 1))


def test_quotient_by_a_line():
    rng = np.random.default_rng(9)
    for q, r, n in [(2, 2, 4), (3, 3, 5), (5, 2, 2)]:
        lam = random_level(rng, q, r, n)
        L = lam.ring
        M = from_level(lam, L(1))
        e = lam.images[0]
        H = {(L(a) * e).value for a in range(q)}
        M2, xi = quotient_by(M, H)
        assert xi.psi.degree == 1
        assert rank_of(M2) == rank_of(M)
        assert xi.check()


def test_quotient_errors():
    rng = np.random.default_rng(10)
    lam = random_level(rng, 2, 2, 6)
    L = lam.ring
    M = from_level(lam, L(3))
    with pytest.raises(QuotientError):
        quotient_by(M, {0, 5, 6})
    outside = next(x for x in range(1, L.order) if x not in {v.value for v in lam.image_set()})
    with pytest.raises(QuotientError):
        quotient_by(M, {0, outside})


def test_isogeny_cocycle():
    rng = np.random.default_rng(11)
    for q, r, n in [(2, 2, 4), (3, 2, 3), (2, 3, 6)]:
        lam = random_level(rng, q, r, n)
        L = lam.ring
        M = from_level(lam, L(int(rng.integers(1, L.order))))
        e1, e2 = lam.images[0], lam.images[1]
        H1 = {(L(a) * e1).value for a in range(q)}
        H12 = {(L(a) * e1 + L(b) * e2).value for a in range(q) for b in range(q)}
        M1, xi1 = quotient_by(M, H1)
        H2 = {xi1.psi(L(h)).value for h in H12}
        M2, xi2 = quotient_by(M1, H2)
        M3, xi3 = quotient_by(M, H12)
        assert xi2.compose(xi1).psi == xi3.psi
        assert M2 == M3
        assert xi3.psi.degree == 2


def test_moore_polynomial_matches_product():
    rng = np.random.default_rng(12)
    for q, n in [(2, 6), (3, 4), (4, 3)]:
        lam = random_level(rng, q, 2, n)
        L = lam.ring
        roots = [x for x in lam.image_set() if not x.is_zero()]
        assert moore_subspace_polynomial(L, q, lam.images) == kernel_polynomial(L, q, roots)


def test_act_level_composition_and_identity():
    rng = np.random.default_rng(13)
    lam = random_level(rng, 3, 2, 4)
    F = gf(3)
    G = general_linear(F, 2).elements()
    g, h = G[5], G[17]
    assert act_level(lam, FqMatrix.identity(F, 2)).images == lam.images
    assert act_level(act_level(lam, g), h).images == act_level(lam, g @ h).images
    M = from_level(lam, lam.ring(7))
    for k in G:
        assert from_level(act_level(lam, k), lam.ring(7)) == M


def test_generic_level_invariance_f2():
    K = function_field(gf(2), 2)
    x, y, t = K.gens()
    lam = LevelStructure(K, 2, [x, y])
    M = from_level(lam, t)
    assert M.rank == 2
    for g in general_linear(gf(2), 2).elements():
        assert from_level(act_level(lam, g), t) == M


def test_act_level_singular():
    rng = np.random.default_rng(14)
    lam = random_level(rng, 2, 2, 4)
    with pytest.raises(ValueError):
        act_level(lam, FqMatrix(gf(2), [[1, 1], [1, 1]]))


def test_text_roundtrip():
    rng = np.random.default_rng(15)
    lam = random_level(rng, 4, 2, 3)
    M = from_level(lam, lam.ring(11))
    text = module_to_text(M)
    assert text.splitlines()[0] == "4 2 3"
    assert module_from_text(text) == M


def test_not_isomorphic_when_structure_differs():
    rng = np.random.default_rng(16)
    lam = random_level(rng, 2, 2, 4)
    L = lam.ring
    assert not is_isomorphic(from_level(lam, L(2)), from_level(lam, L(3)))
