import pytest
from hypothesis import given, strategies as st

from dforms.fields import FieldError, field_make, gf, is_irreducible, prime_power


def test_prime_field_descriptor():
    F = field_make(2, 1)
    assert F.order == 2 and F.p == 2 and F.base is None


def test_f4_with_given_modulus():
    F = field_make(2, 2, (1, 1, 1))
    w = F(2)
    assert (w * w).value == F.add(2, 1)  # w^2 = w + 1
    assert w.frobenius(1) == w + F.one


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        field_make(2, 2, (1, 0, 1))


def test_non_prime_characteristic_rejected():
    with pytest.raises(FieldError):
        field_make(4, 1)


def test_default_modulus_is_smallest_irreducible():
    F = gf(4)
    assert F.modulus == (1, 1, 1)
    # x^2 + 1 has code 1 + 0*2 and is reducible, x^2 + x + 1 is next
    assert not is_irreducible(gf(2), (1, 0, 1))


def test_characteristic_two_doubling():
    F = gf(8)
    for x in F.elements():
        assert (x + x).is_zero()


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        gf(5).inv(0)


def test_mismatched_fields():
    with pytest.raises(FieldError):
        gf(3)(1) + gf(5)(1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_multiplicative_group_is_cyclic(q):
    F = gf(q)
    g = F.primitive
    seen = {F.pow(g, i) for i in range(q - 1)}
    assert seen == set(range(1, q))


@pytest.mark.parametrize("q,n", [(2, 6), (3, 4), (4, 3), (2, 12), (5, 3)])
def test_frobenius_full_power_is_identity(q, n):
    L = gf(q).extension(n)
    for x in range(L.order):
        assert L.frobenius(x, n) == x
    # elements of the base field are exactly the Frobenius-fixed ones
    fixed = [x for x in range(L.order) if L.frobenius(x, 1) == x]
    assert fixed == list(range(q))


def test_prime_power():
    assert prime_power(16) == (2, 4)
    with pytest.raises(FieldError):
        prime_power(12)


def test_parse_and_format_roundtrip():
    L = gf(4).extension(2)
    for x in range(L.order):
        assert L.parse(L.format(x)) == x


@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_field_axioms_f81(a, b, c):
    F = gf(81)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.sub(F.add(a, b), b) == a


@given(st.integers(0, 63), st.integers(0, 63))
def test_frobenius_is_additive_and_multiplicative(a, b):
    L = gf(4).extension(3)
    f = lambda x: L.frobenius(x, 1)
    assert f(L.add(a, b)) == L.add(f(a), f(b))
    assert f(L.mul(a, b)) == L.mul(f(a), f(b))


def test_vectorised_ops_agree_with_scalar():
    import numpy as np
    F = gf(27)
    xs = np.arange(27)
    for a in range(27):
        assert F.vmul(a, xs).tolist() == [F.mul(a, int(x)) for x in xs]
        assert F.vadd(a, xs).tolist() == [F.add(a, int(x)) for x in xs]
