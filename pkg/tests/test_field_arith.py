import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conic_lseries.field_arith import (
    CapacityError,
    FiniteField,
    InvalidInputError,
    Polynomial,
    PrimePower,
    find_irreducible,
    is_irreducible,
    is_prime,
)


def has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def brute_irreducible(coeffs, p):
    """Irreducible iff no monic factor of degree 1..n//2 divides it (trial over all candidates)."""
    f = Polynomial(coeffs, p)
    n = f.degree
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = Polynomial(low + (1,), p)
            if (f % g).is_zero():
                return False
    return True


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


@pytest.mark.parametrize("coeffs,p,expected", [
    ((1, 0, 1), 3, True),
    ((2, 0, 1), 3, False),   # x^2 - 1
    ((1, 1, 0, 1), 2, True),
    ((1, 0, 1), 2, False),   # (x + 1)^2
    ((1, 1, 1), 2, True),
    ((0, 1), 7, True),
])
def test_is_irreducible_examples(coeffs, p, expected):
    assert is_irreducible(Polynomial(coeffs, p)) is expected


def test_x2_plus_1_mod_3_has_no_root():
    assert not has_root((1, 0, 1), 3)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (2, 6)])
def test_is_irreducible_matches_trial_division(p, n):
    for low in itertools.product(range(p), repeat=n):
        coeffs = low + (1,)
        assert is_irreducible(Polynomial(coeffs, p)) == brute_irreducible(coeffs, p), coeffs


def test_is_irreducible_rejects_non_monic():
    with pytest.raises(InvalidInputError):
        is_irreducible(Polynomial((1, 2), 3))
    with pytest.raises(InvalidInputError):
        is_irreducible(Polynomial((), 3))


@pytest.mark.parametrize("p,n,expected", [
    (3, 1, (0, 1)),
    (3, 2, (1, 0, 1)),
    (2, 3, (1, 1, 0, 1)),
    (2, 2, (1, 1, 1)),
])
def test_find_irreducible(p, n, expected):
    assert find_irreducible(p, n).coefficients == expected


def test_find_irreducible_deterministic():
    assert find_irreducible(3, 5) == find_irreducible(3, 5)


def test_field_examples():
    f9 = FiniteField.of_order(9)
    x = f9.gen
    assert x * x == f9(2)
    f8 = FiniteField.of_order(8)
    assert f8.gen ** 3 == f8((1, 1))
    f5 = FiniteField.of_order(5)
    assert f5(2).inverse() == f5(3)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        FiniteField.of_order(9).zero.inverse()


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidInputError):
        FiniteField(PrimePower(3, 2), Polynomial((2, 0, 1), 3))


def test_prime_power_validation():
    assert PrimePower.from_q(81) == PrimePower(3, 4)
    for bad in (1, 6, 12, 100):
        with pytest.raises(InvalidInputError):
            PrimePower.from_q(bad)
    with pytest.raises(InvalidInputError):
        PrimePower(4, 1)


def test_enumeration_bound():
    with pytest.raises(CapacityError):
        FiniteField.of_order(2**21)
    with pytest.raises(CapacityError):
        FiniteField.of_order(32, bound=16)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 128, 243, 256])
def test_enumeration_and_lagrange(q):
    F = FiniteField.of_order(q)
    elems = list(F.elements())
    assert len(elems) == q
    assert len({e.poly.coefficients for e in elems}) == q
    assert [e.code for e in elems] == list(range(q))
    for a in elems[1:]:
        assert a ** (q - 1) == F.one
        assert a * a.inverse() == F.one


FIELDS = [FiniteField.of_order(q) for q in (7, 8, 9, 25, 27, 64)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(F, data):
    a, b, c = (F.from_code(data.draw(st.integers(0, F.q - 1))) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    assert a + F.zero == a and a * F.one == a
    if b:
        assert (a / b) * b == a
    # code arithmetic agrees with the element arithmetic
    assert F.code_mul(a.code, b.code) == (a * b).code
    assert F.code_sub(a.code, b.code) == (a - b).code
