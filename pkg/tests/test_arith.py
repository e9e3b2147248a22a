import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conic_lseries.arith import (
    PrimeSieve,
    UndefinedCharacterError,
    a_p,
    a_prime_power,
    alpha_prime_power,
    chi,
    chi_closed,
    chi_hat,
    chi_hat_liouville,
    factorize,
    odd_character_arrays,
    primes_upto,
)
from conic_lseries.counting import count_total
from conic_lseries.field_arith import InvalidInputError


@pytest.fixture(scope="module")
def sieve():
    return PrimeSieve(10**6)


def trial_division_primes(n):
    return [k for k in range(2, n + 1) if all(k % d for d in range(2, math.isqrt(k) + 1))]


def test_sieve_matches_trial_division():
    s = PrimeSieve(10**4)
    assert list(s.primes()) == trial_division_primes(10**4)
    assert list(primes_upto(10**4)) == trial_division_primes(10**4)
    spf = s.smallest_prime_factor
    for n in range(2, 10**4 + 1):
        assert n % spf[n] == 0 and s.is_prime(int(spf[n]))


def test_sieve_is_read_only():
    s = PrimeSieve(100)
    with pytest.raises(ValueError):
        s.smallest_prime_factor[5] = 1


def test_prime_count_1e6(sieve):
    assert len(sieve.primes()) == 78498


@pytest.mark.parametrize("n,factors", [
    (360, ((2, 3), (3, 2), (5, 1))),
    (97, ((97, 1),)),
    (1, ()),
    (2**20, ((2, 20),)),
])
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


def test_factorize_zero():
    with pytest.raises(InvalidInputError):
        factorize(0)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10**12))
def test_factorize_beyond_sieve(n):
    f = factorize(n, PrimeSieve(1000))
    assert math.prod(p**r for p, r in f.factors) == n
    ps = [p for p, _ in f.factors]
    assert ps == sorted(set(ps))
    assert all(PrimeSieve(2).is_prime(p) for p in ps)


@pytest.mark.parametrize("p,expected", [(5, 1), (3, -1), (13, 1), (7, -1)])
def test_a_p(p, expected):
    assert a_p(p) == expected


def test_a_p_rejects_two_and_composites():
    with pytest.raises(UndefinedCharacterError):
        a_p(2)
    with pytest.raises(InvalidInputError):
        a_p(9)


@pytest.mark.parametrize("p,k,expected", [(3, 2, 1), (3, 0, 1), (7, 3, -1)])
def test_a_prime_power(p, k, expected):
    assert a_prime_power(p, k) == expected == (-1) ** ((p**k - 1) // 2)


@pytest.mark.parametrize("p,k,expected", [(3, 1, 1), (5, 1, -1), (3, 2, 1)])
def test_alpha_prime_power(p, k, expected):
    assert alpha_prime_power(p, k) == expected


def test_recurrences():
    for p in map(int, primes_upto(1000)[1:]):
        for k in range(1, 7):
            direct = (-1) ** ((p**k - 1) // 2)
            assert direct == (-1) ** ((p ** (k - 1) - 1) // 2) * a_p(p)
            assert alpha_prime_power(p, k) == alpha_prime_power(p, k - 1) * alpha_prime_power(p, 1)
            assert alpha_prime_power(p, k) == (-1) ** k * direct


@pytest.mark.parametrize("n,expected", [(1, 1), (15, -1), (9, 1), (2, 0), (12, 0)])
def test_chi(n, expected):
    assert chi(n) == expected


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 1), (45, -1), (5, -1), (4, 0)])
def test_chi_hat(n, expected):
    assert chi_hat(n) == expected


def test_chi_closed_form_to_1e6(sieve):
    n, chi_v, chi_hat_v = odd_character_arrays(500_000, sieve)
    assert np.array_equal(chi_v, np.where(n % 4 == 1, 1, -1))
    # spot-check the vectorized characters against the scalar factorization route
    for i in range(0, 500_000, 997):
        assert chi_v[i] == chi(int(n[i]), sieve)
        assert chi_hat_v[i] == chi_hat(int(n[i]), sieve) == chi_hat_liouville(int(n[i]), sieve)


def test_chi_factorization_equals_closed_form_small(sieve):
    for m in range(1, 20001, 2):
        assert chi(m, sieve) == chi_closed(m)
        assert chi_hat(m, sieve) == chi_hat_liouville(m, sieve)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**5), st.integers(1, 10**5))
def test_multiplicative_on_coprime(r, s):
    if math.gcd(r, s) != 1 or r * s > 10**5:
        return
    assert chi(r * s) == chi(r) * chi(s)
    assert chi_hat(r * s) == chi_hat(r) * chi_hat(s)


def test_chi_completely_multiplicative_on_odd():
    for r in range(1, 200, 2):
        for s in range(1, 200, 2):
            assert chi(r * s) == chi(r) * chi(s)


def test_a_p_is_counting_error_term():
    for p in map(int, primes_upto(4096)[1:]):
        assert a_p(p) == count_total(p).affine_error
