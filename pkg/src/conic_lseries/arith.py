"""Sieve, factorization, and the two characters built from the error terms.

``chi`` is the non-principal character mod 4, chi(p) = a_p = (-1)^((p-1)/2).
``chi_hat`` is its twist by the Liouville function: on odd n,
chi_hat(n) = (-1)^Omega(n) * chi(n), so chi_hat(p) = -a_p.  Both vanish on
even n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import SIEVE_LIMIT
from .field_arith import InvalidInputError, is_prime


class UndefinedCharacterError(ValueError):
    pass


class PrimeSieve:
    """Smallest-prime-factor table for 0..limit, immutable after construction."""

    def __init__(self, limit: int = SIEVE_LIMIT):
        if limit < 2:
            raise InvalidInputError("sieve limit must be >= 2")
        self.limit = limit
        dtype = np.int32 if limit < 2**31 else np.int64
        spf = np.zeros(limit + 1, dtype=dtype)
        spf[2::2] = 2
        for i in range(3, math.isqrt(limit) + 1, 2):
            if spf[i] == 0:
                block = spf[i * i :: i]
                block[block == 0] = i
        rest = np.flatnonzero(spf == 0)
        spf[rest] = rest
        spf[:2] = 0
        spf.flags.writeable = False
        self.smallest_prime_factor = spf

    def primes(self, upto: int | None = None) -> np.ndarray:
        upto = self.limit if upto is None else min(upto, self.limit)
        n = np.arange(upto + 1)
        return n[(n >= 2) & (self.smallest_prime_factor[: upto + 1] == n)]

    def is_prime(self, n: int) -> bool:
        if n <= self.limit:
            return n >= 2 and self.smallest_prime_factor[n] == n
        return is_prime(n)

    def big_omega(self, upto: int) -> np.ndarray:
        """Omega(n) (prime factors with multiplicity) for 0..upto; Omega(0) = Omega(1) = 0."""
        if upto > self.limit:
            raise InvalidInputError(f"{upto} exceeds sieve limit {self.limit}")
        m = np.arange(upto + 1, dtype=np.int64)
        omega = np.zeros(upto + 1, dtype=np.int8)
        spf = self.smallest_prime_factor
        active = m > 1
        while active.any():
            idx = np.flatnonzero(active)
            m[idx] //= spf[m[idx]]
            omega[idx] += 1
            active[idx] = m[idx] > 1
        return omega


@lru_cache(maxsize=4)
def default_sieve(limit: int = 10**5) -> PrimeSieve:
    return PrimeSieve(limit)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        for p, r in self.factors:
            if r < 1:
                raise ValueError("exponents must be >= 1")
            prod *= p**r
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def big_omega(self) -> int:
        return sum(r for _, r in self.factors)


def factorize(n: int, sieve: PrimeSieve | None = None) -> Factorization:
    """Ordered prime factorization; trial division beyond the sieve range."""
    if n < 1:
        raise InvalidInputError(f"cannot factor {n}")
    sieve = sieve or default_sieve()
    factors: list[tuple[int, int]] = []
    m = n
    if m > sieve.limit:
        counts: dict[int, int] = {}

        def divide_out(d: int) -> None:
            nonlocal m
            while m % d == 0:
                counts[d] = counts.get(d, 0) + 1
                m //= d

        for p in sieve.primes(math.isqrt(m)):
            if m <= sieve.limit or int(p) ** 2 > m:
                break
            divide_out(int(p))
        d = sieve.limit + 1 + sieve.limit % 2
        while m > sieve.limit and d * d <= m:
            divide_out(d)
            d += 2
        if m > sieve.limit:
            counts[m] = counts.get(m, 0) + 1
            m = 1
        factors = list(counts.items())
    spf = sieve.smallest_prime_factor
    while m > 1:
        p = int(spf[m])
        r = 0
        while m % p == 0:
            m //= p
            r += 1
        factors.append((p, r))
    return Factorization(n, tuple(sorted(factors)))


def a_p(p: int) -> int:
    if p == 2:
        raise UndefinedCharacterError("a_p is only defined for odd primes")
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    return 1 if p % 4 == 1 else -1


def a_prime_power(p: int, k: int) -> int:
    if k < 0:
        raise InvalidInputError("exponent must be >= 0")
    return a_p(p) ** k


def alpha_prime_power(p: int, k: int) -> int:
    if k < 0:
        raise InvalidInputError("exponent must be >= 0")
    return (-a_p(p)) ** k


def chi(n: int, sieve: PrimeSieve | None = None) -> int:
    """Product of a_{p^r} over the factorization of n; 0 for even n."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    if n % 2 == 0:
        return 0
    v = 1
    for p, r in factorize(n, sieve).factors:
        v *= a_prime_power(p, r)
    return v


def chi_closed(n: int) -> int:
    """(-1)^((n-1)/2) on odd n, 0 on even n."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def chi_hat(n: int, sieve: PrimeSieve | None = None) -> int:
    """Product of alpha_{p^r} over the factorization of n; 0 for even n."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    if n % 2 == 0:
        return 0
    v = 1
    for p, r in factorize(n, sieve).factors:
        v *= alpha_prime_power(p, r)
    return v


def liouville(n: int, sieve: PrimeSieve | None = None) -> int:
    return -1 if factorize(n, sieve).big_omega % 2 else 1


def chi_hat_liouville(n: int, sieve: PrimeSieve | None = None) -> int:
    """Independent route: lambda(n) * (-1)^((n-1)/2)."""
    if n % 2 == 0:
        return 0
    return liouville(n, sieve) * chi_closed(n)


def odd_character_arrays(terms: int, sieve: PrimeSieve | None = None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(n, chi(n), chi_hat(n)) for the first ``terms`` odd integers n = 1, 3, 5, ..."""
    n = 2 * np.arange(terms, dtype=np.int64) + 1
    top = int(n[-1]) if terms else 1
    if sieve is None or sieve.limit < top:
        sieve = PrimeSieve(max(top, 2))
    chi_v = np.where(n % 4 == 1, 1, -1).astype(np.int8)
    parity = sieve.big_omega(top)[n] % 2
    chi_hat_v = np.where(parity == 1, -chi_v, chi_v).astype(np.int8)
    return n, chi_v, chi_hat_v


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit, ascending (plain Eratosthenes, no factor table)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mark = np.ones(limit + 1, dtype=bool)
    mark[:2] = False
    mark[4::2] = False
    for i in range(3, math.isqrt(limit) + 1, 2):
        if mark[i]:
            mark[i * i :: 2 * i] = False
    return np.flatnonzero(mark)
