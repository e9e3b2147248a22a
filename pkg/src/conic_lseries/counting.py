"""Point counts of the conic x^2 + y^2 = z^2 over finite fields.

The affine part is x^2 + y^2 = 1; the points at infinity are the y with
y^2 = -1 (the chart 1 + y^2 = z^2 with z normalized).  For every q the
total is q + 1, and for odd q the two error terms cancel.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

import numpy as np

from .arith import primes_upto
from .config import ENUMERATION_BOUND, PAIR_ENUMERATION_BOUND
from .field_arith import CapacityError, FiniteField, InvalidInputError, Polynomial, PrimePower

CSV_COLUMNS = ("q", "p", "n", "affine", "infinity", "total", "affine_error")


@dataclass(frozen=True)
class PointCount:
    p: int
    n: int
    affine: int
    infinity: int

    def __post_init__(self):
        if self.affine < 0 or self.infinity < 0:
            raise ValueError("point counts are nonnegative")

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def total(self) -> int:
        return self.affine + self.infinity

    @property
    def affine_error(self) -> int:
        return self.q - self.affine

    @property
    def infinity_error(self) -> int:
        return 1 - self.infinity

    def row(self) -> tuple[int, ...]:
        return (self.q, self.p, self.n, self.affine, self.infinity, self.total, self.affine_error)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.update(q=self.q, total=self.total, affine_error=self.affine_error,
                 infinity_error=self.infinity_error)
        return d


class CrossCheckError(AssertionError):
    """Brute-force count disagrees with the closed formula."""


def _as_prime_power(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.from_q(q)


def _residue_square_counts(p: int) -> np.ndarray:
    y = np.arange(p, dtype=np.int64)
    return np.bincount(y * y % p, minlength=p)


def count_affine_bruteforce(field: FiniteField) -> int:
    """#{(x, y) in F_q^2 : x^2 + y^2 = 1}, using a table of square multiplicities."""
    field.prime_power.check_enumerable(field.bound)
    if field.n == 1:
        p = field.p
        sq = _residue_square_counts(p)
        x = np.arange(p, dtype=np.int64)
        return int(sq[(1 - x * x) % p].sum())
    squares = field.square_codes
    mult = Counter(squares)
    one = 1  # code of the unit element
    return sum(mult[field.code_sub(one, x2)] for x2 in squares)


def count_affine_pairs(field: FiniteField) -> int:
    """Same count by enumerating all q^2 pairs; slow, kept as a second oracle."""
    if field.q > PAIR_ENUMERATION_BOUND:
        raise CapacityError(f"pair enumeration limited to q <= {PAIR_ENUMERATION_BOUND}")
    squares = field.square_codes
    return sum(
        1
        for x2 in squares
        for y2 in squares
        if field.code_add(x2, y2) == 1
    )


def count_infinity_bruteforce(field: FiniteField) -> int:
    """#{y in F_q : y^2 = -1}."""
    minus_one = field.code_sub(0, 1)
    if field.n == 1:
        return int(_residue_square_counts(field.p)[minus_one])
    return sum(1 for s in field.square_codes if s == minus_one)


def _sign_minus_one(q: int) -> int:
    """(-1)^((q-1)/2) for odd q."""
    return 1 if q % 4 == 1 else -1


def count_affine_formula(q) -> int:
    pp = _as_prime_power(q)
    if pp.p == 2:
        return pp.q
    return pp.q - _sign_minus_one(pp.q)


def count_infinity(q) -> int:
    pp = _as_prime_power(q)
    if pp.p == 2:
        return 1
    return 1 + _sign_minus_one(pp.q)


def count_total(q, cross_check: bool | str = True, bound: int = ENUMERATION_BOUND) -> PointCount:
    """Closed-form PointCount for q, optionally confirmed by brute force.

    The brute-force comparison runs only when q <= bound, unless
    ``cross_check="force"`` in which case an oversized q raises CapacityError.
    """
    pp = _as_prime_power(q)
    pc = PointCount(pp.p, pp.n, count_affine_formula(pp), count_infinity(pp))
    if cross_check == "force":
        pp.check_enumerable(bound)
    if cross_check and pp.q <= bound:
        field = FiniteField.of_order(pp.q, bound)
        brute = count_affine_bruteforce(field)
        if brute != pc.affine:
            raise CrossCheckError(f"F_{pp.q}: brute force {brute} != formula {pc.affine}")
        inf = count_infinity_bruteforce(field)
        if inf != pc.infinity:
            raise CrossCheckError(f"F_{pp.q}: {inf} points at infinity, formula {pc.infinity}")
    if pc.total != pp.q + 1:
        raise CrossCheckError(f"F_{pp.q}: total {pc.total} != q + 1")
    return pc


def power_sum_mod_p(p: int, k: int) -> int:
    """sum_{x in F_p} x^k mod p (with 0^0 = 1)."""
    if p == 2 or p < 2:
        raise InvalidInputError("p must be an odd prime")
    if k > 0 and k % (p - 1) == 0:
        return p - 1
    return 0


def power_sum_direct(p: int, k: int) -> int:
    return sum(pow(x, k, p) for x in range(p)) % p


# -- bulk scans -----------------------------------------------------------


def _count_chunk(args) -> list[PointCount]:
    primes, cross_limit = args
    out = []
    for p in primes:
        pc = PointCount(p, 1, count_affine_formula(p), count_infinity(p))
        if p <= cross_limit:
            field = FiniteField(PrimePower(p), _linear_modulus(p))
            brute = count_affine_bruteforce(field)
            if brute != pc.affine:
                raise CrossCheckError(f"F_{p}: brute force {brute} != formula {pc.affine}")
        out.append(pc)
    return out


def _linear_modulus(p: int) -> Polynomial:
    return Polynomial((0, 1), p)


def _chunks(items: list[int], size: int) -> Iterator[list[int]]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


def scan_primes(
    limit: int,
    workers: int = 1,
    cross_check_limit: int = ENUMERATION_BOUND,
    chunk_size: int = 256,
) -> Iterator[PointCount]:
    """PointCount for every odd prime p <= limit, in ascending p.

    Primes up to ``cross_check_limit`` are confirmed by brute force.  Output
    order does not depend on ``workers``.
    """
    if workers < 1:
        raise InvalidInputError("workers must be >= 1")
    primes = [int(p) for p in primes_upto(limit) if p > 2]
    jobs = [(chunk, cross_check_limit) for chunk in _chunks(primes, chunk_size)]
    if workers == 1 or len(jobs) <= 1:
        for job in jobs:
            yield from _count_chunk(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order
        for block in pool.map(_count_chunk, jobs):
            yield from block


def write_csv(counts: Iterable[PointCount], stream: io.TextIOBase, header: bool = True) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    if header:
        writer.writerow(CSV_COLUMNS)
    for pc in counts:
        writer.writerow(pc.row())
