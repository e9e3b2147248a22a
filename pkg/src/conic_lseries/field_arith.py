"""Exact arithmetic in F_q = F_p[x]/(f) for brute-force point counting.

Polynomials over F_p are dense coefficient tuples, lowest degree first, with
no trailing zeros (the zero polynomial is the empty tuple).  Field elements
are polynomials of degree < n reduced modulo a monic irreducible modulus.

Each element also has an integer *code*: the coefficient vector read as a
base-p number with the constant term as the least significant digit.  Codes
run over ``range(q)`` and fix the enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .config import ENUMERATION_BOUND


class InvalidInputError(ValueError):
    pass


class CapacityError(ValueError):
    """Field too large for brute-force enumeration."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of a small positive integer, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def as_prime_power(q: int) -> tuple[int, int]:
    """Split q = p**n, raising InvalidInputError if q is not a prime power."""
    if q < 2:
        raise InvalidInputError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise InvalidInputError(f"{q} is not a prime power")
    p = ps[0]
    n = 0
    while q > 1:
        q //= p
        n += 1
    return p, n


@dataclass(frozen=True)
class PrimePower:
    p: int
    n: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInputError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise InvalidInputError(f"exponent n = {self.n} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.n

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        return cls(*as_prime_power(q))

    def check_enumerable(self, bound: int = ENUMERATION_BOUND) -> None:
        if self.q > bound:
            raise CapacityError(f"q = {self.q} exceeds enumeration bound {bound}")


# -- polynomials over F_p -------------------------------------------------


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over F_p with coefficients in [0, p), lowest degree first."""

    coefficients: tuple[int, ...]
    p: int

    def __init__(self, coefficients: Sequence[int], p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coefficients", _trim([c % p for c in coefficients]))

    @classmethod
    def x(cls, p: int) -> "Polynomial":
        return cls((0, 1), p)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] += v
        return Polynomial(c, self.p)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-v for v in self.coefficients], self.p)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial((), self.p)
        c = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    c[i + j] += u * v
        return Polynomial(c, self.p)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coefficients)
        b = other.coefficients
        inv_lead = pow(b[-1], -1, p)
        q = [0] * max(len(r) - len(b) + 1, 0)
        for shift in range(len(r) - len(b), -1, -1):
            coef = r[shift + len(b) - 1] * inv_lead % p
            if coef:
                q[shift] = coef
                for j, v in enumerate(b):
                    r[shift + j] = (r[shift + j] - coef * v) % p
        return Polynomial(q, p), Polynomial(r, p)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = pow(self.coefficients[-1], -1, self.p)
        return Polynomial([v * inv for v in self.coefficients], self.p)

    def powmod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial((1,), self.p) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_irreducible(f: Polynomial, p: int | None = None) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n."""
    if p is not None and p != f.p:
        f = Polynomial(f.coefficients, p)
    if f.is_zero() or not f.is_monic() or f.degree < 1:
        raise InvalidInputError(f"expected a monic polynomial of degree >= 1, got {f}")
    p, n = f.p, f.degree
    x = Polynomial.x(p)

    def frobenius_power(k: int) -> Polynomial:
        # x^(p^k) mod f by k successive p-th powers
        g = x % f
        for _ in range(k):
            g = g.powmod(p, f)
        return g

    if (frobenius_power(n) - x) % f != Polynomial((), p):
        return False
    for r in prime_factors(n):
        if poly_gcd(frobenius_power(n // r) - x, f).degree != 0:
            return False
    return True


def find_irreducible(p: int, n: int) -> Polynomial:
    """Lexicographically first monic irreducible polynomial of degree n over F_p.

    Candidates x^n + c(x) are scanned with c(x) ordered by its base-p code.
    """
    if n < 1:
        raise InvalidInputError("degree must be >= 1")
    for code in range(p**n):
        low = _digits(code, p, n)
        f = Polynomial(low + (1,), p)
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def _digits(code: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, d = divmod(code, p)
        out.append(d)
    return tuple(out)


# -- finite fields --------------------------------------------------------


@dataclass(frozen=True)
class FiniteField:
    """F_{p^n} realized as F_p[x]/(modulus).

    Instances are immutable and safe to share between workers.
    """

    prime_power: PrimePower
    modulus: Polynomial
    bound: int = field(default=ENUMERATION_BOUND, compare=False)

    def __post_init__(self):
        pp, f = self.prime_power, self.modulus
        if f.p != pp.p or f.degree != pp.n:
            raise InvalidInputError(f"modulus {f} does not define F_{pp.q}")
        if not is_irreducible(f):
            raise InvalidInputError(f"modulus {f} is reducible over F_{pp.p}")

    @classmethod
    def of_order(cls, q: int, bound: int = ENUMERATION_BOUND) -> "FiniteField":
        pp = PrimePower.from_q(q)
        pp.check_enumerable(bound)
        return cls(pp, find_irreducible(pp.p, pp.n), bound)

    @property
    def p(self) -> int:
        return self.prime_power.p

    @property
    def n(self) -> int:
        return self.prime_power.n

    @property
    def q(self) -> int:
        return self.prime_power.q

    def __repr__(self) -> str:
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}) = GF({self.p})[x]/({self.modulus})"

    def __call__(self, value: int | Sequence[int] | Polynomial) -> "FieldElement":
        """Coerce an integer (as a constant), coefficient sequence or polynomial."""
        if isinstance(value, int):
            poly = Polynomial((value,), self.p)
        elif isinstance(value, Polynomial):
            poly = Polynomial(value.coefficients, self.p)
        else:
            poly = Polynomial(value, self.p)
        return FieldElement(self, poly % self.modulus)

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def gen(self) -> "FieldElement":
        return self((0, 1))

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise InvalidInputError(f"code {code} out of range for F_{self.q}")
        return FieldElement(self, Polynomial(_digits(code, self.p, self.n), self.p))

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements, each once, in increasing code order."""
        self.prime_power.check_enumerable(self.bound)
        for code in range(self.q):
            yield self.from_code(code)

    # Integer-coded arithmetic used by the counting loops.  For n = 1 the
    # code is the residue itself.

    def code_add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        return self._encode(self._decode(a) + self._decode(b))

    def code_sub(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a - b) % self.p
        return self._encode(self._decode(a) - self._decode(b))

    def code_mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        return self._encode(self._decode(a) * self._decode(b) % self.modulus)

    def _decode(self, code: int) -> Polynomial:
        return Polynomial(_digits(code, self.p, self.n), self.p)

    def _encode(self, poly: Polynomial) -> int:
        code = 0
        for c in reversed(poly.coefficients):
            code = code * self.p + c
        return code

    @cached_property
    def square_codes(self) -> tuple[int, ...]:
        """square_codes[c] = code of y*y where y has code c."""
        self.prime_power.check_enumerable(self.bound)
        return tuple(self.code_mul(c, c) for c in range(self.q))


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    poly: Polynomial

    @property
    def code(self) -> int:
        return self.field._encode(self.poly)

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidInputError("operands live in different fields")
            return other
        return self.field(other)

    def __add__(self, other) -> "FieldElement":
        return FieldElement(self.field, self.poly + self._lift(other).poly)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, -self.poly)

    def __sub__(self, other) -> "FieldElement":
        return FieldElement(self.field, self.poly - self._lift(other).poly)

    def __rsub__(self, other) -> "FieldElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "FieldElement":
        return FieldElement(self.field, self.poly * self._lift(other).poly % self.field.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.poly.powmod(e, self.field.modulus))

    def inverse(self) -> "FieldElement":
        if self.poly.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        # a^(q-2) = a^-1 in F_q
        return self ** (self.field.q - 2)

    def __truediv__(self, other) -> "FieldElement":
        return self * self._lift(other).inverse()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.field.q, self.poly.coefficients))

    def __repr__(self) -> str:
        return f"{self.poly} in F_{self.field.q}"
