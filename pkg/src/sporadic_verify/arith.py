"""Exact integer arithmetic: deterministic primality, prime powers, factored naturals.

Python ints are the arbitrary-precision substrate; everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Mapping

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24."""
    if n < 0:
        raise ValueError("primality is defined for naturals only")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic witness range")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, limit + 1) if sieve[i]]


@dataclass(frozen=True, order=True)
class PrimePower:
    """q = p^k with p prime and k >= 1, ordered by q."""

    q: int
    p: int
    k: int

    def __post_init__(self):
        if self.k < 1 or not is_prime(self.p) or self.p**self.k != self.q:
            raise ValueError(f"not a prime power: {self.p}^{self.k} = {self.q}")

    @classmethod
    def of(cls, q: int) -> "PrimePower":
        """Decompose q as p^k; raises if q is not a prime power."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        for p in range(2, isqrt(q) + 1):
            if q % p == 0:
                k = 0
                m = q
                while m % p == 0:
                    m //= p
                    k += 1
                if m != 1:
                    raise ValueError(f"{q} is not a prime power")
                return cls(q, p, k)
        return cls(q, q, 1)  # q itself is prime

    def __str__(self):
        return str(self.q) if self.k == 1 else f"{self.p}^{self.k}"


def prime_powers_upto(limit: int) -> list[PrimePower]:
    """All prime powers 2 <= q <= limit, ascending by q."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    out = []
    for p in primes_upto(limit):
        q, k = p, 1
        while q <= limit:
            out.append(PrimePower(q, p, k))
            q *= p
            k += 1
    out.sort()
    return out


def divides(a: int, b: int) -> bool:
    """True iff a | b. Requires a >= 1."""
    if a < 1:
        raise ValueError("divisor must be positive")
    return b % a == 0


@dataclass(frozen=True)
class FactoredNat:
    """A natural number given by its prime factorization (empty = 1)."""

    factors: tuple[tuple[int, int], ...]  # sorted (prime, exponent) pairs

    def __post_init__(self):
        seen = set()
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent of {p} must be positive")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p in seen:
                raise ValueError(f"duplicate prime {p}")
            seen.add(p)
        if list(self.factors) != sorted(self.factors):
            raise ValueError("factors must be sorted by prime")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "FactoredNat":
        return cls(tuple(sorted((int(p), int(e)) for p, e in pairs)))

    @property
    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def mul(self, other: "FactoredNat") -> "FactoredNat":
        merged: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredNat.from_pairs(merged.items())

    def divides(self, other: "FactoredNat") -> bool:
        return all(e <= other.exponent(p) for p, e in self.factors)

    def __int__(self):
        return self.value

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def factorize_known(n: int, prime_basis: Iterable[int]) -> tuple[FactoredNat, int]:
    """Factor n over the given primes; returns (factored part, cofactor).

    The cofactor is 1 exactly when n factors completely over the basis.
    """
    basis = sorted(set(prime_basis))
    if not basis:
        raise ValueError("prime basis must be non-empty")
    if n < 1:
        raise ValueError("n must be positive")
    pairs = []
    rest = n
    for p in basis:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            pairs.append((p, e))
    return FactoredNat.from_pairs(pairs), rest


def factorize_smooth(n: int, trial_limit: int = 100_000) -> FactoredNat:
    """Fully factor n by trial division, allowing one large prime cofactor.

    Group orders handled here are smooth; a composite cofactor past the
    trial limit is refused rather than factored.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pairs = []
    rest = n
    p = 2
    while p * p <= rest and p <= trial_limit:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            pairs.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        if not is_prime(rest):
            raise ValueError(f"cannot factor cofactor {rest} of {n}")
        pairs.append((rest, 1))
    return FactoredNat.from_pairs(pairs)
