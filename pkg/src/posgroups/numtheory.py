"""Integer arithmetic used throughout the package.

Everything here is exact and deterministic. Inputs are assumed small enough
for trial division (the package never needs to factor anything beyond a few
times 10^12).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Optional


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(prime, exponent)`` pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def exponent(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.pairs, 1)


@dataclass(frozen=True)
class FermatPrimeWitness:
    p: int
    k: int  # p == 2**(2**k) + 1


def _check_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n}")


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division with a 2,3-wheel."""
    _check_positive(n)
    pairs = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    d, step = 5, 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(n: int | Factorization) -> list[int]:
    """Sorted positive divisors of ``n``."""
    fac = n if isinstance(n, Factorization) else factorize(n)
    divs = [1]
    for p, e in fac:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int | Factorization) -> int:
    fac = n if isinstance(n, Factorization) else factorize(n)
    result = 1
    for p, e in fac:
        result *= (p - 1) * p ** (e - 1)
    return result


def padic_valuation(n: int, p: int) -> int:
    """Largest ``k`` with ``p**k`` dividing ``n``."""
    _check_positive(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def multiplicative_order(z: int, m: int) -> int:
    """Smallest ``t >= 1`` with ``z**t == 1 (mod m)``."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    z %= m
    if math.gcd(z, m) != 1:
        raise ValueError(f"{z} is not a unit modulo {m}")
    t = euler_phi(m)
    for p, _ in factorize(t):
        while t % p == 0 and pow(z, t // p, m) == 1:
            t //= p
    return t


def fermat_prime_check(p: int) -> Optional[FermatPrimeWitness]:
    """Return the witness ``k`` if ``p == 2**(2**k) + 1`` is prime, else None."""
    if p < 3:
        return None
    e = p - 1
    if e & (e - 1):
        return None
    e = e.bit_length() - 1  # p - 1 == 2**e
    if e & (e - 1):
        return None
    if not is_prime(p):
        return None
    return FermatPrimeWitness(p=p, k=e.bit_length() - 1)


class _OddPrimeSubsetSums:
    """Reachability table for sums of distinct odd primes, grown on demand.

    ``reach[j]`` is a bitmask of the sums attainable from the first ``j`` odd
    primes (each used at most once).
    """

    def __init__(self) -> None:
        self.limit = 0
        self.primes: list[int] = []
        self.reach: list[int] = [1]

    def ensure(self, n: int) -> None:
        if n <= self.limit:
            return
        limit = max(n, 2 * self.limit, 64)
        self.primes = [p for p in primes_up_to(limit) if p > 2]
        mask = (1 << (limit + 1)) - 1
        reach = [1]
        for p in self.primes:
            reach.append((reach[-1] | (reach[-1] << p)) & mask)
        self.reach = reach
        self.limit = limit

    def decompose(self, n: int) -> Optional[list[int]]:
        self.ensure(n)
        if not (self.reach[-1] >> n) & 1:
            return None
        chosen = []
        remaining = n
        j = len(self.primes)
        while remaining:
            # largest usable prime whose complement is reachable below it
            j -= 1
            p = self.primes[j]
            if p <= remaining and (self.reach[j] >> (remaining - p)) & 1:
                chosen.append(p)
                remaining -= p
        return sorted(chosen)


_ODD_PRIME_SUMS = _OddPrimeSubsetSums()


def distinct_odd_prime_sum(n: int) -> Optional[list[int]]:
    """Write ``n`` as a sum of distinct odd primes, or return None.

    Among all decompositions, the one found by taking the largest usable
    prime first is returned, sorted ascending. None is returned exactly for
    n in {1, 2, 4, 6, 9}.
    """
    _check_positive(n)
    return _ODD_PRIME_SUMS.decompose(n)


def find_twist(p: int, beta: int) -> int:
    """Smallest ``z >= 2`` of multiplicative order ``p - 1`` modulo ``p**beta``
    whose ``(p-1)``-th power is not 1 modulo ``p**(beta+1)``.

    Concretely, with ``p = 2**(2**k) + 1`` and ``e = 2**(2**k)``:
    ``z**e == 1 (mod p**beta)``, ``z**(e/2) == -1 (mod p**beta)`` and
    ``z**e != 1 (mod p**(beta+1))``.

    The residues of order exactly ``e`` are the odd powers of a generator of
    the order-``e`` subgroup of units, so only those are examined. For each
    residue ``r``, ``(r + t*p**beta)**e`` mod ``p**(beta+1)`` is affine in
    ``t`` with unit slope mod ``p``, so ``t = 0`` or ``t = 1`` always works.
    """
    witness = fermat_prime_check(p)
    if witness is None:
        raise ValueError(f"{p} is not a Fermat prime")
    _check_positive(beta, "beta")
    e = p - 1
    mod = p**beta
    # a quadratic non-residue is a primitive root mod a Fermat prime
    g = next(a for a in range(2, p) if pow(a, e // 2, p) == p - 1)
    g = pow(g, p ** (beta - 1), mod)  # order e modulo p**beta
    candidates = sorted(pow(g, j, mod) for j in range(1, e, 2))
    for t in (0, 1):
        for r in candidates:
            z = r + t * mod
            if pow(z, e, mod * p) != 1:
                return z
    raise AssertionError("unreachable: t = 0 or t = 1 always succeeds")


def lcm(*values: int) -> int:
    return reduce(math.lcm, values, 1)
