"""Necessary conditions on the order of a POS group, and range scans over them.

Each rule is an independent function returning a ``Check`` so reports can say
which condition excludes a given integer. Passing every rule does not mean a
POS group of that order exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .numtheory import Factorization, divisors, factorize, fermat_prime_check, is_prime

MAX_SCAN = 10**7
MAX_PROBE = 10**9
CASCADE_PRIME = 77659  # least prime q > 43 with (q - 1) | 2*3*7*43^r

RULES = ("even", "pm1-divides", "fermat-smallest", "cascade")


@dataclass(frozen=True)
class Check:
    rule: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    checks: tuple[Check, ...]
    realized_by: Optional[str] = None

    @property
    def feasible(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_rules(self) -> list[str]:
        return [c.rule for c in self.checks if not c.passed]


def _fac(n: int, fac: Optional[Factorization]) -> Factorization:
    return fac if fac is not None else factorize(n)


def check_even(n: int, fac: Optional[Factorization] = None) -> Check:
    ok = n == 1 or n % 2 == 0
    return Check("even", ok, "order is 1 or even" if ok else f"{n} is odd and > 1")


def check_pm1_divides(n: int, fac: Optional[Factorization] = None) -> Check:
    bad = [p for p, _ in _fac(n, fac) if n % (p - 1)]
    if bad:
        return Check("pm1-divides", False, f"p - 1 does not divide {n} for p in {bad}")
    return Check("pm1-divides", True, "p - 1 divides n for every prime p | n")


def check_fermat_smallest(n: int, fac: Optional[Factorization] = None) -> Check:
    odd = [p for p, _ in _fac(n, fac) if p != 2]
    if not odd:
        return Check("fermat-smallest", True, "no odd prime factor")
    if fermat_prime_check(odd[0]) is None:
        return Check("fermat-smallest", False, f"smallest odd prime factor {odd[0]} is not a Fermat prime")
    v2n = (n & -n).bit_length() - 1
    bad = [p for p in odd if ((p - 1) & -(p - 1)).bit_length() - 1 > v2n]
    if bad:
        return Check("fermat-smallest", False, f"ord_2(p - 1) > ord_2(n) = {v2n} for p in {bad}")
    return Check("fermat-smallest", True, f"smallest odd prime {odd[0]} is Fermat; 2-parts bounded")


def check_cascade(n: int, fac: Optional[Factorization] = None) -> Check:
    """Small 2-, 3- and 7-parts force 3, 7, then 43^2 and a large prime."""
    if n % 2:
        return Check("cascade", True, "not applicable to odd n")
    fac = _fac(n, fac)
    e2, e3, e7 = fac.exponent(2), fac.exponent(3), fac.exponent(7)
    if e2 != 1:
        return Check("cascade", True, "ord_2(n) != 1")
    if e3 == 0:
        ok = n == 2
        return Check("cascade", ok, "n = 2" if ok else "ord_2(n) = 1 requires n = 2 or 3 | n")
    if e3 != 1:
        return Check("cascade", True, "ord_3(n) > 1")
    if e7 == 0:
        ok = n == 6
        return Check("cascade", ok, "n = 6" if ok else "ord_2 = ord_3 = 1 requires n = 6 or 7 | n")
    if e7 != 1:
        return Check("cascade", True, "ord_7(n) > 1")
    if n == 42:
        return Check("cascade", True, "n = 42")
    # combined rule: 43^2 | n and a prime p >= 77659 with p | n and (p - 1) | n
    big = [p for p, _ in fac if p >= CASCADE_PRIME and n % (p - 1) == 0]
    ok = fac.exponent(43) >= 2 and bool(big)
    detail = (
        f"43^2 * {big[0]} divides n"
        if ok
        else f"ord_2 = ord_3 = ord_7 = 1 requires n = 42 or 43^2 * p | n with prime p >= {CASCADE_PRIME}, (p - 1) | n"
    )
    r = fac.exponent(43)
    if 1 <= r <= 3 and n == 42 * 43**r * CASCADE_PRIME:
        detail += "; orders 42 * 43^r * 77659 with r <= 3 are also known to be excluded by a counting argument not encoded here"
    return Check("cascade", ok, detail)


def realized_by(n: int, fac: Optional[Factorization] = None) -> Optional[str]:
    """Label of a known POS group of order ``n``, if the package builds one."""
    if n == 1:
        return "cyclic:1"
    fac = _fac(n, fac)
    primes = fac.primes
    if primes and primes[0] == 2 and set(primes) <= {2, 3}:
        return f"cyclic:{n}"
    if len(primes) == 2 and primes[0] == 2:
        p = primes[1]
        alpha, beta = fac.exponent(2), fac.exponent(p)
        if fermat_prime_check(p) is not None and 2**alpha >= p - 1:
            return f"thm32:{p},{alpha},{beta}"
    if n == 42:
        return "c6c7"
    if n % 21 == 0:
        rest = n // 21
        if rest & (rest - 1) == 0 and rest >= 2:
            return f"c2am21:{rest.bit_length() - 1}"
    return None


def feasibility_report(n: int, fac: Optional[Factorization] = None) -> FeasibilityReport:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    fac = _fac(n, fac)
    checks = tuple(
        rule(n, fac) for rule in (check_even, check_pm1_divides, check_fermat_smallest, check_cascade)
    )
    report = FeasibilityReport(n, checks)
    if report.feasible:
        report = FeasibilityReport(n, checks, realized_by(n, fac))
    return report


def _smallest_prime_factors(hi: int) -> np.ndarray:
    spf = np.zeros(hi + 1, dtype=np.int64)
    for p in range(2, int(hi**0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.nonzero(spf == 0)[0]
    spf[idx] = idx
    return spf


def _factor_with(n: int, spf: np.ndarray) -> Factorization:
    pairs = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        pairs.append((p, e))
    return Factorization(tuple(pairs))


def scan(lo: int, hi: int) -> list[FeasibilityReport]:
    """Reports for every feasible n in ``[lo, hi]``."""
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    if hi > MAX_SCAN:
        raise OverflowError(f"scan range upper end {hi} exceeds {MAX_SCAN}")
    spf = _smallest_prime_factors(hi)
    out = []
    for n in range(lo, hi + 1):
        if n > 1 and n % 2:
            continue  # excluded by the parity rule; skip factoring
        report = feasibility_report(n, _factor_with(n, spf))
        if report.feasible:
            out.append(report)
    return out


def pm1_closed_extensions(base: int, bound: int) -> list[int]:
    """All ``n <= bound`` extending ``base`` by primes larger than its own, such
    that ``(q - 1) | n`` for each added prime ``q``. ``base`` itself excluded.

    Every added prime ``q`` has ``q - 1`` built from strictly smaller primes,
    all of which are already fixed when ``q`` is chosen, so a depth-first
    search over divisors is exhaustive.
    """
    found = []

    def extend(value: int, last: int) -> None:
        for d in divisors(value):
            q = d + 1
            if q <= last or not is_prime(q):
                continue
            nxt = value * q
            while nxt <= bound:
                found.append(nxt)
                extend(nxt, q)
                nxt *= q

    extend(base, max(p for p, _ in factorize(base)))
    return sorted(found)


def conjecture_probe(bound: int) -> list[int]:
    """Orders ``n <= bound`` with ``ord_2 = ord_3 = ord_7 = 1`` and ``n != 42``
    that no rule excludes: candidate counterexamples to ``|G| = 42``.

    The ``p - 1`` rule alone admits ``42 * 43^r``; the cascade removes those.
    """
    if bound > MAX_PROBE:
        raise OverflowError(f"probe bound {bound} exceeds {MAX_PROBE}")
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    # 5 cannot divide such n (4 would have to), so 2, 3, 7 are the primes below 11
    return [n for n in pm1_closed_extensions(42, bound) if feasibility_report(n).feasible]
