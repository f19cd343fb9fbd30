"""Order spectra of S_n and A_n from cycle types, and the A_n witness."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Literal

from .numtheory import distinct_odd_prime_sum, lcm
from .spectra import OrderSpectrum

MAX_DEGREE = 60


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]  # descending

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if not parts or parts[-1] < 1:
            raise ValueError(f"invalid cycle type {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must lie in [1, {MAX_DEGREE}], got {n}")


def partitions(n: int) -> Iterator[CycleType]:
    """All partitions of ``n`` in reverse lexicographic order.

    Uses the descending-sequence algorithm of Zoghbi and Stojmenovic (ZS1).
    """
    _check_degree(n)
    x = [1] * (n + 1)
    x[1] = n
    m, h = 1, 1
    yield CycleType((n,))
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield CycleType(tuple(x[1 : m + 1]))


def cycle_type_count(ct: CycleType) -> int:
    """Number of permutations of ``ct.n`` points with cycle type ``ct``."""
    denom = 1
    for length, mult in ct.multiplicities.items():
        denom *= length**mult * math.factorial(mult)
    return math.factorial(ct.n) // denom


def cycle_type_order_and_parity(ct: CycleType) -> tuple[int, str]:
    parity = "even" if (ct.n - len(ct.parts)) % 2 == 0 else "odd"
    return lcm(*ct.parts), parity


def symmetric_spectrum(n: int, restrict: Literal["all", "even"] = "all") -> OrderSpectrum:
    """Spectrum of S_n (``restrict="all"``) or A_n (``restrict="even"``)."""
    if restrict not in ("all", "even"):
        raise ValueError(f"restrict must be 'all' or 'even', got {restrict!r}")
    tally: Counter[int] = Counter()
    for ct in partitions(n):
        order, parity = cycle_type_order_and_parity(ct)
        if restrict == "even" and parity == "odd":
            continue
        tally[order] += cycle_type_count(ct)
    return OrderSpectrum.from_counts(tally)


@dataclass(frozen=True)
class WitnessReport:
    n: int
    decomposition_target: int
    primes: tuple[int, ...]
    witness_order: int
    witness_count: int
    group_order: int

    @property
    def divides(self) -> bool:
        return self.group_order % self.witness_count == 0


def an_pos_witness(n: int) -> WitnessReport:
    """An order class of A_n whose size does not divide ``n!/2``.

    ``n`` (or failing that ``n - 1``) is written as a sum of distinct odd
    primes; the product of those primes is an element order of A_n attained
    by exactly ``n!/prod(primes)`` elements.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    target = n
    primes = distinct_odd_prime_sum(n)
    if primes is None:
        target = n - 1
        primes = distinct_odd_prime_sum(n - 1)
    if primes is None:  # pragma: no cover - n and n-1 are never both exceptional
        raise AssertionError(f"neither {n} nor {n - 1} is a sum of distinct odd primes")
    order = math.prod(primes)
    fact = math.factorial(n)
    return WitnessReport(
        n=n,
        decomposition_target=target,
        primes=tuple(primes),
        witness_order=order,
        witness_count=fact // order,
        group_order=fact // 2,
    )
