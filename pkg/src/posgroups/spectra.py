"""Order spectra, the POS verdict, and divisibility diagnostics."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .groups import DEFAULT_BUDGET, FiniteGroup, element_order, enumerate_elements
from .numtheory import divisors, euler_phi, factorize, padic_valuation


@dataclass(frozen=True)
class OrderSpectrum:
    """Element order -> number of elements of that order, orders ascending.

    Counts are Python ints, so factorial-sized spectra are exact.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple((int(d), int(c)) for d, c in self.entries)
        object.__setattr__(self, "entries", entries)
        orders = [d for d, _ in entries]
        if any(a >= b for a, b in zip(orders, orders[1:])):
            raise ValueError(f"orders must be strictly increasing: {orders}")
        if any(d < 1 or c < 1 for d, c in entries):
            raise ValueError("orders and counts must be positive")
        if not entries or entries[0] != (1, 1):
            raise ValueError("a spectrum must contain exactly one element of order 1")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> "OrderSpectrum":
        items = counts.items() if isinstance(counts, Mapping) else counts
        return cls(tuple(sorted(items)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def orders(self) -> list[int]:
        return [d for d, _ in self.entries]

    @property
    def counts(self) -> list[int]:
        return [c for _, c in self.entries]

    def total(self) -> int:
        return sum(c for _, c in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def count(self, order: int) -> int:
        return self.as_dict().get(order, 0)


@dataclass(frozen=True)
class PosReport:
    group_label: str
    group_order: int
    spectrum: OrderSpectrum
    violations: tuple[tuple[int, int], ...] = field(default=())

    @property
    def is_pos(self) -> bool:
        return not self.violations


def order_spectrum(group: FiniteGroup, budget: int = DEFAULT_BUDGET) -> OrderSpectrum:
    fac = factorize(group.cardinality)
    tally = Counter(element_order(group, g, fac) for g in enumerate_elements(group, budget))
    return OrderSpectrum.from_counts(tally)


def cyclic_spectrum(n: int) -> OrderSpectrum:
    """Spectrum of ``C_n``: ``phi(d)`` elements of each order ``d | n``."""
    pairs = [(1, 1)]
    for p, e in factorize(n):
        pairs = [(d * p**i, phi * (p - 1) * p ** (i - 1) if i else phi) for d, phi in pairs for i in range(e + 1)]
    return OrderSpectrum(tuple(sorted(pairs)))


def pos_verdict(spectrum: OrderSpectrum, group_order: int, label: str = "") -> PosReport:
    violations = tuple((d, c) for d, c in spectrum if group_order % c)
    return PosReport(label, group_order, spectrum, violations)


def phi_divisibility_check(spectrum: OrderSpectrum) -> list[tuple[int, int]]:
    """Entries whose count is not a multiple of ``phi(order)``."""
    return [(d, c) for d, c in spectrum if c % euler_phi(d)]


def frobenius_violations(spectrum: OrderSpectrum, group_order: int) -> list[int]:
    """Divisors ``n`` of the group order with ``n`` not dividing ``#{g : g^n = 1}``."""
    bad = []
    for n in divisors(group_order):
        solutions = sum(c for d, c in spectrum if n % d == 0)
        if solutions % n:
            bad.append(n)
    return bad


def frobenius_check(group: FiniteGroup, budget: int = DEFAULT_BUDGET) -> list[int]:
    return frobenius_violations(order_spectrum(group, budget), group.cardinality)


def odd_prime_bound_check(spectrum: OrderSpectrum, alpha: int) -> list[int]:
    """Orders with more distinct odd prime factors than a POS group allows.

    An order with ``r`` odd prime factors and 2-adic valuation ``k`` needs
    ``r <= alpha - max(k - 1, 0)``, where ``alpha`` is the 2-adic valuation of
    the group order.
    """
    bad = []
    for d, _ in spectrum:
        k = padic_valuation(d, 2)
        r = sum(1 for p, _ in factorize(d) if p != 2)
        if r > alpha - max(k - 1, 0):
            bad.append(d)
    return bad
