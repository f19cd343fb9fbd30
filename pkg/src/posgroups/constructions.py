"""Families of nonabelian POS groups together with their predicted spectra.

The predicted tables are computed from closed-form row families only; they
never look at a group object, so comparing them with an enumerated spectrum
is a genuine two-sided check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .groups import (
    Cyclic,
    DirectProduct,
    InvalidParameters,
    TwistedProduct,
    make_metacyclic,
    make_twisted,
)
from .numtheory import fermat_prime_check, find_twist
from .spectra import OrderSpectrum

# Rows of the published C_6 x| C_7 table (orders 1,2,3,6,7,14).
C6_C7_TABLE = OrderSpectrum(((1, 1), (2, 1), (3, 14), (6, 14), (7, 6), (14, 6)))


@dataclass(frozen=True)
class Theorem32Params:
    p: int
    k: int
    alpha: int
    beta: int
    z: int

    @classmethod
    def build(cls, p: int, alpha: int, beta: int) -> "Theorem32Params":
        witness = fermat_prime_check(p)
        if witness is None:
            raise InvalidParameters(f"p={p} is not a Fermat prime")
        if alpha < 1 or beta < 1:
            raise InvalidParameters(f"alpha and beta must be positive, got {alpha}, {beta}")
        if 2**alpha < p - 1:
            raise InvalidParameters(f"need 2^alpha >= p - 1, but 2^{alpha} < {p - 1}")
        return cls(p=p, k=witness.k, alpha=alpha, beta=beta, z=find_twist(p, beta))

    @property
    def M(self) -> int:
        return 2**self.alpha

    @property
    def N(self) -> int:
        return self.p**self.beta


def _valuation_or(value: int, p: int, at_zero: int) -> int:
    if value == 0:
        return at_zero
    k = 0
    while value % p == 0:
        value //= p
        k += 1
    return k


def predicted_order(x: int, y: int, params: Theorem32Params) -> int:
    """Order of ``a^x b^y`` in the Fermat-prime twisted group, in closed form.

    ``r`` and ``s`` are the 2-adic and p-adic valuations of ``x`` and ``y``,
    taken to be ``alpha`` and ``beta`` when the residue is zero.
    """
    a, b, p = params.alpha, params.beta, params.p
    r = _valuation_or(x % params.M, 2, a)
    s = _valuation_or(y % params.N, p, b)
    if r < 2**params.k:
        return 2 ** (a - r)
    return 2 ** (a - r) * p ** (b - s)


def _merge(rows) -> OrderSpectrum:
    tally: Counter[int] = Counter()
    for order, count in rows:
        tally[order] += count
    return OrderSpectrum.from_counts(tally)


def predicted_table(params: Theorem32Params) -> OrderSpectrum:
    a, b, p = params.alpha, params.beta, params.p
    cut = 2**params.k
    rows = [(1, 1)]
    rows += [(2 ** (a - r), 2 ** (a - r - 1) * p**b) for r in range(0, cut)]
    rows += [(2 ** (a - r), 2 ** (a - r - 1)) for r in range(cut, a)]
    rows += [(p ** (b - s), p ** (b - s - 1) * (p - 1)) for s in range(b)]
    rows += [
        (2 ** (a - r) * p ** (b - s), 2 ** (a - r - 1) * p ** (b - s - 1) * (p - 1))
        for r in range(cut, a)
        for s in range(b)
    ]
    return _merge(rows)


def remark_p5_table(alpha: int, beta: int) -> OrderSpectrum:
    """Predicted spectrum of ``C_{2^alpha}`` twisted against ``C_{5^beta}`` by ``z = -1``."""
    a, b = alpha, beta
    rows = [(1, 1), (2**a, 2 ** (a - 1) * 5**b)]
    rows += [(2 ** (a - r), 2 ** (a - r - 1)) for r in range(1, a)]
    rows += [(5 ** (b - s), 4 * 5 ** (b - s - 1)) for s in range(b)]
    rows += [
        (2 ** (a - r) * 5 ** (b - s), 2 ** (a - r + 1) * 5 ** (b - s - 1))
        for r in range(1, a)
        for s in range(b)
    ]
    return _merge(rows)


def build_theorem32(p: int, alpha: int, beta: int) -> tuple[TwistedProduct, OrderSpectrum]:
    params = Theorem32Params.build(p, alpha, beta)
    group = make_twisted(params.M, params.N, params.z)
    group.label = f"thm32:{p},{alpha},{beta}"
    return group, predicted_table(params)


def build_remark_p5(alpha: int, beta: int) -> tuple[TwistedProduct, OrderSpectrum]:
    if alpha < 2 or beta < 1:
        raise InvalidParameters(f"need alpha >= 2 and beta >= 1, got {alpha}, {beta}")
    group = make_twisted(2**alpha, 5**beta, 5**beta - 1)
    group.label = f"remark5:{alpha},{beta}"
    return group, remark_p5_table(alpha, beta)


def build_c6_c7() -> tuple[TwistedProduct, OrderSpectrum]:
    group = make_twisted(6, 7, 2)
    group.label = "c6c7"
    return group, C6_C7_TABLE


def build_c2a_m21(a: int) -> DirectProduct:
    """``C_{2^a}`` times the nonabelian group of order 21."""
    if a < 1:
        raise InvalidParameters(f"need a >= 1, got {a}")
    group = DirectProduct(Cyclic(2**a), make_metacyclic(3, 7, 2))
    group.label = f"c2am21:{a}"
    return group
