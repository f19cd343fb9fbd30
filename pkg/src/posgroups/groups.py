"""Concrete finite groups with element arithmetic.

Elements are plain Python values so they hash and sort naturally:

* ``Cyclic(n)``: residues ``0 <= x < n`` (exponent of a fixed generator).
* ``TwistedProduct(M, N, z)``: pairs ``(x, y)`` standing for ``a^x b^y`` in
  ``C_M`` twisted against ``C_N`` with ``a`` acting on ``b`` as ``b -> b^z``.
* ``DirectProduct(G, H)``: pairs ``(g, h)``.
* permutation groups: image tuples on ``0..n-1``. Products compose left to
  right, ``(g*h)(i) = h(g(i))``.
"""
from __future__ import annotations

import math
from collections import deque
from itertools import permutations, product
from typing import Hashable, Iterator, Optional, Sequence

from .numtheory import Factorization, factorize

DEFAULT_BUDGET = 10**6

Element = Hashable


class BudgetExceeded(RuntimeError):
    """Raised when a group is too large to enumerate under the current cap."""

    def __init__(self, cardinality: int, budget: int):
        super().__init__(
            f"group of order {cardinality} exceeds the enumeration budget of {budget} elements"
        )
        self.cardinality = cardinality
        self.budget = budget


class InvalidParameters(ValueError):
    """Construction parameters violate a required hypothesis."""


class FiniteGroup:
    """Base class. Subclasses implement ``_mul``, ``inverse``, ``__contains__``
    and ``_iter_elements``; everything else is generic."""

    identity: Element
    cardinality: int
    label: str = "group"

    def _mul(self, g: Element, h: Element) -> Element:
        raise NotImplementedError

    def inverse(self, g: Element) -> Element:
        raise NotImplementedError

    def __contains__(self, g: object) -> bool:
        raise NotImplementedError

    def _iter_elements(self) -> Iterator[Element]:
        raise NotImplementedError

    def generators(self) -> list[Element]:
        raise NotImplementedError

    def __len__(self) -> int:
        return self.cardinality

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label} of order {self.cardinality}>"

    def multiply(self, g: Element, h: Element) -> Element:
        if g not in self or h not in self:
            raise ValueError(f"elements {g!r}, {h!r} do not both belong to {self.label}")
        return self._mul(g, h)

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inverse(g), -k
        result = self.identity
        while k:
            if k & 1:
                result = self._mul(result, g)
            k >>= 1
            if k:
                g = self._mul(g, g)
        return result

    def is_abelian(self) -> bool:
        gens = self.generators()
        return all(
            self._mul(g, h) == self._mul(h, g) for i, g in enumerate(gens) for h in gens[i + 1 :]
        )

    def noncommuting_pair(self) -> tuple[Element, Element] | None:
        gens = self.generators()
        for i, g in enumerate(gens):
            for h in gens[i + 1 :]:
                if self._mul(g, h) != self._mul(h, g):
                    return g, h
        return None


class Cyclic(FiniteGroup):
    def __init__(self, n: int):
        if n < 1:
            raise InvalidParameters(f"cyclic group order must be positive, got {n}")
        self.n = n
        self.cardinality = n
        self.identity = 0
        self.label = f"cyclic:{n}"

    def _mul(self, g, h):
        return (g + h) % self.n

    def inverse(self, g):
        return -g % self.n

    def power(self, g, k):
        return g * k % self.n

    def __contains__(self, g):
        return isinstance(g, int) and 0 <= g < self.n

    def _iter_elements(self):
        return iter(range(self.n))

    def generators(self):
        return [1 % self.n]


class TwistedProduct(FiniteGroup):
    """``C_M`` acting on ``C_N`` through ``b -> b^z``.

    Multiplication is ``(x1, y1)(x2, y2) = (x1 + x2, y1 * z**x2 + y2)``, the
    convention where the right-hand factor's automorphism acts on the left
    factor's normal component.
    """

    def __init__(self, M: int, N: int, z: int):
        if M < 1 or N < 1:
            raise InvalidParameters(f"M and N must be positive, got M={M}, N={N}")
        z %= N
        if math.gcd(z, N) != 1:
            raise InvalidParameters(f"z={z} is not a unit modulo {N}")
        if pow(z, M, N) != 1 % N:
            raise InvalidParameters(
                f"z={z} has z^{M} != 1 mod {N}; b -> b^z does not define a homomorphism from C_{M}"
            )
        self.M, self.N, self.z = M, N, z
        self.cardinality = M * N
        self.identity = (0, 0)
        self.label = f"twisted:{M},{N},{z}"
        self._zpow = [pow(z, i, N) for i in range(M)]

    def _mul(self, g, h):
        x1, y1 = g
        x2, y2 = h
        return (x1 + x2) % self.M, (y1 * self._zpow[x2] + y2) % self.N

    def inverse(self, g):
        x, y = g
        xi = -x % self.M
        # (x, y)(xi, yi) = (0, y z^xi + yi) = identity
        return xi, -y * self._zpow[xi] % self.N

    def __contains__(self, g):
        return (
            isinstance(g, tuple)
            and len(g) == 2
            and 0 <= g[0] < self.M
            and 0 <= g[1] < self.N
        )

    def _iter_elements(self):
        return product(range(self.M), range(self.N))

    def generators(self):
        return [(1 % self.M, 0), (0, 1 % self.N)]


class DirectProduct(FiniteGroup):
    def __init__(self, first: FiniteGroup, second: FiniteGroup):
        self.first, self.second = first, second
        self.cardinality = first.cardinality * second.cardinality
        self.identity = (first.identity, second.identity)
        self.label = f"({first.label})x({second.label})"

    def _mul(self, g, h):
        return self.first._mul(g[0], h[0]), self.second._mul(g[1], h[1])

    def inverse(self, g):
        return self.first.inverse(g[0]), self.second.inverse(g[1])

    def __contains__(self, g):
        return isinstance(g, tuple) and len(g) == 2 and g[0] in self.first and g[1] in self.second

    def _iter_elements(self):
        return product(self.first._iter_elements(), list(self.second._iter_elements()))

    def generators(self):
        return [(g, self.second.identity) for g in self.first.generators()] + [
            (self.first.identity, h) for h in self.second.generators()
        ]


def compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``g`` first, then ``h``."""
    return tuple(h[i] for i in g)


def permutation_parity(g: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd ones."""
    seen = [False] * len(g)
    parity = 0
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = g[i]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _is_permutation(g: object, degree: int) -> bool:
    return (
        isinstance(g, tuple)
        and len(g) == degree
        and all(isinstance(i, int) for i in g)
        and sorted(g) == list(range(degree))
    )


class PermutationGroup(FiniteGroup):
    """Shared arithmetic for groups acting on ``0..degree-1``."""

    degree: int

    def _mul(self, g, h):
        return tuple(h[i] for i in g)

    def power(self, g, k):
        # walk each cycle k steps instead of repeated squaring
        n = len(g)
        out = [0] * n
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            i = g[start]
            while i != start:
                cycle.append(i)
                seen[i] = True
                i = g[i]
            length = len(cycle)
            shift = k % length
            for pos, i in enumerate(cycle):
                out[i] = cycle[(pos + shift) % length]
        return tuple(out)

    def inverse(self, g):
        inv = [0] * len(g)
        for i, j in enumerate(g):
            inv[j] = i
        return tuple(inv)


class SymmetricGroup(PermutationGroup):
    def __init__(self, n: int):
        if n < 1:
            raise InvalidParameters(f"degree must be positive, got {n}")
        self.degree = n
        self.cardinality = math.factorial(n)
        self.identity = tuple(range(n))
        self.label = f"sn:{n}"

    def __contains__(self, g):
        return _is_permutation(g, self.degree)

    def _iter_elements(self):
        return permutations(range(self.degree))

    def generators(self):
        n = self.degree
        if n < 2:
            return [self.identity]
        swap = (1, 0) + tuple(range(2, n))
        cycle = tuple(range(1, n)) + (0,)
        return [swap, cycle]


class AlternatingGroup(PermutationGroup):
    def __init__(self, n: int):
        if n < 1:
            raise InvalidParameters(f"degree must be positive, got {n}")
        self.degree = n
        self.cardinality = max(1, math.factorial(n) // 2)
        self.identity = tuple(range(n))
        self.label = f"an:{n}"

    def __contains__(self, g):
        return _is_permutation(g, self.degree) and permutation_parity(g) == 0

    def _iter_elements(self):
        return (g for g in permutations(range(self.degree)) if permutation_parity(g) == 0)

    def generators(self):
        n = self.degree
        if n < 3:
            return [self.identity]
        # 3-cycles (0 1 i) generate A_n
        gens = []
        for i in range(2, n):
            g = list(range(n))
            g[0], g[1], g[i] = 1, i, 0
            gens.append(tuple(g))
        return gens


class GeneratedPermutationGroup(PermutationGroup):
    """Closure of a set of permutations under composition (breadth first)."""

    def __init__(self, degree: int, gens: Sequence[Sequence[int]], budget: int = DEFAULT_BUDGET):
        self.degree = degree
        self.identity = tuple(range(degree))
        gens = [tuple(g) for g in gens]
        for g in gens:
            if not _is_permutation(g, degree):
                raise InvalidParameters(f"{g!r} is not a permutation of {degree} points")
        self.gens = gens or [self.identity]
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            g = queue.popleft()
            for s in self.gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > budget:
                        raise BudgetExceeded(len(seen), budget)
                    queue.append(h)
        self._elements = sorted(seen)
        self._members = seen
        self.cardinality = len(seen)
        self.label = f"perm:{degree}:" + ";".join(",".join(map(str, g)) for g in self.gens)

    def __contains__(self, g):
        return g in self._members

    def _iter_elements(self):
        return iter(self._elements)

    def generators(self):
        return list(self.gens)


def close_generators(degree: int, gens: Sequence[Sequence[int]], budget: int = DEFAULT_BUDGET):
    return GeneratedPermutationGroup(degree, gens, budget)


def make_twisted(M: int, N: int, z: int) -> TwistedProduct:
    return TwistedProduct(M, N, z)


def make_metacyclic(m: int, n: int, r: int) -> TwistedProduct:
    """Group ``<x, y | x^m = y^n = 1, x y x^-1 = y^r>`` as a twisted product.

    ``x`` is ``(1, 0)`` and ``y`` is ``(0, 1)``. Requires ``gcd(r, n) = 1`` and
    ``r^m == 1 (mod n)``. Under the twisted product's multiplication
    ``x y x^-1 = y^(z^-1)``, so the twist used is ``r^-1 mod n``.
    """
    if n < 1 or math.gcd(r, n) != 1:
        raise InvalidParameters(f"r={r} is not a unit modulo {n}")
    group = TwistedProduct(m, n, pow(r, -1, n) if n > 1 else 0)
    group.label = f"metacyclic:{m},{n},{r}"
    return group


def enumerate_elements(group: FiniteGroup, budget: int = DEFAULT_BUDGET) -> Iterator[Element]:
    """Yield each element once, in canonical order. Refuses oversized groups."""
    if group.cardinality > budget:
        raise BudgetExceeded(group.cardinality, budget)
    return group._iter_elements()


def element_order(group: FiniteGroup, g: Element, fac: Optional[Factorization] = None) -> int:
    """Order of ``g``, found by shrinking ``|G|`` one prime at a time.

    ``fac`` may carry a precomputed factorization of ``|G|``.
    """
    identity = group.identity
    size = group.cardinality
    order = 1
    for p, e in fac or factorize(size):
        h = group.power(g, size // p**e)
        while h != identity:
            h = group.power(h, p)
            order *= p
    return order
