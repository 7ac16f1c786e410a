"""Finite Abelian groups ``Z_{m_1} x ... x Z_{m_t}`` and their elements.

Elements are tuples of residues.  Every group also has a mixed-radix
indexing of its elements (last coordinate varying fastest) which the graph
code uses to keep BFS state in flat arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import Unsupported
from .lattice import IntMatrix, diagonal, hermite_basis, smith_normal_form, vecmat

Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(m) for m in self.factors)
        if any(m < 2 for m in factors):
            raise ValueError(f"cyclic factors must be >= 2, got {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls(() if n == 1 else (n,))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "Z_1"
        return " x ".join(f"Z_{m}" for m in self.factors)

    def reduce(self, a: Sequence[int]) -> Element:
        if len(a) != len(self.factors):
            raise ValueError(
                f"element {tuple(a)} has {len(a)} coordinates, group {self} needs {len(self.factors)}"
            )
        return tuple(int(x) % m for x, m in zip(a, self.factors))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Element:
        if len(b) != len(a):
            raise ValueError("coordinate count mismatch")
        return self.reduce([x + y for x, y in zip(a, b)])

    def negate(self, a: Sequence[int]) -> Element:
        return self.reduce([-x for x in a])

    def scale(self, t: int, a: Sequence[int]) -> Element:
        return self.reduce([t * x for x in a])

    def element_order(self, a: Sequence[int]) -> int:
        out = 1
        for x, m in zip(self.reduce(a), self.factors):
            k = m // gcd(x, m)
            out = out * k // gcd(out, k)
        return out

    def is_involution(self, a: Sequence[int]) -> bool:
        a = self.reduce(a)
        return a != self.zero and self.scale(2, a) == self.zero

    def involutions(self) -> list[Element]:
        # nonzero elements with every coordinate in {0, m/2}
        choices = [(0, m // 2) if m % 2 == 0 else (0,) for m in self.factors]
        return [e for e in product(*choices) if any(e)]

    def elements(self) -> Iterator[Element]:
        return product(*(range(m) for m in self.factors))

    def index(self, a: Sequence[int]) -> int:
        idx = 0
        for x, m in zip(self.reduce(a), self.factors):
            idx = idx * m + x
        return idx

    def element(self, idx: int) -> Element:
        out = []
        for m in reversed(self.factors):
            idx, x = divmod(idx, m)
            out.append(x)
        return tuple(reversed(out))

    @cached_property
    def _coords(self) -> np.ndarray:
        t = len(self.factors)
        if t == 0:
            return np.zeros((0, 1), dtype=np.int64)
        return np.indices(self.factors, dtype=np.int64).reshape(t, -1)

    def translation(self, a: Sequence[int]) -> np.ndarray:
        """Array ``T`` with ``T[index(v)] == index(v + a)`` for every element ``v``."""
        a = self.reduce(a)
        if not self.factors:
            return np.zeros(1, dtype=np.int64)
        mods = np.asarray(self.factors, dtype=np.int64)[:, None]
        shifted = (self._coords + np.asarray(a, dtype=np.int64)[:, None]) % mods
        return np.ravel_multi_index(tuple(shifted), self.factors)

    def subgroup_order(self, gens: Iterable[Sequence[int]]) -> int:
        """Size of the subgroup generated by ``gens`` (closure by search)."""
        tables = [self.translation(g).tolist() for g in gens]
        seen = bytearray(self.order)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for tab in tables:
                w = tab[v]
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count

    def generates(self, gens: Iterable[Sequence[int]]) -> bool:
        return self.subgroup_order(gens) == self.order

    def invariant_factors(self) -> tuple[int, ...]:
        return invariant_form(self)[0].factors

    def is_isomorphic(self, other: "AbelianGroup") -> bool:
        return self.invariant_factors() == other.invariant_factors()

    def to_dict(self) -> dict:
        return {"factors": list(self.factors)}

    @classmethod
    def from_dict(cls, data: dict) -> "AbelianGroup":
        return cls(tuple(data["factors"]))


@dataclass(frozen=True)
class Homomorphism:
    """``a -> (a @ matrix) mod codomain.factors``, a map between cyclic products."""

    domain: AbelianGroup
    codomain: AbelianGroup
    matrix: IntMatrix

    def __call__(self, a: Sequence[int]) -> Element:
        a = self.domain.reduce(a)
        if not self.codomain.factors:
            return ()
        return self.codomain.reduce(vecmat(a, self.matrix))


def _quotient_of_lattice(domain: AbelianGroup, rows: Sequence[Sequence[int]]) -> tuple[AbelianGroup, Homomorphism]:
    t = len(domain.factors)
    if t == 0:
        return AbelianGroup(()), Homomorphism(domain, AbelianGroup(()), ())
    basis = hermite_basis(rows).H
    dec = smith_normal_form(basis)
    target = AbelianGroup(dec.Sprime)
    return target, Homomorphism(domain, target, dec.Vprime)


def invariant_form(group: AbelianGroup) -> tuple[AbelianGroup, Homomorphism]:
    """The isomorphic invariant-factor group and an explicit isomorphism onto it."""
    return _quotient_of_lattice(group, diagonal(group.factors))


def direct_product(g1: AbelianGroup, g2: AbelianGroup) -> AbelianGroup:
    return AbelianGroup(g1.factors + g2.factors)


def quotient_by(group: AbelianGroup, a: Sequence[int]) -> tuple[AbelianGroup, Homomorphism]:
    """``group / <a>`` for an involution ``a``, in invariant-factor form, with its projection."""
    if not group.is_involution(a):
        raise Unsupported(f"{tuple(a)} is not an involution of {group}; only Z_2 quotients are supported")
    rows = list(diagonal(group.factors)) + [tuple(group.reduce(a))]
    return _quotient_of_lattice(group, rows)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def groups_of_order(n: int) -> list[AbelianGroup]:
    """One invariant-factor representative per isomorphism class of order ``n``.

    Ordered by number of cyclic factors, then lexicographically by factors.
    """
    if n < 1:
        raise ValueError("order must be positive")
    per_prime = [[(p, lam) for lam in _partitions(e)] for p, e in sorted(_factorize(n).items())]
    groups = []
    for combo in product(*per_prime):
        length = max((len(lam) for _, lam in combo), default=0)
        factors = [1] * length
        for p, lam in combo:
            for i, e in enumerate(lam):
                # largest exponents go into the last (largest) invariant factor
                factors[length - 1 - i] *= p**e
        groups.append(AbelianGroup(tuple(factors)))
    groups.sort(key=lambda g: (len(g.factors), g.factors))
    return groups
