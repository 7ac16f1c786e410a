"""Cayley mixed graphs of finite Abelian groups and BFS distance profiles.

Vertices are the group elements in mixed-radix index order.  Adjacency is
never materialized: each step ``s`` of the graph is a translation table
``index(v) -> index(v + s)`` built once per graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidGenerators, NotStronglyConnected, Unsupported
from .group import AbelianGroup, Element
from .lattice import as_matrix, canonicalize, identity, smith_normal_form


@dataclass(frozen=True)
class GeneratorSet:
    """A generating set split into involutions, inverse pairs and arcs.

    ``pairs`` holds one representative per ``{a, -a}``; the representative
    is the one with the smaller element index.
    """

    group: AbelianGroup
    involutions: tuple[Element, ...]
    pairs: tuple[Element, ...]
    directed: tuple[Element, ...]
    generates: bool

    @property
    def r1(self) -> int:
        return len(self.involutions)

    @property
    def r2(self) -> int:
        return len(self.pairs)

    @property
    def z(self) -> int:
        return len(self.directed)

    @property
    def r(self) -> int:
        return self.r1 + 2 * self.r2

    @property
    def degree(self) -> int:
        return self.r + self.z

    @property
    def signature(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.z)

    @property
    def steps(self) -> tuple[Element, ...]:
        """Every out-neighbour offset: involutions, both members of each pair, arcs."""
        out = list(self.involutions)
        for a in self.pairs:
            out += [a, self.group.negate(a)]
        return tuple(out + list(self.directed))

    def without(self, element: Sequence[int]) -> tuple[Element, ...]:
        e = self.group.reduce(element)
        return tuple(s for s in self.steps if s != e)


def classify_generators(group: AbelianGroup, raw: Iterable[Sequence[int]]) -> GeneratorSet:
    """Split ``raw`` into involutions, inverse pairs and directed generators.

    An element whose inverse is also in ``raw`` forms a pair; a set that does
    not generate the group is still classified, with ``generates=False``.
    """
    elems = [group.reduce(a) for a in raw]
    if not elems:
        raise InvalidGenerators("empty generator set")
    if group.zero in elems:
        raise InvalidGenerators("generator set contains the identity")
    if len(set(elems)) != len(elems):
        raise InvalidGenerators(f"repeated generators in {elems}")
    present = set(elems)
    involutions, pairs, directed = [], [], []
    for a in elems:
        neg = group.negate(a)
        if neg == a:
            involutions.append(a)
        elif neg in present:
            rep = min(a, neg, key=group.index)
            if rep not in pairs:
                pairs.append(rep)
        else:
            directed.append(a)
    return GeneratorSet(
        group=group,
        involutions=tuple(involutions),
        pairs=tuple(pairs),
        directed=tuple(directed),
        generates=group.generates(elems),
    )


@dataclass(frozen=True)
class DistanceProfile:
    dist: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    @property
    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    @property
    def ball_sizes(self) -> list[int]:
        """``|B(0, j)|`` for ``j = 0 .. diameter``."""
        out, acc = [], 0
        for size in self.layer_sizes:
            acc += size
            out.append(acc)
        return out

    @property
    def diameter(self) -> int:
        return len(self.layers) - 1


@dataclass(frozen=True)
class SplitLayers:
    """Per-distance split of ``G_l(0)``.

    ``avoiding[l]`` holds vertices at distance ``l`` with some shortest path
    free of the involution, ``using[l]`` those whose every shortest path
    crosses it.
    """

    avoiding: tuple[tuple[int, ...], ...]
    using: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> list[tuple[int, int]]:
        return [(len(a), len(u)) for a, u in zip(self.avoiding, self.using)]


def bfs_layers(tables: Sequence[Sequence[int]], order: int, source: int = 0,
               max_depth: int | None = None) -> tuple[list[int], list[list[int]]]:
    """Plain BFS over translation tables; stops after ``max_depth`` layers if given."""
    dist = [-1] * order
    dist[source] = 0
    frontier = [source]
    layers = [frontier]
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        nxt = []
        for v in frontier:
            for tab in tables:
                w = tab[v]
                if dist[w] < 0:
                    dist[w] = depth
                    nxt.append(w)
        if not nxt:
            break
        layers.append(nxt)
        frontier = nxt
    return dist, layers


def reaches_all_within(tables: Sequence[Sequence[int]], order: int, k: int) -> bool:
    """True iff every vertex is within distance ``k`` of 0; abandons as soon as layer ``k`` closes."""
    seen = bytearray(order)
    seen[0] = 1
    count = 1
    frontier = [0]
    for _ in range(k):
        nxt = []
        for v in frontier:
            for tab in tables:
                w = tab[v]
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        count += len(nxt)
        if count == order:
            return True
        if not nxt:
            return False
        frontier = nxt
    return count == order


@dataclass(frozen=True)
class CayleyMixedGraph:
    group: AbelianGroup
    gens: GeneratorSet = field(compare=True)

    @classmethod
    def from_generators(cls, group: AbelianGroup, raw: Iterable[Sequence[int]]) -> "CayleyMixedGraph":
        return cls(group, classify_generators(group, raw))

    @property
    def order(self) -> int:
        return self.group.order

    @cached_property
    def _tables(self) -> list[list[int]]:
        return [self.group.translation(s).tolist() for s in self.gens.steps]

    def neighbours(self, v: Sequence[int]) -> list[Element]:
        return [self.group.add(v, s) for s in self.gens.steps]

    def distances_from_origin(self) -> DistanceProfile:
        dist, layers = bfs_layers(self._tables, self.order)
        if sum(len(layer) for layer in layers) != self.order:
            missing = dist.index(-1)
            raise NotStronglyConnected(
                f"{self.group.element(missing)} is unreachable from 0 in Cay({self.group}, {self.gens.steps})"
            )
        return DistanceProfile(tuple(dist), tuple(tuple(layer) for layer in layers))

    def diameter(self) -> int:
        # vertex transitivity: the eccentricity of 0 is the diameter
        return self.distances_from_origin().diameter

    def within_diameter(self, k: int) -> bool:
        return reaches_all_within(self._tables, self.order, k)

    def split_layers(self, profile: DistanceProfile | None = None) -> SplitLayers:
        if self.gens.r1 != 1:
            raise Unsupported(f"layer split needs exactly one involution, graph has {self.gens.r1}")
        if profile is None:
            profile = self.distances_from_origin()
        iota = self.gens.involutions[0]
        tables = [self.group.translation(s).tolist() for s in self.gens.without(iota)]
        dist_free, _ = bfs_layers(tables, self.order)
        avoiding, using = [], []
        for l, layer in enumerate(profile.layers):
            avoiding.append(tuple(v for v in layer if dist_free[v] == l))
            using.append(tuple(v for v in layer if dist_free[v] != l))
        return SplitLayers(tuple(avoiding), tuple(using))

    def eccentricities(self) -> list[int]:
        """Eccentricity of every vertex by one BFS each (test aid, O(N^2))."""
        out = []
        for v in range(self.order):
            dist, layers = bfs_layers(self._tables, self.order, source=v)
            if -1 in dist:
                raise NotStronglyConnected(f"not every vertex is reachable from {self.group.element(v)}")
            out.append(len(layers) - 1)
        return out

    def check_eccentricity_uniform(self) -> bool:
        return len(set(self.eccentricities())) == 1

    def to_dict(self) -> dict:
        gens = list(self.gens.involutions)
        for a in self.gens.pairs:
            gens += [a, self.group.negate(a)]
        gens += list(self.gens.directed)
        return {"group": self.group.to_dict(), "generators": [list(g) for g in gens]}

    @classmethod
    def from_dict(cls, data: dict) -> "CayleyMixedGraph":
        group = AbelianGroup.from_dict(data["group"])
        return cls.from_generators(group, [tuple(g) for g in data["generators"]])

    def report(self) -> dict:
        profile = self.distances_from_origin()
        r1, r2, z = self.gens.signature
        return {
            "order": self.order,
            "r1": r1,
            "r2": r2,
            "z": z,
            "diameter": profile.diameter,
            "layer_sizes": profile.layer_sizes,
        }


def dedupe_nonzero(group: AbelianGroup, elems: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    out = []
    for a in elems:
        a = group.reduce(a)
        if a != group.zero and a not in out:
            out.append(a)
    return out


def lattice_graph(m: Sequence[Sequence[int]], gens: Sequence[Sequence[int]] | None = None) -> CayleyMixedGraph:
    """``Cay(Z^n / Z^n M, gens)`` rewritten over the invariant-factor group.

    ``gens`` default to the unit vectors; images that vanish or coincide are dropped.
    """
    mat = as_matrix(m)
    dec = smith_normal_form(mat)
    group = AbelianGroup(dec.Sprime)
    if gens is None:
        gens = identity(len(mat))
    images = dedupe_nonzero(group, [canonicalize(dec, g) for g in gens])
    return CayleyMixedGraph.from_generators(group, images)
