"""L-shaped tiles of two-arc circulant digraphs.

A tile with dimensions ``(l, h, x, y)`` is the ``l x h`` rectangle of cells
``(i, j)`` with the ``x x y`` corner ``i >= l - x, j >= h - y`` removed.
Its translates by the rows of ``[[l, -y], [-x, h]]`` tile the plane, and
the digraph is ``Cay(Z^2 / Z^2 M, {e1, e2})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotAnLTile, Unsupported
from .lattice import IntMatrix, as_matrix, canonicalize, determinant, smith_normal_form
from .mixedgraph import CayleyMixedGraph, lattice_graph


@dataclass(frozen=True)
class LTile:
    ell: int
    h: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if min(self.ell, self.h) < 1 or min(self.x, self.y) < 0:
            raise NotAnLTile(f"bad dimensions {self}")
        if self.x >= self.ell or self.y >= self.h:
            raise NotAnLTile(f"notch {self.x}x{self.y} does not fit in {self.ell}x{self.h}")

    @property
    def area(self) -> int:
        return self.ell * self.h - self.x * self.y

    def cells(self) -> Iterator[tuple[int, int]]:
        for j in range(self.h):
            for i in range(self.ell):
                if not (i >= self.ell - self.x and j >= self.h - self.y):
                    yield (i, j)

    @property
    def translations(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.ell, -self.y), (-self.x, self.h)


def tile_to_matrix(t: LTile) -> IntMatrix:
    return ((t.ell, -t.y), (-t.x, t.h))


def tile_from_matrix(m: Sequence[Sequence[int]]) -> LTile:
    mat = as_matrix(m)
    if len(mat) != 2 or len(mat[0]) != 2:
        raise NotAnLTile("expected a 2x2 matrix")
    (a, b), (c, d) = mat
    if a <= 0 or d <= 0 or b > 0 or c > 0:
        raise NotAnLTile(f"{mat} lacks the sign pattern [[+, -], [-, +]]")
    return LTile(ell=a, h=d, x=-c, y=-b)


def tile_tessellates(t: LTile) -> bool:
    """True iff the cells form a complete residue system modulo the translation lattice."""
    mat = tile_to_matrix(t)
    if abs(determinant(mat)) != t.area:
        return False
    dec = smith_normal_form(mat)
    return len({canonicalize(dec, cell) for cell in t.cells()}) == t.area


def distance_diagram(m: Sequence[Sequence[int]]) -> dict[tuple[int, ...], tuple[int, int]]:
    """First quadrant point reaching each residue class, swept by anti-diagonals ``a + b = s``.

    The sweep order makes the recorded point a shortest path ``a*e1 + b*e2``;
    within an anti-diagonal the point with the smaller ``a`` wins.
    """
    mat = as_matrix(m)
    dec = smith_normal_form(mat)
    n = abs(determinant(mat))
    first: dict[tuple[int, ...], tuple[int, int]] = {}
    s = 0
    while len(first) < n:
        for a in range(s + 1):
            cls = canonicalize(dec, (a, s - a))
            if cls not in first:
                first[cls] = (a, s - a)
        s += 1
    return first


def tile_diameter(t: LTile) -> int:
    if not tile_tessellates(t):
        raise Unsupported(f"{t} does not tessellate the plane")
    return max(a + b for a, b in distance_diagram(tile_to_matrix(t)).values())


def tile_diameter_formula(t: LTile) -> int:
    """``max(l + h - x - 2, l + h - y - 2)``: the largest ``i + j`` over the cells.

    Equals :func:`tile_diameter` exactly when the tile is a minimum distance diagram.
    """
    return max(t.ell + t.h - t.x - 2, t.ell + t.h - t.y - 2)


def is_distance_diagram(t: LTile) -> bool:
    """True iff every cell ``(i, j)`` is at distance ``i + j`` in the digraph."""
    dist = {cls: a + b for cls, (a, b) in distance_diagram(tile_to_matrix(t)).items()}
    dec = smith_normal_form(tile_to_matrix(t))
    return all(dist[canonicalize(dec, (i, j))] == i + j for i, j in t.cells())


def tile_graph(t: LTile) -> CayleyMixedGraph:
    return lattice_graph(tile_to_matrix(t))


@dataclass(frozen=True)
class DoubleTile:
    """Symmetric tile ``L = L1 + L2``: an ``l x l`` square minus an ``(l-2c) x (l-2c)`` corner,
    with the involution ``(c, c)``."""

    ell: int
    c: int

    def __post_init__(self) -> None:
        if not 0 < self.c <= self.ell / 2:
            raise Unsupported(f"need 0 < c <= l/2, got l={self.ell}, c={self.c}")

    @property
    def tile(self) -> LTile:
        notch = self.ell - 2 * self.c
        return LTile(self.ell, self.ell, notch, notch)

    @property
    def involution(self) -> tuple[int, int]:
        return (self.c, self.c)

    @property
    def area(self) -> int:
        return self.ell**2 - (self.ell - 2 * self.c) ** 2

    @property
    def predicted_diameter(self) -> int:
        return self.ell + self.c - 2

    def graph(self) -> CayleyMixedGraph:
        return lattice_graph(tile_to_matrix(self.tile), [(1, 0), (0, 1), self.involution])


def double_tile(ell: int, c: int) -> DoubleTile:
    return DoubleTile(ell, c)


@dataclass(frozen=True)
class CaseBounds:
    k: int
    N_i: int
    N_ii: int
    two_gen_bound: int

    @property
    def case_ii_dominates(self) -> bool:
        return self.N_ii > self.N_i


def case_bounds(k: int) -> CaseBounds:
    """Orders reachable in the two shapes of distance diagram at diameter ``k``.

    ``two_gen_bound`` is the two-arc digraph bound ``floor((k'+2)^2 / 3)`` at ``k' = k - 1``.
    """
    if k < 1:
        raise Unsupported("k >= 1 required")
    return CaseBounds(
        k=k,
        N_i=2 * (k + 1) ** 2 // 3,
        N_ii=(k + 2) ** 2 // 2,
        two_gen_bound=(k + 1) ** 2 // 3,
    )
