"""Exact integer-matrix algebra for lattices ``Z^n M`` spanned by matrix rows.

Everything here works on plain Python ``int`` so entries never overflow and
no floating point is involved.  Matrices are tuples of row tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .errors import RankDeficient, SingularLattice

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if mat and len({len(row) for row in mat}) != 1:
        raise ValueError("ragged matrix")
    return mat


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def diagonal(entries: Sequence[int]) -> IntMatrix:
    n = len(entries)
    return tuple(
        tuple(int(entries[i]) if i == j else 0 for j in range(n)) for i in range(n)
    )


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def vecmat(u: Sequence[int], m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row vector times matrix."""
    if len(u) != len(m):
        raise ValueError(f"dimension mismatch: vector of length {len(u)}, matrix with {len(m)} rows")
    if not m:
        return ()
    return tuple(sum(ui * row[j] for ui, row in zip(u, m)) for j in range(len(m[0])))


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_to_json(m: Sequence[Sequence[int]]) -> str:
    """Serialize with decimal strings so arbitrary-size entries survive any JSON reader."""
    return json.dumps([[str(int(x)) for x in row] for row in m])


def matrix_from_json(text: str) -> IntMatrix:
    return as_matrix([[int(x) for x in row] for row in json.loads(text)])


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ matrix @ V == diag(invariant_factors)`` with ``U``, ``V`` unimodular."""

    matrix: IntMatrix
    invariant_factors: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    @property
    def n(self) -> int:
        return len(self.invariant_factors)

    @property
    def S(self) -> IntMatrix:
        return diagonal(self.invariant_factors)

    @property
    def rank_r(self) -> int:
        # r = n when no factor equals 1; otherwise the number of factors > 1
        return sum(1 for s in self.invariant_factors if s != 1)

    @property
    def Sprime(self) -> tuple[int, ...]:
        return self.invariant_factors[self.n - self.rank_r:]

    @property
    def Vprime(self) -> IntMatrix:
        """The last ``rank_r`` columns of ``V``."""
        cut = self.n - self.rank_r
        return tuple(row[cut:] for row in self.V)

    @property
    def det_divisors(self) -> tuple[int, ...]:
        out = []
        acc = 1
        for s in self.invariant_factors:
            acc *= s
            out.append(acc)
        return tuple(out)


def _swap_rows(a: list[list[int]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: list[list[int]], i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _row_axpy(a: list[list[int]], dst: int, src: int, q: int) -> None:
    """row[dst] -= q * row[src]"""
    rs, rd = a[src], a[dst]
    for c in range(len(rd)):
        rd[c] -= q * rs[c]


def _col_axpy(a: list[list[int]], dst: int, src: int, q: int) -> None:
    """col[dst] -= q * col[src]"""
    for row in a:
        row[dst] -= q * row[src]


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form of a non-singular square integer matrix.

    Pivoting always takes the smallest nonzero absolute value in the trailing
    block (ties broken row-major), which makes ``U`` and ``V`` deterministic.
    """
    mat = as_matrix(m)
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("Smith normal form requires a square matrix")
    if determinant(mat) == 0:
        raise SingularLattice(f"matrix {mat} is singular")

    a = [list(row) for row in mat]
    u = [list(row) for row in identity(n)]
    v = [list(row) for row in identity(n)]

    for t in range(n):
        while True:
            _, pi, pj = min(
                (abs(a[i][j]), i, j)
                for i in range(t, n)
                for j in range(t, n)
                if a[i][j]
            )
            if pi != t:
                _swap_rows(a, t, pi)
                _swap_rows(u, t, pi)
            if pj != t:
                _swap_cols(a, t, pj)
                _swap_cols(v, t, pj)
            piv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                q = a[i][t] // piv
                if q:
                    _row_axpy(a, i, t, q)
                    _row_axpy(u, i, t, q)
                clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                q = a[t][j] // piv
                if q:
                    _col_axpy(a, j, t, q)
                    _col_axpy(v, j, t, q)
                clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # pull a non-multiple into row t; the next pass shrinks the pivot
            _row_axpy(a, t, bad, -1)
            _row_axpy(u, t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SmithDecomposition(
        matrix=mat,
        invariant_factors=tuple(a[i][i] for i in range(n)),
        U=as_matrix(u),
        V=as_matrix(v),
    )


@dataclass(frozen=True)
class HermiteBasis:
    """Row-style Hermite normal form of a full-rank set of lattice generators.

    ``H`` is upper triangular with positive pivots and the entries above each
    pivot reduced into ``[0, pivot)``.  ``transform`` is unimodular with
    ``transform @ rows == H`` stacked over zero rows.
    """

    H: IntMatrix
    transform: IntMatrix

    @property
    def det(self) -> int:
        return prod(self.H[i][i] for i in range(len(self.H)))

    def solve(self, u: Sequence[int]) -> tuple[int, ...] | None:
        """Integer ``x`` with ``x @ H == u``, or ``None`` if ``u`` is off the lattice."""
        n = len(self.H)
        if len(u) != n:
            raise ValueError(f"dimension mismatch: {len(u)} != {n}")
        rest = [int(c) for c in u]
        x = []
        for j in range(n):
            q, rem = divmod(rest[j], self.H[j][j])
            if rem:
                return None
            x.append(q)
            if q:
                row = self.H[j]
                for c in range(j, n):
                    rest[c] -= q * row[c]
        return tuple(x)

    def contains(self, u: Sequence[int]) -> bool:
        return self.solve(u) is not None


def hermite_basis(rows: Sequence[Sequence[int]]) -> HermiteBasis:
    a = [list(r) for r in as_matrix(rows)]
    m = len(a)
    if m == 0:
        raise RankDeficient("no rows")
    n = len(a[0])
    if m < n:
        raise RankDeficient(f"{m} rows cannot span Z^{n}")
    t = [list(row) for row in identity(m)]

    for j in range(n):
        while True:
            nz = [i for i in range(j, m) if a[i][j]]
            if not nz:
                raise RankDeficient(f"rows do not span a rank-{n} lattice")
            best = min(nz, key=lambda i: (abs(a[i][j]), i))
            if best != j:
                _swap_rows(a, j, best)
                _swap_rows(t, j, best)
            others = [i for i in range(j + 1, m) if a[i][j]]
            if not others:
                break
            for i in others:
                q = a[i][j] // a[j][j]
                _row_axpy(a, i, j, q)
                _row_axpy(t, i, j, q)
        if a[j][j] < 0:
            a[j] = [-x for x in a[j]]
            t[j] = [-x for x in t[j]]
        for i in range(j):
            q = a[i][j] // a[j][j]
            if q:
                _row_axpy(a, i, j, q)
                _row_axpy(t, i, j, q)

    return HermiteBasis(H=as_matrix(a[:n]), transform=as_matrix(t))


def congruent(u: Sequence[int], v: Sequence[int], m: Sequence[Sequence[int]]) -> bool:
    """True iff ``u - v`` lies in the row lattice of ``m``."""
    if len(u) != len(v) or len(u) != len(m):
        raise ValueError("dimension mismatch")
    return hermite_basis(m).contains([a - b for a, b in zip(u, v)])


def canonicalize(dec: SmithDecomposition, u: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of ``u`` in ``Z_{s_{n-r+1}} x ... x Z_{s_n}`` via ``u @ V'``."""
    image = vecmat(u, dec.Vprime)
    return tuple(c % s for c, s in zip(image, dec.Sprime))


@dataclass(frozen=True)
class GroupFacts:
    order: int
    rank: int
    is_cyclic: bool


def group_facts(dec: SmithDecomposition) -> GroupFacts:
    d = dec.det_divisors
    # d_{n-1} in 1-based indexing; the empty product is 1
    d_prev = d[-2] if len(d) >= 2 else 1
    return GroupFacts(order=d[-1] if d else 1, rank=dec.rank_r, is_cyclic=d_prev == 1)
