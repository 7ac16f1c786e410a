"""Moore-like upper bounds on the order of mixed graphs.

The general mixed bound and its bipartite variant involve irrational roots,
so each has a float closed form and an exact integer recurrence.  The
Abelian Cayley bound ``ac_bound`` is a finite binomial sum and is computed
exactly in every equivalent form.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import Unsupported

AC_FORMS = ("eq5", "prop2", "thm_i", "thm_ii", "thm_iii")


def binom(n: int, r: int) -> int:
    """Binomial coefficient, zero whenever ``r < 0``, ``r > n`` or ``n < 0``."""
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


@dataclass(frozen=True)
class MooreParameters:
    r: int
    z: int

    @property
    def d(self) -> int:
        return self.r + self.z

    @property
    def v(self) -> int:
        return (self.d - 1) ** 2 + 4 * self.z

    @property
    def u1(self) -> float:
        return (self.d - 1 - math.sqrt(self.v)) / 2

    @property
    def u2(self) -> float:
        return (self.d - 1 + math.sqrt(self.v)) / 2

    @property
    def A(self) -> float:
        s = math.sqrt(self.v)
        return (s - (self.d + 1)) / (2 * s)

    @property
    def B(self) -> float:
        s = math.sqrt(self.v)
        return (s + (self.d + 1)) / (2 * s)


def _check_rz(r: int, z: int, k: int) -> None:
    if r < 0 or z < 0 or k < 0:
        raise ValueError("r, z and k must be non-negative")
    if r + z == 0:
        raise Unsupported("degenerate degree d = r + z = 0")


def moore_tree_layers(r: int, z: int, k: int) -> list[int]:
    """``n_0 .. n_k`` with ``n_0 = 1``, ``n_1 = d``, ``n_{i+1} = (d-1) n_i + z n_{i-1}``."""
    _check_rz(r, z, k)
    d = r + z
    layers = [1, d]
    while len(layers) <= k:
        layers.append((d - 1) * layers[-1] + z * layers[-2])
    return layers[: k + 1]


def mixed_moore_recurrence(r: int, z: int, k: int) -> int:
    return sum(moore_tree_layers(r, z, k))


def _geometric(u: float, k: int) -> float:
    """(u^(k+1) - 1) / (u - 1), continuous at u = 1."""
    if u == 1.0:
        return float(k + 1)
    return (u ** (k + 1) - 1) / (u - 1)


def _odd_geometric(u: float, k: int) -> float:
    """(u^(k+1) - u) / (u^2 - 1), continuous at u = +-1."""
    if abs(u) == 1.0:
        # the limit of the expression at u = +-1 via l'Hopital
        return ((k + 1) * u**k - 1) / (2 * u)
    return (u ** (k + 1) - u) / (u * u - 1)


def mixed_moore_bound(r: int, z: int, k: int) -> float:
    """Closed-form general mixed Moore bound in terms of the roots ``u1``, ``u2``."""
    _check_rz(r, z, k)
    p = MooreParameters(r, z)
    if p.v == 0:
        # r = 1, z = 0: a single edge, double root 0
        return 1.0 if k == 0 else 2.0
    return p.A * _geometric(p.u1, k) + p.B * _geometric(p.u2, k)


def bipartite_mixed_bound(r: int, z: int, k: int) -> float:
    """Closed-form Moore-like bound for bipartite mixed graphs (``r > 0``)."""
    _check_rz(r, z, k)
    if r == 0:
        raise Unsupported("the bipartite mixed bound is only defined for r > 0")
    p = MooreParameters(r, z)
    if p.v == 0:
        return 0.0 if k == 0 else 2.0
    return 2 * (p.A * _odd_geometric(p.u1, k) + p.B * _odd_geometric(p.u2, k))


def bipartite_mixed_recurrence(r: int, z: int, k: int) -> int:
    """Exact companion of :func:`bipartite_mixed_bound`.

    Twice the sum of the Moore-tree layers whose index has parity opposite
    to ``k``.
    """
    if r == 0:
        raise Unsupported("the bipartite mixed bound is only defined for r > 0")
    layers = moore_tree_layers(r, z, k)
    return 2 * sum(n for i, n in enumerate(layers) if (i + k) % 2 == 1)


@dataclass(frozen=True)
class ACBoundParams:
    r1: int
    r2: int
    z: int
    k: int

    def __post_init__(self) -> None:
        if min(self.r1, self.r2, self.z, self.k) < 0:
            raise ValueError(f"parameters must be non-negative: {self}")


def _eq5(r1: int, r2: int, z: int, k: int) -> int:
    return sum(binom(r2 + z + i, i) * binom(r1 + r2, k - i) for i in range(k + 1))


def _prop2(r1: int, r2: int, z: int, k: int) -> int:
    return sum(
        binom(r2, i) * 2**i * sum(binom(r1, j) * binom(k + z - j, i + z) for j in range(r1 + 1))
        for i in range(r2 + 1)
    )


def _thm_i(r1: int, r2: int, z: int, k: int) -> int:
    n = r1 + r2
    return sum(binom(n, j) * binom(k + r2 + z - j, z + r2) for j in range(n + 1))


def _thm_ii(r1: int, r2: int, z: int, k: int) -> int:
    # all involutions traded for pairs: (0, r1 + r2, z - r1)
    n, w = r1 + r2, z - r1
    return sum(binom(n, i) * binom(k + w, i + w) * 2**i for i in range(n + 1))


def _thm_iii(r1: int, r2: int, z: int, k: int) -> int:
    # all arcs traded for pairs: (r1 - z, r2 + z, 0)
    n, w = r2 + z, r1 - z
    return sum(
        binom(n, i) * 2**i * sum(binom(w, j) * binom(k - j, i) for j in range(w + 1))
        for i in range(n + 1)
    )


_FORMS = {"eq5": _eq5, "prop2": _prop2, "thm_i": _thm_i, "thm_ii": _thm_ii, "thm_iii": _thm_iii}


def applicable_forms(r1: int, r2: int, z: int) -> list[str]:
    forms = ["eq5", "prop2", "thm_i"]
    if r1 <= z:
        forms.append("thm_ii")
    if r1 >= z:
        forms.append("thm_iii")
    return forms


def ac_bound(r1: int, r2: int, z: int, k: int, form: str = "eq5") -> int:
    """Moore bound for mixed Abelian Cayley graphs with ``r1`` involutions,
    ``r2`` inverse pairs and ``z`` arcs, at diameter ``k``."""
    p = ACBoundParams(r1, r2, z, k)
    if form not in _FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {AC_FORMS}")
    if form not in applicable_forms(p.r1, p.r2, p.z):
        raise Unsupported(f"form {form} does not apply to r1={r1}, z={z}")
    return _FORMS[form](p.r1, p.r2, p.z, p.k)


def ac_bound_shift(p: ACBoundParams, nu: int) -> ACBoundParams:
    """Trade ``nu`` (involution, arc) couples for inverse pairs; the bound is unchanged."""
    if not -p.r2 <= nu <= min(p.r1, p.z):
        raise Unsupported(f"shift {nu} outside [{-p.r2}, {min(p.r1, p.z)}]")
    return ACBoundParams(p.r1 - nu, p.r2 + nu, p.z - nu, p.k)


def ac_bound_r1(z: int, k: int) -> Fraction:
    """``(2k+z)/(k+z) * C(k+z, k)`` for one involution and ``z`` arcs, as an exact rational."""
    if k + z == 0:
        return Fraction(1)
    return Fraction(2 * k + z, k + z) * math.comb(k + z, k)


def delannoy(t: int, k: int) -> int:
    if t < 0 or k < 0:
        raise ValueError("Delannoy indices must be non-negative")
    return sum(2**i * binom(t, i) * binom(k, i) for i in range(min(t, k) + 1))


def emit_table1(k: int, r1_max: int, z_max: int) -> list[list[int]]:
    """``table[z][r1] = ac_bound(r1, 0, z, k)``."""
    if k < 2:
        raise Unsupported("the table is defined for diameter k >= 2")
    return [[ac_bound(r1, 0, z, k) for r1 in range(r1_max + 1)] for z in range(z_max + 1)]


def table1_csv(k: int, r1_max: int, z_max: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["z"] + [f"r1={r1}" for r1 in range(r1_max + 1)])
    for z, row in enumerate(emit_table1(k, r1_max, z_max)):
        writer.writerow([z] + row)
    return buf.getvalue()


def dense_family_order(z: int, k: int) -> float:
    """``2^z / (z+1) * ((k-1)/z + 1)^z``, the closed-form vertex count of the dense family."""
    return 2**z / (z + 1) * ((k - 1) / z + 1) ** z


def circulant_power_order(z: int, k: int) -> float:
    """``(1 + (2k-1)/(2z-1))^z``, the circulant-power family size as a real function of ``k``."""
    return (1 + (2 * k - 1) / (2 * z - 1)) ** z
