"""Mixed Abelian Cayley graphs: Moore-like bounds, explicit families and exhaustive search."""

from .bounds import ac_bound, ac_bound_shift, bipartite_mixed_bound, delannoy, emit_table1, mixed_moore_bound
from .errors import (
    InvalidGenerators,
    MixedCayleyError,
    NotAnLTile,
    NotStronglyConnected,
    RankDeficient,
    SingularLattice,
    Unsupported,
)
from .group import AbelianGroup, groups_of_order, quotient_by
from .lattice import canonicalize, hermite_basis, smith_normal_form
from .mixedgraph import CayleyMixedGraph, classify_generators, lattice_graph
from .search import SearchResult, SearchSpec, exhaustive_search, verify_moore_nonexistence
from .tiles import LTile, double_tile, tile_diameter

__all__ = [
    "AbelianGroup",
    "CayleyMixedGraph",
    "InvalidGenerators",
    "LTile",
    "MixedCayleyError",
    "NotAnLTile",
    "NotStronglyConnected",
    "RankDeficient",
    "SearchResult",
    "SearchSpec",
    "SingularLattice",
    "Unsupported",
    "ac_bound",
    "ac_bound_shift",
    "bipartite_mixed_bound",
    "canonicalize",
    "classify_generators",
    "delannoy",
    "double_tile",
    "emit_table1",
    "exhaustive_search",
    "groups_of_order",
    "hermite_basis",
    "lattice_graph",
    "mixed_moore_bound",
    "quotient_by",
    "smith_normal_form",
    "tile_diameter",
    "verify_moore_nonexistence",
]
