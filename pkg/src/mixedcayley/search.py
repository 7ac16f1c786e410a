"""Exhaustive search for large mixed Abelian Cayley graphs of given diameter.

The search walks orders ``N`` downwards from the Moore-like bound and, for
each invariant-factor group of order ``N``, every generator set with the
requested ``(r1, r2, z)`` signature.  Pruning is conservative: candidates are
enumerated as sorted combinations so each set is seen once, and a candidate
is dropped as soon as BFS closes layer ``k`` without covering the group.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, islice
from typing import Callable, Iterator

from .bounds import ac_bound
from .errors import Unsupported
from .group import AbelianGroup, Element, groups_of_order
from .mixedgraph import CayleyMixedGraph, bfs_layers, reaches_all_within

CHUNK = 2048

Candidate = tuple[tuple[Element, ...], tuple[Element, ...], tuple[Element, ...]]


@dataclass(frozen=True)
class SearchSpec:
    r1: int
    r2: int
    z: int
    k: int
    n_min: int = 1
    n_max: int | None = None
    budget_candidates: int | None = None
    budget_seconds: float | None = None
    jobs: int = 1
    all_witnesses: bool = False

    def __post_init__(self) -> None:
        if min(self.r1, self.r2, self.z, self.k) < 0:
            raise ValueError("r1, r2, z and k must be non-negative")
        if self.r1 + self.r2 + self.z == 0:
            raise Unsupported("empty generator signature")
        bound = self.bound
        if self.n_max is None:
            object.__setattr__(self, "n_max", bound)
        if self.n_max > bound:
            raise ValueError(f"n_max={self.n_max} exceeds the bound {bound}")
        if self.n_min < 1:
            raise ValueError("n_min must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    @property
    def bound(self) -> int:
        return ac_bound(self.r1, self.r2, self.z, self.k)

    def orders(self) -> list[int]:
        """Orders to try, largest first; with an involution the order must be even."""
        out = range(self.n_max, self.n_min - 1, -1)
        return [n for n in out if self.r1 == 0 or n % 2 == 0]


@dataclass(frozen=True)
class Witness:
    group: AbelianGroup
    generators: tuple[Element, ...]
    diameter: int
    layer_sizes: tuple[int, ...]

    def graph(self) -> CayleyMixedGraph:
        return CayleyMixedGraph.from_generators(self.group, self.generators)

    def to_dict(self) -> dict:
        return {
            "group": list(self.group.factors),
            "generators": [list(g) for g in self.generators],
            "diameter": self.diameter,
            "layer_sizes": list(self.layer_sizes),
        }


@dataclass(frozen=True)
class SearchResult:
    best_order: int | None
    witnesses: tuple[Witness, ...]
    exhausted: bool
    candidates_examined: int
    orders_searched: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "best_order": self.best_order,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "exhausted": self.exhausted,
            "candidates_examined": self.candidates_examined,
            "orders_searched": list(self.orders_searched),
        }


def candidate_sets(group: AbelianGroup, r1: int, r2: int, z: int) -> Iterator[Candidate]:
    """Every generator set of signature ``(r1, r2, z)`` exactly once.

    Pairs are represented by the member with the smaller index; directed
    generators are non-involutions whose inverse is not also in the set.
    """
    order = group.order
    elems = [group.element(i) for i in range(1, order)]
    neg_index = {a: group.index(group.negate(a)) for a in elems}
    invs = [a for a in elems if neg_index[a] == group.index(a)]
    reps = [a for a in elems if group.index(a) < neg_index[a]]
    arcs = [a for a in elems if neg_index[a] != group.index(a)]
    for inv in combinations(invs, r1):
        for pairs in combinations(reps, r2):
            used = {group.index(a) for a in pairs} | {neg_index[a] for a in pairs}
            pool = [a for a in arcs if group.index(a) not in used]
            for directed in combinations(pool, z):
                idx = {group.index(a) for a in directed}
                if any(neg_index[a] in idx for a in directed):
                    continue
                yield inv, pairs, directed


def _steps(group: AbelianGroup, cand: Candidate) -> list[Element]:
    inv, pairs, directed = cand
    out = list(inv)
    for a in pairs:
        out += [a, group.negate(a)]
    return out + list(directed)


@lru_cache(maxsize=8)
def _all_translations(factors: tuple[int, ...]) -> list[list[int]]:
    group = AbelianGroup(factors)
    return [group.translation(group.element(i)).tolist() for i in range(group.order)]


def _evaluate_chunk(factors: tuple[int, ...], chunk: list[Candidate], k: int,
                    first_only: bool) -> list[tuple[int, tuple[int, ...]]]:
    """Positions in ``chunk`` of candidates with diameter ``<= k``, with their layer sizes."""
    group = AbelianGroup(factors)
    trans = _all_translations(factors)
    order = group.order
    hits = []
    for pos, cand in enumerate(chunk):
        tables = [trans[group.index(s)] for s in _steps(group, cand)]
        if reaches_all_within(tables, order, k):
            _, layers = bfs_layers(tables, order)
            hits.append((pos, tuple(len(layer) for layer in layers)))
            if first_only:
                break
    return hits


def _chunks(it: Iterator[Candidate], size: int) -> Iterator[list[Candidate]]:
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


class _Budget:
    def __init__(self, spec: SearchSpec):
        self.max_candidates = spec.budget_candidates
        self.deadline = None if spec.budget_seconds is None else time.monotonic() + spec.budget_seconds
        self.used = 0

    def allows(self, extra: int) -> bool:
        if self.max_candidates is not None and self.used + extra > self.max_candidates:
            return False
        return self.deadline is None or time.monotonic() < self.deadline


def _search_order(spec: SearchSpec, n: int, budget: _Budget, pool: ProcessPoolExecutor | None,
                  progress: Callable[[str], None] | None) -> tuple[list[Witness], bool]:
    """Witnesses of order ``n`` in enumeration order; the flag is False if the budget ran out."""
    witnesses: list[Witness] = []
    first_only = not spec.all_witnesses
    for group in groups_of_order(n):
        if spec.r1 > len(group.involutions()):
            continue
        chunks = _chunks(candidate_sets(group, spec.r1, spec.r2, spec.z), CHUNK)
        while True:
            batch = list(islice(chunks, max(1, spec.jobs)))
            if not batch:
                break
            if not budget.allows(sum(len(c) for c in batch)):
                # spend what is left one candidate at a time, deterministically
                for chunk in batch:
                    for cand in chunk:
                        if not budget.allows(1):
                            return witnesses, False
                        budget.used += 1
                        hits = _evaluate_chunk(group.factors, [cand], spec.k, True)
                        if hits:
                            witnesses.append(_witness(group, cand, hits[0][1]))
                            if first_only:
                                return witnesses, True
                return witnesses, False
            if pool is None:
                results = [_evaluate_chunk(group.factors, c, spec.k, first_only) for c in batch]
            else:
                results = list(pool.map(_evaluate_chunk, [group.factors] * len(batch), batch,
                                        [spec.k] * len(batch), [first_only] * len(batch)))
            for chunk, hits in zip(batch, results):
                if first_only and hits:
                    # count only up to the witness so the tally is independent of jobs
                    budget.used += hits[0][0] + 1
                    witnesses.append(_witness(group, chunk[hits[0][0]], hits[0][1]))
                    return witnesses, True
                budget.used += len(chunk)
                witnesses.extend(_witness(group, chunk[pos], sizes) for pos, sizes in hits)
        if progress:
            progress(f"order {n}: {group} done, {budget.used} candidates, {len(witnesses)} witnesses")
    return witnesses, True


def _witness(group: AbelianGroup, cand: Candidate, sizes: tuple[int, ...]) -> Witness:
    return Witness(group, tuple(_steps(group, cand)), len(sizes) - 1, sizes)


def exhaustive_search(spec: SearchSpec, progress: Callable[[str], None] | None = None) -> SearchResult:
    """Largest order in ``[n_min, n_max]`` admitting diameter ``<= k``, with witnesses."""
    budget = _Budget(spec)
    searched: list[int] = []
    pool = ProcessPoolExecutor(max_workers=spec.jobs) if spec.jobs > 1 else None
    try:
        for n in spec.orders():
            witnesses, complete = _search_order(spec, n, budget, pool, progress)
            searched.append(n)
            if witnesses and (complete or not spec.all_witnesses):
                return SearchResult(n, tuple(witnesses), True, budget.used, tuple(searched))
            if not complete:
                best = n if witnesses else None
                return SearchResult(best, tuple(witnesses), False, budget.used, tuple(searched))
            if progress:
                progress(f"order {n}: no graph of diameter <= {spec.k}")
    finally:
        if pool is not None:
            pool.shutdown()
    return SearchResult(None, (), True, budget.used, tuple(searched))


@dataclass(frozen=True)
class NonexistenceResult:
    z: int
    k: int
    bound: int
    attained: bool
    reason: str
    search: SearchResult | None = None

    @property
    def conclusive(self) -> bool:
        return self.search is None or self.search.exhausted

    def to_dict(self) -> dict:
        return {
            "r1": 1,
            "r2": 0,
            "z": self.z,
            "k": self.k,
            "bound": self.bound,
            "attained": self.attained,
            "conclusive": self.conclusive,
            "reason": self.reason,
            "search": None if self.search is None else self.search.to_dict(),
        }


def verify_moore_nonexistence(z: int, k: int, budget_seconds: float | None = None,
                              jobs: int = 1) -> NonexistenceResult:
    """Check whether some Abelian Cayley graph with one involution and ``z`` arcs attains the bound."""
    if z < 2 or k < 2:
        raise Unsupported("non-existence check needs z >= 2 and k >= 2")
    bound = ac_bound(1, 0, z, k)
    if bound % 2:
        return NonexistenceResult(z, k, bound, False, "parity: a 1-factor forces even order")
    spec = SearchSpec(1, 0, z, k, n_min=bound, n_max=bound, budget_seconds=budget_seconds, jobs=jobs)
    result = exhaustive_search(spec)
    if result.best_order == bound:
        return NonexistenceResult(z, k, bound, True, "witness found", result)
    if not result.exhausted:
        return NonexistenceResult(z, k, bound, False, "budget exhausted before the search completed", result)
    groups = ", ".join(str(g) for g in groups_of_order(bound))
    return NonexistenceResult(z, k, bound, False, f"exhaustive search over {groups}", result)
