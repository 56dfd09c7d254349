"""Minimum-stash solvers: exact search, the polynomial 2-edge case, a
vertex-cover oracle, and greedy heuristics.

The exact solvers enumerate candidate stashes in cardinality-increasing,
lexicographic order, restricted to elements of the current k-core (stashing
anything outside the core never changes it).  Each branch carries the peeled
residue of its prefix downward, so subset evaluation is incremental rather
than from scratch.  Instances are expected to be desk-scale; correctness is
the point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError, InvalidArityError, ParameterError
from .hypergraph import Hypergraph
from .peeling import k_core, k_core_after, peel_edges

DEFAULT_SIZE_CAP = 6


@dataclass(frozen=True)
class StashResult:
    """A stash together with what the solver can promise about it."""

    kind: str  # "vertex" | "edge"
    stash: frozenset[int]
    size: int
    optimal: bool
    residual_core_empty: bool

    def __post_init__(self):
        assert self.kind in ("vertex", "edge")
        assert self.size == len(self.stash)
        assert self.residual_core_empty


@dataclass(frozen=True)
class CyclomaticCertificate:
    """Certificate for the minimum 2-edge-stash of a standard graph.

    h = |E| - |V| + components, and removing ``removed_edges`` (|.| = h)
    leaves an acyclic graph.
    """

    h: int
    components: int
    removed_edges: frozenset[int]


def _candidate_vertices(edges: dict[int, tuple[int, ...]]) -> list[int]:
    seen: set[int] = set()
    for vs in edges.values():
        seen.update(vs)
    return sorted(seen)


def _drop_vertex(edges: dict[int, tuple[int, ...]], v: int) -> dict[int, tuple[int, ...]]:
    return {e: vs for e, vs in edges.items() if v not in vs}


def _drop_edge(edges: dict[int, tuple[int, ...]], e: int) -> dict[int, tuple[int, ...]]:
    return {f: vs for f, vs in edges.items() if f != e}


def _search(core, k, budget, last, kind):
    """Lexicographically first stash of exactly `budget` more elements, or None.

    `core` is a nonempty k-core edge map; candidates are restricted to it
    and must exceed `last` to keep subsets canonically ordered.
    """
    candidates = _candidate_vertices(core) if kind == "vertex" else sorted(core)
    drop = _drop_vertex if kind == "vertex" else _drop_edge
    for x in candidates:
        if x <= last:
            continue
        residue = peel_edges(drop(core, x), k)
        if not residue:
            return [x]
        if budget > 1:
            rest = _search(residue, k, budget - 1, x, kind)
            if rest is not None:
                return [x] + rest
    return None


def _min_stash_exact(g: Hypergraph, k: int, size_cap: int, kind: str) -> StashResult:
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if size_cap < 0:
        raise ParameterError(f"size cap must be non-negative, got {size_cap}")
    core = peel_edges(g.edges, k)
    if not core:
        return StashResult(kind, frozenset(), 0, True, True)
    for budget in range(1, size_cap + 1):
        found = _search(core, k, budget, -1, kind)
        if found is not None:
            stash = frozenset(found)
            check = (
                k_core_after(g, k, stash_vertices=stash)
                if kind == "vertex"
                else k_core_after(g, k, stash_edges=stash)
            )
            assert check.core_empty
            return StashResult(kind, stash, len(stash), True, True)
    raise CapExceededError(f"no {kind} stash of size <= {size_cap} exists", size_cap)


def min_vertex_stash_exact(g: Hypergraph, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> StashResult:
    """Smallest vertex set whose removal leaves g k-peelable.

    Raises CapExceededError if every stash needs more than ``size_cap``
    vertices; that is a budget signal, not nonexistence.
    """
    return _min_stash_exact(g, k, size_cap, "vertex")


def min_edge_stash_exact(g: Hypergraph, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> StashResult:
    """Smallest edge set whose removal leaves g k-peelable."""
    return _min_stash_exact(g, k, size_cap, "edge")


class _UnionFind:
    """Disjoint sets with path compression and union by rank."""

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def two_edge_stash_standard(g: Hypergraph) -> CyclomaticCertificate:
    """Minimum 2-edge-stash of a standard graph via its cyclomatic number.

    Inserts edges one at a time and sets aside every edge that closes a
    cycle; the set-aside edges are a minimum stash of size
    h = |E| - |V| + components.
    """
    if g.d != 2:
        raise InvalidArityError(f"2-edge-stash shortcut needs d=2, got d={g.d}")
    uf = _UnionFind(g.vertices)
    removed: set[int] = set()
    for e in sorted(g.edges):
        u, v = g.edge_vertices(e)
        if not uf.union(u, v):
            removed.add(e)
    components = len({uf.find(v) for v in g.vertices})
    h = g.num_edges - g.num_vertices + components
    assert h == len(removed)
    return CyclomaticCertificate(h=h, components=components, removed_edges=frozenset(removed))


def min_vertex_cover_exact(g: Hypergraph, size_cap: int = DEFAULT_SIZE_CAP) -> frozenset[int]:
    """Smallest vertex set touching every edge of a standard graph.

    Exhaustive cardinality-increasing search over non-isolated vertices;
    serves as the independent oracle for the vertex-cover reduction.
    """
    if g.d != 2:
        raise InvalidArityError(f"vertex cover is defined here for d=2, got d={g.d}")
    if size_cap < 0:
        raise ParameterError(f"size cap must be non-negative, got {size_cap}")
    edges = list(g.edges.values())
    candidates = _candidate_vertices(g.edges)
    for size in range(0, min(size_cap, len(candidates)) + 1):
        for combo in combinations(candidates, size):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in edges):
                return frozenset(chosen)
    raise CapExceededError(f"no vertex cover of size <= {size_cap} exists", size_cap)


TIE_BREAKS = ("max_degree", "min_id", "seeded_random")


def greedy_stash(
    g: Hypergraph,
    k: int,
    mode: str,
    tie_break: str = "max_degree",
    seed: int = 0,
) -> StashResult:
    """Heuristic stash: repeatedly stash one element of the current k-core.

    ``max_degree`` stashes the core vertex of maximum core degree (for
    edges: the edge whose endpoints have the largest core-degree sum),
    lowest id on ties; ``min_id`` takes the lowest id; ``seeded_random``
    picks uniformly with a deterministic seed.  Always valid, never
    certified optimal.
    """
    if mode not in ("vertex", "edge"):
        raise ParameterError(f"mode must be 'vertex' or 'edge', got {mode!r}")
    if tie_break not in TIE_BREAKS:
        raise ParameterError(f"tie_break must be one of {TIE_BREAKS}, got {tie_break!r}")
    rng = random.Random(seed)
    core = peel_edges(g.edges, k)
    stash: set[int] = set()
    while core:
        deg: dict[int, int] = {}
        for vs in core.values():
            for v in vs:
                deg[v] = deg.get(v, 0) + 1
        if mode == "vertex":
            pool = sorted(deg)
            score = lambda v: deg[v]
        else:
            pool = sorted(core)
            score = lambda e: sum(deg[v] for v in core[e])
        if tie_break == "max_degree":
            pick = max(pool, key=lambda x: (score(x), -x))
        elif tie_break == "min_id":
            pick = pool[0]
        else:
            pick = rng.choice(pool)
        stash.add(pick)
        reduced = _drop_vertex(core, pick) if mode == "vertex" else _drop_edge(core, pick)
        core = peel_edges(reduced, k)
    return StashResult(mode, frozenset(stash), len(stash), False, True)
