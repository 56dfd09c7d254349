"""Independent brute-force oracles the engine and solvers are checked against.

Everything here works by plain subset enumeration over the input, with no
worklists, no pruning to cores, and no shared code with the package's
algorithms, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, permutations

from stashpeel import Hypergraph, k_core_after


def cores_by_enumeration(g: Hypergraph, ks) -> dict[int, tuple[frozenset[int], frozenset[int]]]:
    """Maximal subgraph of minimum degree >= k for each k, by trying every
    vertex subset.

    A subset qualifies when every member has at least k induced edges; the
    union of qualifying subsets is itself qualifying and is the k-core.
    Subsets are walked as bitmasks so n up to ~12 stays cheap.
    """
    vertices = sorted(g.vertices)
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    edge_masks = []
    for vs in g.edges.values():
        mask = 0
        idxs = []
        for v in vs:
            mask |= 1 << index[v]
            idxs.append(index[v])
        edge_masks.append((mask, idxs))
    best = {k: 0 for k in ks}
    for mask in range(1, 1 << n):
        deg = [0] * n
        for em, idxs in edge_masks:
            if em & mask == em:
                for i in idxs:
                    deg[i] += 1
        mindeg = min(deg[i] for i in range(n) if mask >> i & 1)
        for k in ks:
            if mindeg >= k:
                best[k] |= mask
    out = {}
    for k, mask in best.items():
        core_v = frozenset(vertices[i] for i in range(n) if mask >> i & 1)
        core_e = frozenset(e for e, vs in g.edges.items() if all(v in core_v for v in vs))
        out[k] = (core_v, core_e)
    return out


def core_by_enumeration(g: Hypergraph, k: int) -> tuple[frozenset[int], frozenset[int]]:
    return cores_by_enumeration(g, (k,))[k]


def min_stash_size_by_enumeration(g: Hypergraph, k: int, kind: str) -> int:
    """Smallest stash size by unpruned enumeration over all element subsets."""
    pool = sorted(g.vertices) if kind == "vertex" else sorted(g.edges)
    for size in range(len(pool) + 1):
        for subset in combinations(pool, size):
            if kind == "vertex":
                trace = k_core_after(g, k, stash_vertices=subset)
            else:
                trace = k_core_after(g, k, stash_edges=subset)
            if trace.core_empty:
                return size
    raise AssertionError("stashing everything always works")


def min_cover_size_by_enumeration(g: Hypergraph) -> int:
    """Smallest vertex set meeting every edge, by unpruned enumeration."""
    assert g.d == 2
    vertices = sorted(g.vertices)
    edges = list(g.edges.values())
    for size in range(len(vertices) + 1):
        for subset in combinations(vertices, size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    raise AssertionError("unreachable: the full vertex set covers everything")


def connected_components(g: Hypergraph) -> int:
    """Component count by depth-first search over the incidence structure."""
    seen: set[int] = set()
    count = 0
    for start in sorted(g.vertices):
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for e in g.incident_edges(v):
                for w in g.edge_vertices(e):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
    return count


def nonisomorphic_graphs(max_vertices: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """All simple graphs on 0..max_vertices vertices, one per isomorphism class.

    Canonical form: the lexicographically smallest sorted edge list over
    all vertex relabelings.  Fine for max_vertices <= 6.
    """
    out: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    for n in range(max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        seen: set[tuple[tuple[int, int], ...]] = set()
        for bits in range(2 ** len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            canon = None
            for perm in permutations(range(n)):
                relabeled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
                if canon is None or relabeled < canon:
                    canon = relabeled
            assert canon is not None or n == 0
            key = canon if canon is not None else ()
            if key not in seen:
                seen.add(key)
                out.append((n, key))
    return out
