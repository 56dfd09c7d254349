"""Gadget builders and their exhaustive property checkers.

A gadget is a hypergraph fragment plus a description of where future
neighboring edges attach (its ports) and which internal edges are
designated stashable (its E* set).  Builders only create internal
structure; the neighboring edges themselves are created later, either by
an embedding (reductions) or by the check harness, which caps every port
slot with a high-degree anchor vertex so ports count toward internal
degrees without ever being peelable themselves.

The families:

* ``ck``           -- the edge-replacement fragment of the cover reduction;
                      removing either endpoint makes it k-peelable.
* ``b2`` / ``b3``  -- k-unpeelable fragments with 2 or 3 neighboring edges
                      that fully peel when any one neighboring edge goes.
* ``simple-stable``-- degree m <= k-1: a central vertex behind a chain of
                      b-blocks; peels only when all m neighboring edges are
                      removed, unless an E* edge is stashed.
* ``stable``       -- arbitrary degree via a breadth-first tree of simple
                      stable blocks (k >= 3).
* ``tree-stable``  -- the k=2, d>=3 variant built from a (d-1)-ary
                      hyper-tree whose root edge is the single E* edge.
* ``pk``           -- the per-vertex wrapper used by the vertex-to-edge
                      stash reduction (primary node + relays + stable
                      block); checked against its peel/stash simulation
                      contract.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ParameterError
from .hypergraph import Hypergraph
from .peeling import k_core

PARTIAL_REMOVAL_EXHAUSTIVE_LIMIT = 10
PK_SUBSET_EXHAUSTIVE_LIMIT = 5
_SAMPLED_SUBSETS = 100


@dataclass(frozen=True)
class Port:
    """Attachment descriptor for one named port.

    ``edges`` lists, per future neighboring edge, the internal vertices
    that edge must contain; the remaining slots are filled externally.
    ``shared_external`` means a single external vertex occupies one slot of
    every listed edge (the ck gadget's u and v work this way).
    """

    name: str
    edges: tuple[tuple[int, ...], ...]
    shared_external: bool = False


@dataclass
class Gadget:
    graph: Hypergraph
    ports: tuple[Port, ...]
    estar: frozenset[int]
    params: dict[str, int]
    meta: dict[str, object] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return str(self.meta.get("kind", "gadget"))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class GadgetReport:
    gadget: str
    params: dict[str, int]
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def embed_graph(g: Hypergraph, target: Hypergraph) -> tuple[dict[int, int], dict[int, int]]:
    """Copy g into target with fresh ids; returns (vertex map, edge map)."""
    vmap = {v: target.add_vertex() for v in sorted(g.vertices)}
    emap = {}
    for e in sorted(g.edges):
        emap[e] = target.add_edge(tuple(vmap[v] for v in g.edge_vertices(e)))
    return vmap, emap


# -- internal 2-uniform assembly ---------------------------------------------


def _add_2block(g: Hypergraph, k: int) -> dict:
    # two hubs over a (k-1)-clique; every vertex has degree k once each
    # hub's neighboring edge is attached
    hubs = (g.add_vertex(), g.add_vertex())
    clique = [g.add_vertex() for _ in range(k - 1)]
    for h in hubs:
        for c in clique:
            g.add_edge((h, c))
    for a, b in combinations(clique, 2):
        g.add_edge((a, b))
    return {"hubs": hubs}


def _add_3block(g: Hypergraph, k: int) -> dict:
    if k == 3:
        # a single vertex of degree 3 once its neighboring edges attach
        x = g.add_vertex()
        return {"hubs": (x, x, x)}
    hubs = tuple(g.add_vertex() for _ in range(3))
    if k == 4:
        # three hubs over a middle path a-b-c; hub degree 4 with its port,
        # middle degrees 4/5/4; losing any one port cascades through the
        # path and peels everything
        mid = [g.add_vertex() for _ in range(3)]
        for h in hubs:
            for m in mid:
                g.add_edge((h, m))
        g.add_edge((mid[0], mid[1]))
        g.add_edge((mid[1], mid[2]))
        return {"hubs": hubs}
    # k >= 5: hubs, a middle layer of k-1 vertices, and a (k-3)-clique;
    # layer degrees are k, k and 2k-5 >= k
    layer1 = [g.add_vertex() for _ in range(k - 1)]
    layer2 = [g.add_vertex() for _ in range(k - 3)]
    for h in hubs:
        for x in layer1:
            g.add_edge((h, x))
    for x in layer1:
        for z in layer2:
            g.add_edge((x, z))
    for a, b in combinations(layer2, 2):
        g.add_edge((a, b))
    return {"hubs": hubs}


def _add_simple_stable(g: Hypergraph, k: int, with_parent_hook: bool = False) -> dict:
    """Central vertex behind a chain of k-1 b-blocks.

    The fragment itself does not depend on the degree m: the m neighboring
    edges simply attach at the central vertex, giving it degree k-1+m.
    Chain ends are 2-blocks and interior positions 3-blocks; when the block
    is a tree child (``with_parent_hook``) the first 2-block is replaced by
    a 3-block whose spare hub receives the parent's edge.  Every edge
    touching a b-block (central-to-block and chain) is stashable: removing
    one peels the adjacent block, the chain cascades, and the central
    vertex is left with degree at most k-1.
    """
    central = g.add_vertex()
    n_blocks = k - 1
    blocks = []
    for pos in range(n_blocks):
        hooked = with_parent_hook and pos == 0
        is_end = pos in (0, n_blocks - 1)
        if is_end and not hooked:
            blocks.append((_add_2block(g, k), 2))
        else:
            blocks.append((_add_3block(g, k), 3))
    estar = []
    parent_hub = None
    for pos, (blk, kind) in enumerate(blocks):
        estar.append(g.add_edge((central, blk["hubs"][0])))
        if with_parent_hook and pos == 0:
            parent_hub = blk["hubs"][2]
    for pos in range(n_blocks - 1):
        left_blk, left_kind = blocks[pos]
        right_blk, right_kind = blocks[pos + 1]
        # slot 0 is always the central edge; a 2-block's only other hub is
        # slot 1, a 3-block uses slot 1 for its left chain and slot 2 for
        # its right (a hooked first block has no left chain, so slot 1 is
        # its right and slot 2 its parent hook)
        right_hub = left_blk["hubs"][1] if pos == 0 or left_kind == 2 else left_blk["hubs"][2]
        left_hub = right_blk["hubs"][1]
        estar.append(g.add_edge((right_hub, left_hub)))
    return {"central": central, "estar_edges": estar, "parent_hub": parent_hub}


def _add_stable(g: Hypergraph, k: int, m: int) -> dict:
    """Stable block of any degree: breadth-first (k-1)-ary tree of simple
    stable blocks of degree k-1, trimmed to exactly m exposed ports."""
    if m <= k - 1:
        s = _add_simple_stable(g, k)
        return {
            "port_attach": [s["central"]] * m,
            "estar_edges": s["estar_edges"],
            "depth": 0,
            "n_nodes": 1,
        }
    root = _add_simple_stable(g, k)
    centrals = [root["central"]]
    depths = [0]
    slots: deque[int] = deque([0] * (k - 1))
    while len(slots) < m:
        parent = slots.popleft()
        child = _add_simple_stable(g, k, with_parent_hook=True)
        g.add_edge((centrals[parent], child["parent_hub"]))
        centrals.append(child["central"])
        depths.append(depths[parent] + 1)
        slots.extend([len(centrals) - 1] * (k - 1))
    # excess < k-2, so the newest child keeps at least 2 exposed ports and
    # no node is ever left port-free
    owners = list(slots)[:m]
    return {
        "port_attach": [centrals[i] for i in owners],
        "estar_edges": root["estar_edges"],
        "depth": max(depths),
        "n_nodes": len(centrals),
    }


def _add_tree_stable(g: Hypergraph, d: int, p: int) -> dict:
    """(d-1)-ary hyper-tree with sibling w-vertices under each leaf group.

    Port i will be the edge (root, w_i, <d-2 externals>); only the root has
    internal degree 1, so nothing peels until every port is gone, while
    stashing the root edge unravels the whole tree top-down.
    """
    fan = d - 1
    depth = 1
    while fan**depth < max(p, 1):
        depth += 1
    root = g.add_vertex()
    root_edge = None
    level = [root]
    for _ in range(depth):
        nxt = []
        for node in level:
            kids = [g.add_vertex() for _ in range(fan)]
            e = g.add_edge((node, *kids))
            if root_edge is None:
                root_edge = e
            nxt.append(kids)
        level = [v for kids in nxt for v in kids]
        groups = nxt
    ws = []
    for group in groups:
        group_ws = [g.add_vertex() for _ in range(fan)]
        for v in group:
            g.add_edge((v, *group_ws))
        ws.extend(group_ws)
    return {
        "root": root,
        "root_edge": root_edge,
        "port_attach": [(root, ws[i]) for i in range(p)],
        "ws": ws,
    }


def _lift_to_d(g2: Hypergraph, d: int) -> tuple[Hypergraph, list[int]]:
    """Extend a 2-uniform assembly to arity d by appending d-2 shared dummy
    vertices to every internal edge; ids are preserved."""
    if d == 2:
        return g2, []
    g = Hypergraph(d)
    g.add_vertices(g2.num_vertices)
    if g2.num_edges == 0:
        return g, []
    dummies = g.add_vertices(d - 2)
    for e in sorted(g2.edges):
        g.add_edge((*g2.edge_vertices(e), *dummies))
    return g, dummies


# -- public builders ----------------------------------------------------------


def build_ck_gadget(k: int, d: int) -> Gadget:
    """Edge-replacement gadget with k-slot ports on the u and v sides.

    Internal vertices 1..k each take one edge to u and one to v; the first
    and last additionally connect to each interior vertex (total degree
    exactly k), and interior vertices form a clique with edges to both
    ends.  For d >= 3, d-2 dummy vertices join every edge, port edges
    included, which keeps their degree at 2k or more.
    """
    if k < 2 or d < 2:
        raise ParameterError(f"ck gadget needs k >= 2 and d >= 2, got k={k}, d={d}")
    g = Hypergraph(d)
    internals = g.add_vertices(k)
    dummies = g.add_vertices(d - 2)
    first, last = internals[0], internals[-1]
    interior = internals[1:-1]
    for j in interior:
        g.add_edge((first, j, *dummies))
        g.add_edge((last, j, *dummies))
    for a, b in combinations(interior, 2):
        g.add_edge((a, b, *dummies))
    side = tuple((j, *dummies) for j in internals)
    ports = (Port("u", side, shared_external=True), Port("v", side, shared_external=True))
    return Gadget(
        graph=g,
        ports=ports,
        estar=frozenset(),
        params={"k": k, "d": d},
        meta={"kind": "ck", "internals": internals, "dummies": dummies},
    )


def build_b_block(b: int, k: int, d: int) -> Gadget:
    """b-block: k-unpeelable with b neighboring edges, fully peeled by the
    removal of any one of them.  Only b=2 and b=3 are needed or built."""
    if b not in (2, 3):
        raise ParameterError(f"only 2- and 3-blocks are supported, got b={b}")
    if k < 3 or d < 2:
        raise ParameterError(f"b-blocks need k >= 3 and d >= 2, got k={k}, d={d}")
    g2 = Hypergraph(2)
    blk = _add_2block(g2, k) if b == 2 else _add_3block(g2, k)
    g, dummies = _lift_to_d(g2, d)
    ports = tuple(Port(f"p{i}", ((hub,),)) for i, hub in enumerate(blk["hubs"][:b]))
    return Gadget(
        graph=g,
        ports=ports,
        estar=frozenset(),
        params={"b": b, "k": k, "d": d},
        meta={"kind": f"b{b}", "hubs": blk["hubs"][:b], "dummies": dummies},
    )


def build_simple_stable_block(m: int, k: int, d: int) -> Gadget:
    if k < 3 or d < 2:
        raise ParameterError(f"simple stable blocks need k >= 3 and d >= 2, got k={k}, d={d}")
    if not 1 <= m <= k - 1:
        raise ParameterError(f"simple stable block degree must be in 1..{k - 1}, got m={m}")
    g2 = Hypergraph(2)
    s = _add_simple_stable(g2, k)
    g, dummies = _lift_to_d(g2, d)
    ports = tuple(Port(f"p{i}", ((s["central"],),)) for i in range(m))
    return Gadget(
        graph=g,
        ports=ports,
        estar=frozenset(s["estar_edges"]),
        params={"m": m, "k": k, "d": d},
        meta={"kind": "simple-stable", "central": s["central"], "dummies": dummies},
    )


STABLE_SIZE_CONSTANT = 2


def build_stable_block(m: int, k: int, d: int) -> Gadget:
    """Stable block of degree m; delegates to the simple construction when
    m <= k-1.  E* is the root block's E*.  Vertex count is asserted against
    the recorded bound STABLE_SIZE_CONSTANT * m * k^2 (+ dummies)."""
    if k < 3 or d < 2:
        raise ParameterError(f"stable blocks need k >= 3 and d >= 2, got k={k}, d={d}")
    if m < 1:
        raise ParameterError(f"stable block degree must be positive, got m={m}")
    g2 = Hypergraph(2)
    st = _add_stable(g2, k, m)
    g, dummies = _lift_to_d(g2, d)
    bound = STABLE_SIZE_CONSTANT * m * k * k + max(0, d - 2)
    assert g.num_vertices <= bound, f"stable block size {g.num_vertices} exceeds bound {bound}"
    ports = tuple(Port(f"p{i}", ((v,),)) for i, v in enumerate(st["port_attach"]))
    return Gadget(
        graph=g,
        ports=ports,
        estar=frozenset(st["estar_edges"]),
        params={
            "m": m,
            "k": k,
            "d": d,
            "depth": st["depth"],
            "nodes": st["n_nodes"],
            "size_bound_c": STABLE_SIZE_CONSTANT,
        },
        meta={"kind": "stable", "port_attach": st["port_attach"], "dummies": dummies},
    )


TREE_STABLE_SIZE_CONSTANT = 3


def build_tree_stable_block(p: int, d: int) -> Gadget:
    """The k=2 stable block over a (d-1)-ary hyper-tree; requires d >= 3,
    mirroring that 2-edge stashing on standard graphs is polynomial."""
    if d < 3:
        raise ParameterError(f"tree stable blocks need d >= 3, got d={d}")
    if p < 1:
        raise ParameterError(f"tree stable block degree must be positive, got p={p}")
    g = Hypergraph(d)
    t = _add_tree_stable(g, d, p)
    bound = TREE_STABLE_SIZE_CONSTANT * p * d
    assert g.num_vertices <= bound, f"tree stable size {g.num_vertices} exceeds bound {bound}"
    ports = tuple(Port(f"p{i}", (attach,)) for i, attach in enumerate(t["port_attach"]))
    return Gadget(
        graph=g,
        ports=ports,
        estar=frozenset({t["root_edge"]}),
        params={"p": p, "d": d, "k": 2, "size_bound_c": TREE_STABLE_SIZE_CONSTANT},
        meta={"kind": "tree-stable", "root": t["root"], "root_edge": t["root_edge"], "ws": t["ws"]},
    )


def build_pk_gadget(delta: int, k: int, d: int) -> Gadget:
    """Per-vertex wrapper used by the vertex-to-edge stash reduction.

    Its delta ports stand for the original vertex's incident edges; the
    gadget fully peels exactly when fewer than k of them survive, and
    stashing any E* edge peels it unconditionally.  delta=0 degenerates to
    a primary node plus a port-free stable block, which peels immediately,
    matching an isolated vertex.
    """
    if delta < 0:
        raise ParameterError(f"delta must be non-negative, got {delta}")
    if k >= 3 and d >= 2:
        g2 = Hypergraph(2)
        primary = g2.add_vertex()
        st = _add_stable(g2, k, delta)
        relay_hubs = []
        for i in range(delta):
            blk = _add_3block(g2, k)
            g2.add_edge((primary, blk["hubs"][0]))
            g2.add_edge((st["port_attach"][i], blk["hubs"][1]))
            relay_hubs.append(blk["hubs"][2])
        g, dummies = _lift_to_d(g2, d)
        ports = tuple(Port(f"e{i}", ((h,),)) for i, h in enumerate(relay_hubs))
        return Gadget(
            graph=g,
            ports=ports,
            estar=frozenset(st["estar_edges"]),
            params={"k": k, "d": d, "delta": delta},
            meta={"kind": "pk", "primary": primary, "relays": relay_hubs, "dummies": dummies},
        )
    if k == 2 and d >= 3:
        g = Hypergraph(d)
        primary = g.add_vertex()
        t = _add_tree_stable(g, d, delta)
        relays = []
        for i in range(delta):
            relay = g.add_vertex()
            xs = g.add_vertices(d - 2)
            g.add_edge((primary, relay, *xs))
            root, w = t["port_attach"][i]
            # the same d-2 fillers complete both the primary-side edge and
            # the stable block's neighboring edge, so each has degree 2
            g.add_edge((root, w, *xs))
            relays.append(relay)
        ports = tuple(Port(f"e{i}", ((r,),)) for i, r in enumerate(relays))
        return Gadget(
            graph=g,
            ports=ports,
            estar=frozenset({t["root_edge"]}),
            params={"k": 2, "d": d, "delta": delta},
            meta={"kind": "pk", "primary": primary, "relays": relays, "root": t["root"]},
        )
    raise ParameterError(f"per-vertex gadgets exist for k >= 3 or (k=2, d>=3), got k={k}, d={d}")


# -- check harness ------------------------------------------------------------


@dataclass
class Harness:
    """A gadget embedded with all ports capped by pumped anchor vertices."""

    graph: Hypergraph
    k: int
    block_vertices: frozenset[int]
    port_edges: dict[str, tuple[int, ...]]
    port_anchor: dict[str, int]
    vmap: dict[int, int]
    emap: dict[int, int]


def build_harness(gadget: Gadget) -> Harness:
    k = gadget.params["k"]
    d = gadget.graph.d
    h = Hypergraph(d)
    vmap, emap = embed_graph(gadget.graph, h)
    anchors: list[int] = []
    port_edges: dict[str, tuple[int, ...]] = {}
    port_anchor: dict[str, int] = {}
    for port in gadget.ports:
        shared = None
        if port.shared_external:
            shared = h.add_vertex()
            anchors.append(shared)
            port_anchor[port.name] = shared
        realized = []
        for attach in port.edges:
            ext_needed = d - len(attach) - (1 if shared is not None else 0)
            ext = h.add_vertices(ext_needed)
            anchors.extend(ext)
            slots = [vmap[v] for v in attach]
            if shared is not None:
                slots.append(shared)
            realized.append(h.add_edge((*slots, *ext)))
        port_edges[port.name] = tuple(realized)
    if anchors:
        # k parallel filler edges per anchor pin every anchor (and the
        # fillers themselves) at degree >= k no matter what is removed
        pumps = h.add_vertices(d - 1)
        for a in anchors:
            for _ in range(k):
                h.add_edge((a, *pumps))
    return Harness(
        graph=h,
        k=k,
        block_vertices=frozenset(vmap.values()),
        port_edges=port_edges,
        port_anchor=port_anchor,
        vmap=vmap,
        emap=emap,
    )


def _surviving_block(
    harness: Harness,
    removed_edges: tuple[int, ...] = (),
    removed_vertices: tuple[int, ...] = (),
) -> frozenset[int]:
    g = harness.graph.copy()
    for e in removed_edges:
        g.remove_edge(e)
    for v in removed_vertices:
        g.remove_vertex(v)
    return frozenset(k_core(g, harness.k).core_vertices) & harness.block_vertices


def _subset_pool(n: int, exhaustive_limit: int, tag: int):
    """All bitmasks of n items, or a seeded sample including both extremes."""
    if n <= exhaustive_limit or 2**n <= _SAMPLED_SUBSETS:
        return list(range(2**n))
    rng = random.Random(0x5EED ^ tag)
    masks = {0, 2**n - 1}
    while len(masks) < _SAMPLED_SUBSETS:
        masks.add(rng.randrange(2**n))
    return sorted(masks)


def _mask_edges(harness: Harness, names: list[str], mask: int) -> tuple[int, ...]:
    removed: list[int] = []
    for i, name in enumerate(names):
        if mask >> i & 1:
            removed.extend(harness.port_edges[name])
    return tuple(removed)


def _report_params(gadget: Gadget) -> dict[str, int]:
    """Gadget params plus a record of whether parallel edges were produced
    (the data model permits them; the builders happen not to need any)."""
    counts = Counter(frozenset(vs) for vs in gadget.graph.edges.values())
    parallel = sum(c - 1 for c in counts.values() if c > 1)
    return {**gadget.params, "parallel_edges": parallel}


# -- checkers -----------------------------------------------------------------


def check_ck_properties(gadget: Gadget) -> GadgetReport:
    """Peel-based audit of the edge-replacement gadget.

    (a) every internal vertex has degree >= k with both ports anchored;
    (b) removing the u anchor (or the v anchor) empties the gadget's
    k-core; (c) with both anchors intact nothing peels.
    """
    harness = build_harness(gadget)
    k = harness.k
    checks = []
    low = sorted(
        (v, harness.graph.degree(v)) for v in harness.block_vertices if harness.graph.degree(v) < k
    )
    checks.append(
        CheckResult("min_internal_degree", not low, f"low_degree={low}" if low else "")
    )
    surv = _surviving_block(harness)
    peeled = sorted(harness.block_vertices - surv)
    checks.append(
        CheckResult(
            "unpeelable_with_both_ports",
            surv == harness.block_vertices,
            f"peeled={peeled}" if peeled else "",
        )
    )
    for name in ("u", "v"):
        surv = _surviving_block(harness, removed_vertices=(harness.port_anchor[name],))
        checks.append(
            CheckResult(
                f"peels_when_{name}_removed",
                not surv,
                f"survivors={sorted(surv)}" if surv else "",
            )
        )
    return GadgetReport("ck", _report_params(gadget), tuple(checks))


def check_b_block(gadget: Gadget) -> GadgetReport:
    """(a) nothing peels with every neighboring edge anchored; (b) removing
    any single neighboring edge fully peels the block."""
    harness = build_harness(gadget)
    checks = []
    surv = _surviving_block(harness)
    peeled = sorted(harness.block_vertices - surv)
    checks.append(
        CheckResult(
            "unpeelable_with_all_ports",
            surv == harness.block_vertices,
            f"peeled={peeled}" if peeled else "",
        )
    )
    for port in gadget.ports:
        surv = _surviving_block(harness, removed_edges=harness.port_edges[port.name])
        checks.append(
            CheckResult(
                f"peels_without_{port.name}",
                not surv,
                f"removed={port.name} survivors={sorted(surv)}" if surv else "",
            )
        )
    return GadgetReport(gadget.kind, _report_params(gadget), tuple(checks))


def check_stable_block(gadget: Gadget) -> GadgetReport:
    """Stable-block contract:

    (a) with every neighboring edge present nothing peels, and no proper
    removal of neighboring edges fully peels the block (exhaustive up to
    degree 10, seeded sample above); (b) removing all of them fully peels
    it; (c) stashing any recorded E* edge fully peels it with all
    neighboring edges still present.
    """
    harness = build_harness(gadget)
    names = [p.name for p in gadget.ports]
    m = len(names)
    checks = []
    surv = _surviving_block(harness)
    peeled = sorted(harness.block_vertices - surv)
    checks.append(
        CheckResult(
            "unpeelable_with_all_ports",
            surv == harness.block_vertices,
            f"peeled={peeled}" if peeled else "",
        )
    )
    witness = ""
    for mask in _subset_pool(m, PARTIAL_REMOVAL_EXHAUSTIVE_LIMIT, m):
        if mask == 2**m - 1:
            continue
        if not _surviving_block(harness, removed_edges=_mask_edges(harness, names, mask)):
            removed = [names[i] for i in range(m) if mask >> i & 1]
            witness = f"fully_peeled_with_ports_removed={removed}"
            break
    checks.append(CheckResult("survives_partial_port_removal", not witness, witness))
    surv = _surviving_block(harness, removed_edges=_mask_edges(harness, names, 2**m - 1))
    checks.append(
        CheckResult(
            "peels_with_all_ports_removed",
            not surv,
            f"survivors={sorted(surv)}" if surv else "",
        )
    )
    for e in sorted(gadget.estar):
        surv = _surviving_block(harness, removed_edges=(harness.emap[e],))
        checks.append(
            CheckResult(
                f"estar_{e}_peels",
                not surv,
                f"stash_edge={e} survivors={sorted(surv)}" if surv else "",
            )
        )
    return GadgetReport(gadget.kind, _report_params(gadget), tuple(checks))


def check_pk_gadget(gadget: Gadget) -> GadgetReport:
    """Peel/stash simulation contract of the per-vertex wrapper.

    With no internal stash, the gadget fully peels if and only if fewer
    than k of its neighboring edges remain (exhaustive over subsets for
    delta <= 5); stashing any E* edge fully peels it regardless.
    """
    harness = build_harness(gadget)
    k = gadget.params["k"]
    names = [p.name for p in gadget.ports]
    delta = len(names)
    checks = []
    witness = ""
    for mask in _subset_pool(delta, PK_SUBSET_EXHAUSTIVE_LIMIT, 0xBD ^ delta):
        removed_count = bin(mask).count("1")
        surv = _surviving_block(harness, removed_edges=_mask_edges(harness, names, mask))
        expect_peel = delta - removed_count < k
        if (not surv) != expect_peel:
            removed = [names[i] for i in range(delta) if mask >> i & 1]
            witness = f"removed={removed} expected_peel={expect_peel} survivors={sorted(surv)}"
            break
    checks.append(CheckResult("peels_iff_under_k_ports", not witness, witness))
    for e in sorted(gadget.estar):
        surv = _surviving_block(harness, removed_edges=(harness.emap[e],))
        checks.append(
            CheckResult(
                f"estar_{e}_peels",
                not surv,
                f"stash_edge={e} survivors={sorted(surv)}" if surv else "",
            )
        )
    return GadgetReport("pk", _report_params(gadget), tuple(checks))


# -- parameter grid -----------------------------------------------------------

GRID_CK_K = range(2, 7)
GRID_BLOCK_K = range(3, 7)
GRID_D = range(2, 5)
GRID_M = range(1, 8)
GRID_P = range(1, 6)


def _grid_points() -> list:
    """One zero-argument build-and-check job per grid parameter point."""

    def job(check, build, *args):
        return lambda: check(build(*args))

    points = []
    for k in GRID_CK_K:
        for d in GRID_D:
            points.append(job(check_ck_properties, build_ck_gadget, k, d))
    for b in (2, 3):
        for k in GRID_BLOCK_K:
            for d in GRID_D:
                points.append(job(check_b_block, build_b_block, b, k, d))
    for k in GRID_BLOCK_K:
        for d in GRID_D:
            for m in range(1, k):
                points.append(job(check_stable_block, build_simple_stable_block, m, k, d))
            for m in GRID_M:
                points.append(job(check_stable_block, build_stable_block, m, k, d))
    for d in (3, 4):
        for p in GRID_P:
            points.append(job(check_stable_block, build_tree_stable_block, p, d))
    return points


def run_gadget_grid(max_workers: int = 1) -> list[GadgetReport]:
    """Build and check every gadget family over the CI parameter grid.

    Points are independent, so they fan out over ``max_workers`` threads;
    report order is the grid order either way.
    """
    points = _grid_points()
    if max_workers <= 1:
        return [point() for point in points]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda point: point(), points))
