"""Whole-instance translators between cover and stash problems.

Two directions are implemented, each with certificate lifting so results
can be checked end to end on small instances:

* vertex cover -> k-vertex-stash: every edge (u, v) of a standard graph is
  replaced by a fresh edge-replacement gadget wired to u and v; a stash of
  the output can be normalized onto original vertices without growing.
* k-vertex-stash -> k-edge-stash: every vertex v is replaced by a
  per-vertex wrapper gadget whose designated stashable edge simulates
  stashing v; stashes push forward with equal size and lift back without
  growing.

Reduction maps carry the original and reduced instances plus the id
correspondences, and round-trip through a text sidecar format (see
``serialize_map``) so the CLI can lift certificates from files alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractViolationError, ParameterError, ParseError, UnsupportedCaseError
from .gadgets import (
    GadgetReport,
    build_ck_gadget,
    build_pk_gadget,
    check_pk_gadget,
    embed_graph,
)
from .hypergraph import Hypergraph, parse, serialize
from .peeling import k_core_after


@dataclass(frozen=True)
class CkInstance:
    """One edge-replacement gadget inside a cover-reduction output."""

    orig_edge: int
    u: int
    v: int
    internal_vertices: frozenset[int]
    edges: frozenset[int]


@dataclass(frozen=True)
class PkInstance:
    """One per-vertex gadget inside a vertex-to-edge-stash output."""

    orig_vertex: int
    primary: int
    vertices: frozenset[int]
    internal_edges: frozenset[int]
    estar: frozenset[int]
    # (original incident edge id, attach vertex of its neighboring edge)
    ports: tuple[tuple[int, int], ...]


@dataclass
class ReductionMap:
    """Correspondence between an original instance and its reduction.

    ``vertex_map`` sends an original vertex to its image (cover direction)
    or to its gadget's primary node (stash direction).  ``edge_map`` sends
    an original edge to the reduced edge ids it became.  ``owner`` assigns
    every reduced edge to one original vertex (neighboring edges go to the
    lowest-id endpoint), which is what makes lifted stashes never grow.
    Maps parsed back from sidecar files keep the operational fields but
    not the per-gadget ``ck``/``pk`` audit records.
    """

    direction: str  # "vc_to_vs" | "vs_to_es"
    k: int
    d: int
    original: Hypergraph
    reduced: Hypergraph
    vertex_map: dict[int, int]
    edge_map: dict[int, tuple[int, ...]]
    estar_pick: dict[int, int] = field(default_factory=dict)
    owner: dict[int, int] = field(default_factory=dict)
    gadget_of: dict[int, tuple[int, int]] = field(default_factory=dict)
    ck: dict[int, CkInstance] = field(default_factory=dict)
    pk: dict[int, PkInstance] = field(default_factory=dict)


# -- vertex cover -> k-vertex-stash -------------------------------------------


def reduce_vc_to_vertex_stash(g: Hypergraph, k: int, d: int) -> tuple[Hypergraph, ReductionMap]:
    """Build the d-uniform instance whose minimum k-vertex-stash equals the
    minimum vertex cover of the standard graph g."""
    if g.d != 2:
        raise ParameterError("vertex cover instances are standard graphs (d=2)")
    if k < 2 or d < 2:
        raise ParameterError(f"reduction needs k >= 2 and d >= 2, got k={k}, d={d}")
    out = Hypergraph(d)
    image = {v: out.add_vertex() for v in sorted(g.vertices)}
    gadget = build_ck_gadget(k, d)
    ck: dict[int, CkInstance] = {}
    gadget_of: dict[int, tuple[int, int]] = {}
    edge_map: dict[int, tuple[int, ...]] = {}
    for e in sorted(g.edges):
        u, v = g.edge_vertices(e)
        vmap, emap = embed_graph(gadget.graph, out)
        edges = list(emap.values())
        for port, endpoint in (("u", image[u]), ("v", image[v])):
            spec = next(p for p in gadget.ports if p.name == port)
            for attach in spec.edges:
                edges.append(out.add_edge((endpoint, *(vmap[a] for a in attach))))
        internal = frozenset(vmap.values())
        for w in internal:
            gadget_of[w] = (image[u], image[v])
        ck[e] = CkInstance(e, image[u], image[v], internal, frozenset(edges))
        edge_map[e] = tuple(edges)
    return out, ReductionMap(
        direction="vc_to_vs",
        k=k,
        d=d,
        original=g.copy(),
        reduced=out,
        vertex_map=image,
        edge_map=edge_map,
        gadget_of=gadget_of,
        ck=ck,
    )


def normalize_stash(reduced: Hypergraph, rmap: ReductionMap, stash) -> frozenset[int]:
    """Rewrite a valid vertex stash of the reduced instance so it uses only
    images of original vertices, never growing it.

    Each gadget-internal vertex is replaced by the image of that gadget's
    first endpoint (the deterministic choice of the two that both work).
    """
    if rmap.direction != "vc_to_vs":
        raise ParameterError("normalize_stash applies to cover-reduction maps")
    s = frozenset(stash)
    for w in s:
        if not reduced.has_vertex(w):
            raise ContractViolationError(f"stash vertex {w} is not in the reduced instance")
    if not k_core_after(reduced, rmap.k, stash_vertices=s).core_empty:
        raise ContractViolationError("stash does not make the reduced instance peelable")
    images = set(rmap.vertex_map.values())
    out = set()
    for w in s:
        out.add(w if w in images else rmap.gadget_of[w][0])
    assert len(out) <= len(s)
    assert k_core_after(reduced, rmap.k, stash_vertices=out).core_empty
    return frozenset(out)


# -- k-vertex-stash -> k-edge-stash -------------------------------------------


def reduce_vertex_to_edge_stash(g: Hypergraph, k: int, d: int) -> tuple[Hypergraph, ReductionMap]:
    """Build f(g): the d-uniform instance whose minimum k-edge-stash equals
    the minimum k-vertex-stash of g.

    Covers k >= 3 (any d >= 2) and k = 2 with d >= 3; the remaining case
    k = 2, d = 2 is rejected because ``two_edge_stash_standard`` solves it
    outright.
    """
    if k == 2 and d == 2:
        raise UnsupportedCaseError(
            "k=2, d=2 edge stashing is polynomial; use two_edge_stash_standard"
        )
    if not ((k >= 3 and d >= 2) or (k == 2 and d >= 3)):
        raise ParameterError(f"reduction needs k >= 3, or k = 2 with d >= 3; got k={k}, d={d}")
    if g.d != d:
        raise ParameterError(f"instance arity {g.d} does not match requested d={d}")
    out = Hypergraph(d)
    vertex_map: dict[int, int] = {}
    estar_pick: dict[int, int] = {}
    owner: dict[int, int] = {}
    pk: dict[int, PkInstance] = {}
    attach_of: dict[tuple[int, int], int] = {}
    for v in sorted(g.vertices):
        incident = sorted(g.incident_edges(v))
        gadget = build_pk_gadget(len(incident), k, d)
        vmap, emap = embed_graph(gadget.graph, out)
        primary = vmap[gadget.meta["primary"]]  # type: ignore[index]
        for fe in emap.values():
            owner[fe] = v
        estar = frozenset(emap[e] for e in gadget.estar)
        ports = []
        for i, e in enumerate(incident):
            attach = vmap[gadget.ports[i].edges[0][0]]
            attach_of[(e, v)] = attach
            ports.append((e, attach))
        vertex_map[v] = primary
        estar_pick[v] = min(estar)
        pk[v] = PkInstance(
            orig_vertex=v,
            primary=primary,
            vertices=frozenset(vmap.values()),
            internal_edges=frozenset(emap.values()),
            estar=estar,
            ports=tuple(ports),
        )
    edge_map: dict[int, tuple[int, ...]] = {}
    for e in sorted(g.edges):
        members = g.edge_vertices(e)
        shared = out.add_edge(tuple(attach_of[(e, w)] for w in members))
        edge_map[e] = (shared,)
        owner[shared] = min(members)
    return out, ReductionMap(
        direction="vs_to_es",
        k=k,
        d=d,
        original=g.copy(),
        reduced=out,
        vertex_map=vertex_map,
        edge_map=edge_map,
        estar_pick=estar_pick,
        owner=owner,
        pk=pk,
    )


def push_vertex_stash(g: Hypergraph, rmap: ReductionMap, stash) -> frozenset[int]:
    """Translate a valid vertex stash of g into an equal-size edge stash of
    the reduced instance, picking each gadget's lowest-id E* edge."""
    if rmap.direction != "vs_to_es":
        raise ParameterError("push_vertex_stash applies to stash-reduction maps")
    s = frozenset(stash)
    for v in s:
        if not g.has_vertex(v):
            raise ContractViolationError(f"stash vertex {v} is not in the original instance")
    if not k_core_after(g, rmap.k, stash_vertices=s).core_empty:
        raise ContractViolationError("stash does not make the original instance peelable")
    pushed = frozenset(rmap.estar_pick[v] for v in s)
    assert len(pushed) == len(s)
    assert k_core_after(rmap.reduced, rmap.k, stash_edges=pushed).core_empty
    return pushed


def lift_edge_stash(reduced: Hypergraph, rmap: ReductionMap, stash) -> frozenset[int]:
    """Translate a valid edge stash of the reduced instance into a vertex
    stash of the original that is never larger: every stashed edge charges
    the original vertex owning it."""
    if rmap.direction != "vs_to_es":
        raise ParameterError("lift_edge_stash applies to stash-reduction maps")
    s = frozenset(stash)
    for e in s:
        if not reduced.has_edge(e):
            raise ContractViolationError(f"stash edge {e} is not in the reduced instance")
    if not k_core_after(reduced, rmap.k, stash_edges=s).core_empty:
        raise ContractViolationError("stash does not make the reduced instance peelable")
    lifted = frozenset(rmap.owner[e] for e in s)
    assert len(lifted) <= len(s)
    assert k_core_after(rmap.original, rmap.k, stash_vertices=lifted).core_empty
    return lifted


# -- audits -------------------------------------------------------------------


def audit_p1(rmap: ReductionMap) -> list[str]:
    """Structural audit of the stash reduction's wiring.

    Checks that each gadget has exactly one neighboring edge per original
    incident edge and that every neighboring edge joins exactly the attach
    vertices of its original edge's endpoint gadgets.  Returns violation
    descriptions; empty means the audit passed.
    """
    if rmap.direction != "vs_to_es":
        raise ParameterError("audit_p1 applies to stash-reduction maps")
    g = rmap.original
    problems = []
    for v in sorted(g.vertices):
        inst = rmap.pk[v]
        expected = sorted(g.incident_edges(v))
        got = sorted(e for e, _ in inst.ports)
        if got != expected:
            problems.append(f"vertex {v}: ports {got} != incident edges {expected}")
    attach = {v: dict(rmap.pk[v].ports) for v in g.vertices}
    for e in sorted(g.edges):
        members = g.edge_vertices(e)
        shared = rmap.edge_map[e][0]
        want = {attach[w][e] for w in members}
        have = set(rmap.reduced.edge_vertices(shared))
        if want != have:
            problems.append(f"edge {e}: neighboring edge {shared} joins {have}, expected {want}")
    return problems


def audit_pk_properties(rmap: ReductionMap) -> list[GadgetReport]:
    """Re-run the standalone wrapper-gadget checks for every distinct degree
    instantiated by a stash reduction."""
    if rmap.direction != "vs_to_es":
        raise ParameterError("audit_pk_properties applies to stash-reduction maps")
    degrees = sorted({len(inst.ports) for inst in rmap.pk.values()})
    return [check_pk_gadget(build_pk_gadget(delta, rmap.k, rmap.d)) for delta in degrees]


# -- sidecar text format -------------------------------------------------------


def _require_canonical(g: Hypergraph, label: str) -> None:
    if sorted(g.vertices) != list(range(g.num_vertices)) or sorted(g.edges) != list(
        range(g.num_edges)
    ):
        raise ParameterError(f"map serialization requires canonical ids in the {label} instance")


def serialize_map(rmap: ReductionMap) -> str:
    """Sidecar text form of a reduction map, embedding both instances."""
    _require_canonical(rmap.original, "original")
    _require_canonical(rmap.reduced, "reduced")
    tag = "vc" if rmap.direction == "vc_to_vs" else "vstash"
    lines = [f"M {tag} {rmap.k} {rmap.d}"]
    if tag == "vstash" and rmap.k == 2:
        lines.append(
            "# note: each gadget's d-2 per-port filler vertices are shared between"
        )
        lines.append(
            "# its primary-side edge and the stable block's neighboring edge"
        )
    for label, g in (("orig", rmap.original), ("reduced", rmap.reduced)):
        lines.append(f"G {label}")
        lines.extend(serialize(g).rstrip("\n").split("\n"))
        lines.append("G end")
    if tag == "vc":
        for v in sorted(rmap.vertex_map):
            lines.append(f"M v {v} {rmap.vertex_map[v]}")
        for w in sorted(rmap.gadget_of):
            u, x = rmap.gadget_of[w]
            lines.append(f"M g {w} {u} {x}")
    else:
        for v in sorted(rmap.vertex_map):
            lines.append(f"M v {v} {rmap.vertex_map[v]} {rmap.estar_pick[v]}")
        for e in sorted(rmap.owner):
            lines.append(f"M e {e} {rmap.owner[e]}")
    for e in sorted(rmap.edge_map):
        ids = " ".join(str(x) for x in rmap.edge_map[e])
        lines.append(f"M n {e} {ids}")
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> ReductionMap:
    """Rebuild a reduction map from its sidecar text (audit records are not
    restored; lifting and normalization work from files alone)."""
    header = None
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    vertex_map: dict[int, int] = {}
    estar_pick: dict[int, int] = {}
    owner: dict[int, int] = {}
    gadget_of: dict[int, tuple[int, int]] = {}
    edge_map: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if current is not None:
            if fields[0] == "G" and fields[1:] == ["end"]:
                current = None
            else:
                current.append(line)
            continue
        if fields[0] == "G":
            if len(fields) != 2 or fields[1] not in ("orig", "reduced"):
                raise ParseError(f"expected 'G orig|reduced', got {raw!r}", lineno)
            current = sections.setdefault(fields[1], [])
            continue
        if fields[0] != "M":
            raise ParseError(f"unexpected line {raw!r}", lineno)
        if header is None:
            if len(fields) != 4 or fields[1] not in ("vc", "vstash"):
                raise ParseError(f"expected 'M vc|vstash <k> <d>', got {raw!r}", lineno)
            header = (fields[1], int(fields[2]), int(fields[3]))
            continue
        kind, args = fields[1], [int(x) for x in fields[2:]]
        if kind == "v" and header[0] == "vc" and len(args) == 2:
            vertex_map[args[0]] = args[1]
        elif kind == "v" and header[0] == "vstash" and len(args) == 3:
            vertex_map[args[0]] = args[1]
            estar_pick[args[0]] = args[2]
        elif kind == "g" and len(args) == 3:
            gadget_of[args[0]] = (args[1], args[2])
        elif kind == "e" and len(args) == 2:
            owner[args[0]] = args[1]
        elif kind == "n" and len(args) >= 2:
            edge_map[args[0]] = tuple(args[1:])
        else:
            raise ParseError(f"malformed map line {raw!r}", lineno)
    if header is None:
        raise ParseError("missing 'M vc|vstash <k> <d>' header", 1)
    if "orig" not in sections or "reduced" not in sections:
        raise ParseError("map file must embed both G orig and G reduced sections", 1)
    tag, k, d = header
    return ReductionMap(
        direction="vc_to_vs" if tag == "vc" else "vs_to_es",
        k=k,
        d=d,
        original=parse("\n".join(sections["orig"]) + "\n"),
        reduced=parse("\n".join(sections["reduced"]) + "\n"),
        vertex_map=vertex_map,
        edge_map=edge_map,
        estar_pick=estar_pick,
        owner=owner,
        gadget_of=gadget_of,
    )
