"""k-core peeling on d-uniform hypergraphs, minimum vertex/edge stashes,
and executable constructions of the stash-hardness reduction gadgets."""

from .errors import (
    CapExceededError,
    ContractViolationError,
    InvalidArityError,
    NotFoundError,
    ParameterError,
    ParseError,
    StashpeelError,
    UnsupportedCaseError,
)
from .hypergraph import Hypergraph, format_stash, parse, parse_stash, serialize
from .peeling import PeelTrace, core_subgraph, is_k_peelable, k_core, k_core_after, verify_trace
from .stash_solvers import (
    CyclomaticCertificate,
    StashResult,
    greedy_stash,
    min_edge_stash_exact,
    min_vertex_cover_exact,
    min_vertex_stash_exact,
    two_edge_stash_standard,
)
from .gadgets import (
    Gadget,
    GadgetReport,
    Port,
    build_b_block,
    build_ck_gadget,
    build_pk_gadget,
    build_simple_stable_block,
    build_stable_block,
    build_tree_stable_block,
    check_b_block,
    check_ck_properties,
    check_pk_gadget,
    check_stable_block,
    run_gadget_grid,
)
from .reductions import (
    ReductionMap,
    audit_p1,
    audit_pk_properties,
    lift_edge_stash,
    normalize_stash,
    parse_map,
    push_vertex_stash,
    reduce_vc_to_vertex_stash,
    reduce_vertex_to_edge_stash,
    serialize_map,
)
from .cli import gen_random

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ContractViolationError",
    "CyclomaticCertificate",
    "Gadget",
    "GadgetReport",
    "Hypergraph",
    "InvalidArityError",
    "NotFoundError",
    "ParameterError",
    "ParseError",
    "PeelTrace",
    "Port",
    "ReductionMap",
    "StashResult",
    "StashpeelError",
    "UnsupportedCaseError",
    "audit_p1",
    "audit_pk_properties",
    "build_b_block",
    "build_ck_gadget",
    "build_pk_gadget",
    "build_simple_stable_block",
    "build_stable_block",
    "build_tree_stable_block",
    "check_b_block",
    "check_ck_properties",
    "check_pk_gadget",
    "check_stable_block",
    "core_subgraph",
    "format_stash",
    "gen_random",
    "greedy_stash",
    "is_k_peelable",
    "k_core",
    "k_core_after",
    "lift_edge_stash",
    "min_edge_stash_exact",
    "min_vertex_cover_exact",
    "min_vertex_stash_exact",
    "normalize_stash",
    "parse",
    "parse_map",
    "parse_stash",
    "push_vertex_stash",
    "reduce_vc_to_vertex_stash",
    "reduce_vertex_to_edge_stash",
    "run_gadget_grid",
    "serialize",
    "serialize_map",
    "two_edge_stash_standard",
    "verify_trace",
]
