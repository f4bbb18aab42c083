"""Combine two graphs plus a node mapping into one classified diff graph.

Mapped pairs collapse into single nodes carrying both attribute maps;
everything else is kept with an origin class telling which input it came
from. Suggestion edges ride along re-pointed at merged ids. An optional
post-pass condenses groups of matched sibling leaves into supernodes to
reduce overplotting.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .errors import InconsistentMapping
from .mapping import NodeMapping, SuggestionEdge
from .model import AttrMap, BomGraph, NodeId
from .similarity import MatchConfig


class Origin(str, Enum):
    BOTH = "BOTH"
    ONLY_A = "ONLY_A"
    ONLY_B = "ONLY_B"


# Merged-id shapes. The joiner between a mapped pair's two source ids is a
# literal "≡"; one-sided nodes carry their side as a prefix.
PAIR_JOINER = "≡"
PREFIX_A = "A:"
PREFIX_B = "B:"
SUPER_PREFIX = "super:"


@dataclass
class MergedNode:
    id: str
    origin: Origin
    attrs_a: AttrMap | None = None
    attrs_b: AttrMap | None = None
    members: list[str] | None = None
    member_count: int | None = None

    @property
    def is_supernode(self) -> bool:
        return self.members is not None


@dataclass(frozen=True)
class Provenance:
    label_a: str
    label_b: str
    config: MatchConfig


@dataclass
class MergedGraph:
    nodes: dict[str, MergedNode]
    edges: dict[tuple[str, str], Origin]
    suggestions: list[SuggestionEdge]
    provenance: Provenance

    def node_counts(self) -> dict[str, int]:
        counts = {origin.value: 0 for origin in Origin}
        for node in self.nodes.values():
            counts[node.origin.value] += 1
        return counts

    def edge_counts(self) -> dict[str, int]:
        counts = {origin.value: 0 for origin in Origin}
        for origin in self.edges.values():
            counts[origin.value] += 1
        return counts

    def undirected_neighbors(self, node_id: str) -> list[str]:
        neighbors = set()
        for source, target in self.edges:
            if source == node_id:
                neighbors.add(target)
            elif target == node_id:
                neighbors.add(source)
        return sorted(neighbors)


def merge_graphs(
    graph_a: BomGraph,
    graph_b: BomGraph,
    mapping: NodeMapping,
    suggestions: list[SuggestionEdge] | None = None,
) -> MergedGraph:
    """Build the classified union graph from the two inputs and the mapping."""
    suggestions = suggestions or []
    for node_a, (node_b, _) in mapping.pairs.items():
        if node_a not in graph_a.nodes:
            raise InconsistentMapping(f"mapping source {node_a!r} is not in the first graph")
        if node_b not in graph_b.nodes:
            raise InconsistentMapping(f"mapping target {node_b!r} is not in the second graph")
    targets = mapping.targets()
    if len(targets) != len(mapping.pairs):
        raise InconsistentMapping("mapping is not injective")

    merged_id_a: dict[NodeId, str] = {}
    merged_id_b: dict[NodeId, str] = {}
    nodes: dict[str, MergedNode] = {}

    for node_a, (node_b, _) in mapping.pairs.items():
        merged = f"{node_a}{PAIR_JOINER}{node_b}"
        merged_id_a[node_a] = merged
        merged_id_b[node_b] = merged
        nodes[merged] = MergedNode(
            id=merged,
            origin=Origin.BOTH,
            attrs_a=graph_a.nodes[node_a],
            attrs_b=graph_b.nodes[node_b],
        )
    for node_a in graph_a.nodes:
        if node_a in merged_id_a:
            continue
        merged = f"{PREFIX_A}{node_a}"
        merged_id_a[node_a] = merged
        nodes[merged] = MergedNode(id=merged, origin=Origin.ONLY_A, attrs_a=graph_a.nodes[node_a])
    for node_b in graph_b.nodes:
        if node_b in merged_id_b:
            continue
        merged = f"{PREFIX_B}{node_b}"
        merged_id_b[node_b] = merged
        nodes[merged] = MergedNode(id=merged, origin=Origin.ONLY_B, attrs_b=graph_b.nodes[node_b])

    edges_a = {(merged_id_a[s], merged_id_a[t]) for s, t in graph_a.edges}
    edges_b = {(merged_id_b[s], merged_id_b[t]) for s, t in graph_b.edges}
    edges: dict[tuple[str, str], Origin] = {}
    for edge in edges_a & edges_b:
        edges[edge] = Origin.BOTH
    for edge in edges_a - edges_b:
        edges[edge] = Origin.ONLY_A
    for edge in edges_b - edges_a:
        edges[edge] = Origin.ONLY_B

    repointed: list[SuggestionEdge] = []
    for suggestion in suggestions:
        if suggestion.a not in graph_a.nodes or suggestion.b not in graph_b.nodes:
            raise InconsistentMapping(
                f"suggestion ({suggestion.a!r}, {suggestion.b!r}) references unknown nodes"
            )
        if suggestion.a in mapping.pairs or suggestion.b in targets:
            raise InconsistentMapping(
                f"suggestion ({suggestion.a!r}, {suggestion.b!r}) touches a mapped node"
            )
        repointed.append(
            replace(suggestion, a=merged_id_a[suggestion.a], b=merged_id_b[suggestion.b])
        )

    return MergedGraph(
        nodes=nodes,
        edges=edges,
        suggestions=repointed,
        provenance=Provenance(graph_a.label, graph_b.label, mapping.config_echo),
    )


def collapse_leaves(merged: MergedGraph) -> MergedGraph:
    """Replace groups of >= 2 matched leaf siblings with one supernode each.

    A leaf qualifies when it has origin BOTH, merged degree 1, is not an
    endpoint of any suggestion, and is not itself a supernode. The group
    key is the single neighbor; the supernode attaches to it by one BOTH
    edge. Idempotent: a second pass finds no group of two.
    """
    adjacency: dict[str, set[str]] = {node_id: set() for node_id in merged.nodes}
    for source, target in merged.edges:
        adjacency[source].add(target)
        adjacency[target].add(source)
    suggestion_endpoints = {s.a for s in merged.suggestions} | {s.b for s in merged.suggestions}

    def collapsible(node_id: str) -> bool:
        node = merged.nodes[node_id]
        return (
            node.origin is Origin.BOTH
            and not node.is_supernode
            and len(adjacency[node_id]) == 1
            and node_id not in suggestion_endpoints
        )

    groups: dict[str, list[str]] = {}
    for parent in sorted(merged.nodes):
        leaves = sorted(n for n in adjacency[parent] if collapsible(n))
        if len(leaves) >= 2:
            groups[parent] = leaves

    if not groups:
        return MergedGraph(
            nodes=dict(merged.nodes),
            edges=dict(merged.edges),
            suggestions=list(merged.suggestions),
            provenance=merged.provenance,
        )

    removed = {leaf for leaves in groups.values() for leaf in leaves}
    nodes = {node_id: node for node_id, node in merged.nodes.items() if node_id not in removed}
    edges = {
        edge: origin
        for edge, origin in merged.edges.items()
        if edge[0] not in removed and edge[1] not in removed
    }
    for parent, leaves in groups.items():
        super_id = f"{SUPER_PREFIX}{parent}:{len(leaves)}"
        nodes[super_id] = MergedNode(
            id=super_id,
            origin=Origin.BOTH,
            members=leaves,
            member_count=len(leaves),
        )
        edges[(parent, super_id)] = Origin.BOTH

    return MergedGraph(
        nodes=nodes,
        edges=edges,
        suggestions=list(merged.suggestions),
        provenance=merged.provenance,
    )
