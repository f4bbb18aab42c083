"""Attributed-graph data model shared by all other modules.

A :class:`BomGraph` holds one bill of materials: each component is a node
keyed by a unique string id carrying a flat string->string attribute map,
and each relationship is a directed edge. Edges are stored directed, but
matching and merging treat adjacency as undirected.
"""

from __future__ import annotations

from .errors import DuplicateNodeId, SelfLoop, UnknownEndpoint, UnknownNode

NodeId = str
AttrMap = dict[str, str]


def clean_attrs(attrs: dict[str, str]) -> AttrMap:
    """Validate an attribute map and normalize its key order to lexicographic."""
    for key, value in attrs.items():
        if not isinstance(key, str) or not key:
            raise ValueError(f"attribute keys must be non-empty strings, got {key!r}")
        if not isinstance(value, str):
            raise ValueError(f"attribute values must be strings, got {value!r} for key {key!r}")
    return {key: attrs[key] for key in sorted(attrs)}


class BomGraph:
    """A directed graph with string-attributed nodes.

    Graphs are built once via :meth:`add_node`/:meth:`add_edge` and treated
    as immutable afterwards; nothing in the pipeline mutates a graph it did
    not construct.
    """

    def __init__(self, label: str = "") -> None:
        self.label = label
        self.nodes: dict[NodeId, AttrMap] = {}
        self.edges: set[tuple[NodeId, NodeId]] = set()
        self._adj: dict[NodeId, set[NodeId]] = {}

    def add_node(self, node_id: NodeId, attrs: dict[str, str] | None = None) -> None:
        if not isinstance(node_id, str) or not node_id:
            raise ValueError(f"node id must be a non-empty string, got {node_id!r}")
        if node_id in self.nodes:
            raise DuplicateNodeId(f"node {node_id!r} already exists")
        self.nodes[node_id] = clean_attrs(attrs or {})
        self._adj[node_id] = set()

    def add_edge(self, source: NodeId, target: NodeId) -> None:
        """Record a directed edge once; re-adding an existing edge is a no-op."""
        for endpoint in (source, target):
            if endpoint not in self.nodes:
                raise UnknownEndpoint(f"edge endpoint {endpoint!r} is not a node")
        if source == target:
            raise SelfLoop(f"self-loop on {source!r} rejected")
        self.edges.add((source, target))
        self._adj[source].add(target)
        self._adj[target].add(source)

    def undirected_neighbors(self, node_id: NodeId) -> list[NodeId]:
        """All nodes adjacent via an edge in either direction, sorted ascending."""
        if node_id not in self.nodes:
            raise UnknownNode(f"node {node_id!r} is not in the graph")
        return sorted(self._adj[node_id])

    def degree(self, node_id: NodeId) -> int:
        """Number of distinct undirected neighbors."""
        if node_id not in self.nodes:
            raise UnknownNode(f"node {node_id!r} is not in the graph")
        return len(self._adj[node_id])

    def __eq__(self, other: object) -> bool:
        # Label is display-only and excluded from equality.
        if not isinstance(other, BomGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __repr__(self) -> str:
        return f"BomGraph(label={self.label!r}, nodes={len(self.nodes)}, edges={len(self.edges)})"
