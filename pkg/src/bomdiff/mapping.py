"""Node correspondence between two graphs via anchored depth-first matching.

Starting from a seed pair known to be equal, the first graph is traversed
depth-first; each unmapped node is scored against the not-yet-mapped
neighbors of its mapped anchors' counterparts, and the best candidate at
or above the accept threshold is taken. Traversal passes repeat with the
enlarged mapping until a pass adds no pairs, so nodes first reached ahead
of their anchors still get matched. A separate fuzzy pass proposes
non-binding suggestion edges between leftover nodes that share a mapped
anchor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoSeedFound, UnknownNode
from .model import BomGraph, NodeId
from .similarity import MatchConfig, node_score, normalize_value


@dataclass
class NodeMapping:
    """Partial injective map from nodes of graph A to nodes of graph B.

    pairs maps each matched A-node to its B-node and acceptance score.
    Except for the seed, every score is >= the config's accept_threshold.
    """

    pairs: dict[NodeId, tuple[NodeId, float]]
    seed: tuple[NodeId, NodeId]
    config_echo: MatchConfig

    def targets(self) -> set[NodeId]:
        return {target for target, _ in self.pairs.values()}


@dataclass(frozen=True)
class SuggestionEdge:
    """Candidate identity between an unmapped A-node and a free B-node."""

    a: NodeId
    b: NodeId
    score: float
    shared_anchor_count: int


def _attr_tuple(graph: BomGraph, node_id: NodeId, config: MatchConfig) -> tuple:
    values = []
    for key in config.attr_keys:
        value = graph.nodes[node_id].get(key)
        if value is not None and config.normalize:
            value = normalize_value(value)
        values.append(value)
    return tuple(values)


def find_seed(graph_a: BomGraph, graph_b: BomGraph, config: MatchConfig) -> tuple[NodeId, NodeId]:
    """Pick the starting pair: a value-tuple unique in A, unique in B, and equal.

    Among all such pairs the one with the highest degree on the A side wins;
    ties fall to the smallest A id, then the smallest B id. A configured
    seed_override short-circuits the search after an existence check.
    """
    if not graph_a.nodes or not graph_b.nodes:
        raise NoSeedFound("both graphs must be non-empty")
    if config.seed_override is not None:
        id_a, id_b = config.seed_override
        if id_a not in graph_a.nodes:
            raise UnknownNode(f"seed override {id_a!r} is not in the first graph")
        if id_b not in graph_b.nodes:
            raise UnknownNode(f"seed override {id_b!r} is not in the second graph")
        return (id_a, id_b)

    def unique_tuples(graph: BomGraph) -> dict[tuple, NodeId]:
        seen: dict[tuple, list[NodeId]] = {}
        for node_id in graph.nodes:
            seen.setdefault(_attr_tuple(graph, node_id, config), []).append(node_id)
        return {key: ids[0] for key, ids in seen.items() if len(ids) == 1}

    unique_a = unique_tuples(graph_a)
    unique_b = unique_tuples(graph_b)
    candidates = [
        (id_a, unique_b[key])
        for key, id_a in unique_a.items()
        if key in unique_b
    ]
    if not candidates:
        raise NoSeedFound(
            "no attribute tuple is unique in both graphs and equal across them; "
            "supply an explicit seed pair"
        )
    candidates.sort(key=lambda pair: (-graph_a.degree(pair[0]), pair[0], pair[1]))
    return candidates[0]


def _dfs_order(graph: BomGraph, root: NodeId) -> list[NodeId]:
    """Depth-first preorder from root, neighbors ascending, restarting at
    each unvisited node in ascending id order so disconnected parts appear."""
    visited: set[NodeId] = set()
    order: list[NodeId] = []
    for start in [root, *sorted(graph.nodes)]:
        if start in visited:
            continue
        stack = [start]
        while stack:
            node = stack.pop()
            if node in visited:
                continue
            visited.add(node)
            order.append(node)
            for neighbor in reversed(graph.undirected_neighbors(node)):
                if neighbor not in visited:
                    stack.append(neighbor)
    return order


def map_nodes(graph_a: BomGraph, graph_b: BomGraph, config: MatchConfig) -> NodeMapping:
    """Compute the partial injective node correspondence.

    Each pass walks graph A in DFS order; an unmapped node u whose mapped
    neighbors (anchors) exist draws candidates from the unmapped neighbors
    of the anchors' images in B. The best-scoring candidate at or above
    accept_threshold is accepted, preferring a candidate whose degree
    equals u's, then the smallest B id. Passes repeat until none adds a
    pair.
    """
    seed_a, seed_b = find_seed(graph_a, graph_b, config)
    seed_score = node_score(graph_a.nodes[seed_a], graph_b.nodes[seed_b], config)
    pairs: dict[NodeId, tuple[NodeId, float]] = {seed_a: (seed_b, seed_score)}
    mapped_b: set[NodeId] = {seed_b}
    order = _dfs_order(graph_a, seed_a)

    while True:
        added = 0
        for node in order:
            if node in pairs:
                continue
            anchors = [n for n in graph_a.undirected_neighbors(node) if n in pairs]
            if not anchors:
                continue
            candidates: set[NodeId] = set()
            for anchor in anchors:
                image = pairs[anchor][0]
                candidates.update(
                    c for c in graph_b.undirected_neighbors(image) if c not in mapped_b
                )
            if not candidates:
                continue
            degree = graph_a.degree(node)
            best: tuple[float, int, NodeId] | None = None
            for candidate in sorted(candidates):
                score = node_score(graph_a.nodes[node], graph_b.nodes[candidate], config)
                if score < config.accept_threshold:
                    continue
                key = (-score, 0 if graph_b.degree(candidate) == degree else 1, candidate)
                if best is None or key < best:
                    best = key
            if best is not None:
                neg_score, _, candidate = best
                pairs[node] = (candidate, -neg_score)
                mapped_b.add(candidate)
                added += 1
        if added == 0:
            break

    return NodeMapping(pairs=pairs, seed=(seed_a, seed_b), config_echo=config)


def suggest_matches(
    graph_a: BomGraph,
    graph_b: BomGraph,
    mapping: NodeMapping,
    config: MatchConfig,
) -> list[SuggestionEdge]:
    """Fuzzy second pass over the leftovers.

    Every unmapped A-node and non-target B-node sharing at least one mapped
    anchor is scored under the suggest metric; pairs at or above
    suggest_threshold are emitted, many-to-many, sorted by descending score
    then ids.
    """
    unmapped_a = sorted(set(graph_a.nodes) - set(mapping.pairs))
    free_b = sorted(set(graph_b.nodes) - mapping.targets())
    suggestions: list[SuggestionEdge] = []
    for node_a in unmapped_a:
        anchor_images = [
            mapping.pairs[n][0]
            for n in graph_a.undirected_neighbors(node_a)
            if n in mapping.pairs
        ]
        if not anchor_images:
            continue
        for node_b in free_b:
            neighbors_b = set(graph_b.undirected_neighbors(node_b))
            shared = sum(1 for image in anchor_images if image in neighbors_b)
            if shared == 0:
                continue
            score = node_score(
                graph_a.nodes[node_a],
                graph_b.nodes[node_b],
                config,
                metric=config.suggest_metric,
            )
            if score >= config.suggest_threshold:
                suggestions.append(SuggestionEdge(node_a, node_b, score, shared))
    suggestions.sort(key=lambda edge: (-edge.score, edge.a, edge.b))
    return suggestions
