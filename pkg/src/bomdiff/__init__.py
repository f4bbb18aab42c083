"""bomdiff: compare two bills of materials as attributed graphs."""

from ._version import __version__
from .errors import (
    BomDiffError,
    DuplicateNodeId,
    InconsistentMapping,
    MalformedDocument,
    NoSeedFound,
    SelfLoop,
    UnknownEndpoint,
    UnknownNode,
)
from .export import write_gml, write_html, write_report
from .ingest import IngestReport, parse_cyclonedx, parse_nodelink, write_nodelink
from .mapping import NodeMapping, SuggestionEdge, find_seed, map_nodes, suggest_matches
from .merge import MergedGraph, MergedNode, Origin, collapse_leaves, merge_graphs
from .model import BomGraph
from .similarity import MatchConfig, MetricKind, MissingAttrPolicy, node_score, string_score

__all__ = [
    "__version__",
    "BomDiffError",
    "BomGraph",
    "DuplicateNodeId",
    "InconsistentMapping",
    "IngestReport",
    "MalformedDocument",
    "MatchConfig",
    "MergedGraph",
    "MergedNode",
    "MetricKind",
    "MissingAttrPolicy",
    "NodeMapping",
    "NoSeedFound",
    "Origin",
    "SelfLoop",
    "SuggestionEdge",
    "UnknownEndpoint",
    "UnknownNode",
    "collapse_leaves",
    "find_seed",
    "map_nodes",
    "merge_graphs",
    "node_score",
    "parse_cyclonedx",
    "parse_nodelink",
    "string_score",
    "suggest_matches",
    "write_gml",
    "write_html",
    "write_nodelink",
    "write_report",
]
