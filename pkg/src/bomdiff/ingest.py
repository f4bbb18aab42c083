"""Parsers that turn BOM documents into BomGraph values.

Two formats are supported:

* CycloneDX JSON (spec versions 1.2-1.5): components become nodes keyed
  by ``bom-ref``, the ``dependencies`` block becomes edges.
* A generic node-link JSON carrier for BOMs without a standard source
  format (hardware BOMs in particular)::

      {"label": "...", "nodes": [{"id": "...", "attrs": {"k": "v"}}],
       "edges": [["source", "target"], ...]}

Both parsers are pure functions of their input bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import MalformedDocument
from .model import BomGraph

# CycloneDX component fields copied onto nodes as-is; hashes are added
# separately under "hash:<ALG>" keys.
_COMPONENT_ATTRS = ("name", "version", "type", "purl")


@dataclass
class IngestReport:
    """Parse result: the graph plus everything that could not be used.

    dangling_refs lists every dependency reference that names no parsed
    component, as (ref, reason) pairs. skipped_components counts component
    entries without a usable bom-ref.
    """

    graph: BomGraph
    skipped_components: int = 0
    dangling_refs: list[tuple[str, str]] = field(default_factory=list)


def _load_json(document: bytes | str) -> object:
    try:
        return json.loads(document)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc


def parse_cyclonedx(document: bytes | str) -> IngestReport:
    """Parse a CycloneDX JSON BOM into a graph keyed by bom-ref.

    Components lacking a bom-ref are skipped and counted. Dependency
    entries that reference unknown components are recorded as dangling
    rather than failing the parse.
    """
    data = _load_json(document)
    if not isinstance(data, dict):
        raise MalformedDocument("expected a JSON object at top level")
    if "spdxVersion" in data:
        raise MalformedDocument("SPDX documents are not supported; supply CycloneDX JSON")
    if "SoftwareIdentity" in data or "swid" in data:
        raise MalformedDocument("SWID tags are not supported; supply CycloneDX JSON")
    if "components" not in data:
        raise MalformedDocument("missing 'components' array; not a CycloneDX BOM")
    components = data["components"]
    if not isinstance(components, list):
        raise MalformedDocument("'components' must be an array")

    graph = BomGraph(label=_cyclonedx_label(data))
    skipped = 0

    entries = list(components)
    metadata = data.get("metadata")
    if isinstance(metadata, dict) and isinstance(metadata.get("component"), dict):
        entries.append(metadata["component"])

    for component in entries:
        if not isinstance(component, dict):
            skipped += 1
            continue
        ref = component.get("bom-ref")
        if not isinstance(ref, str) or not ref:
            skipped += 1
            continue
        if ref in graph.nodes:
            # Duplicate bom-ref: identity is unusable, skip like a missing ref.
            skipped += 1
            continue
        graph.add_node(ref, _component_attrs(component))

    dangling: list[tuple[str, str]] = []
    for entry in data.get("dependencies") or []:
        if not isinstance(entry, dict):
            continue
        ref = entry.get("ref")
        if not isinstance(ref, str):
            continue
        if ref not in graph.nodes:
            dangling.append((ref, "unknown source"))
            continue
        for target in entry.get("dependsOn") or []:
            if not isinstance(target, str):
                continue
            if target not in graph.nodes:
                dangling.append((target, "unknown target"))
                continue
            if target == ref:
                continue
            graph.add_edge(ref, target)

    return IngestReport(graph=graph, skipped_components=skipped, dangling_refs=dangling)


def _cyclonedx_label(data: dict) -> str:
    metadata = data.get("metadata")
    if isinstance(metadata, dict):
        component = metadata.get("component")
        if isinstance(component, dict):
            name = component.get("name")
            version = component.get("version")
            if isinstance(name, str) and name:
                if isinstance(version, str) and version:
                    return f"{name}@{version}"
                return name
    return "cyclonedx-bom"


def _component_attrs(component: dict) -> dict[str, str]:
    attrs: dict[str, str] = {}
    for key in _COMPONENT_ATTRS:
        value = component.get(key)
        if isinstance(value, str) and value:
            attrs[key] = value
    for entry in component.get("hashes") or []:
        if not isinstance(entry, dict):
            continue
        alg = entry.get("alg")
        content = entry.get("content")
        if isinstance(alg, str) and alg and isinstance(content, str):
            attrs[f"hash:{alg}"] = content
    return attrs


def parse_nodelink(document: bytes | str) -> IngestReport:
    """Parse the generic node-link JSON format, strictly."""
    data = _load_json(document)
    if not isinstance(data, dict):
        raise MalformedDocument("expected a JSON object at top level")
    nodes = data.get("nodes")
    if not isinstance(nodes, list):
        raise MalformedDocument("missing 'nodes' array")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise MalformedDocument("'edges' must be an array")
    label = data.get("label", "")
    if not isinstance(label, str):
        raise MalformedDocument("'label' must be a string")

    graph = BomGraph(label=label)
    for entry in nodes:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise MalformedDocument(f"node entries must be objects with a string 'id', got {entry!r}")
        attrs = entry.get("attrs", {})
        if not isinstance(attrs, dict):
            raise MalformedDocument(f"node 'attrs' must be an object, got {attrs!r}")
        try:
            graph.add_node(entry["id"], attrs)
        except ValueError as exc:
            raise MalformedDocument(str(exc)) from exc

    for entry in edges:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise MalformedDocument(f"edge entries must be [source, target] pairs, got {entry!r}")
        source, target = entry
        if not isinstance(source, str) or not isinstance(target, str):
            raise MalformedDocument(f"edge endpoints must be strings, got {entry!r}")
        graph.add_edge(source, target)

    return IngestReport(graph=graph)


def write_nodelink(graph: BomGraph) -> str:
    """Serialize a graph in the node-link format; parse_nodelink round-trips it."""
    payload = {
        "label": graph.label,
        "nodes": [{"id": node_id, "attrs": graph.nodes[node_id]} for node_id in sorted(graph.nodes)],
        "edges": [list(edge) for edge in sorted(graph.edges)],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
