from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from bomdiff import (
    BomGraph,
    DuplicateNodeId,
    MalformedDocument,
    UnknownEndpoint,
    parse_cyclonedx,
    parse_nodelink,
    write_nodelink,
)

from conftest import fixture_bytes


def cyclonedx(components, dependencies=None, **extra) -> bytes:
    bom = {"bomFormat": "CycloneDX", "specVersion": "1.4", "components": components}
    if dependencies is not None:
        bom["dependencies"] = dependencies
    bom.update(extra)
    return json.dumps(bom).encode()


def test_saas_fixture_seven_services():
    raw = fixture_bytes("saas_bom.json")
    report = parse_cyclonedx(raw)
    assert len(report.graph.nodes) == 7
    assert report.skipped_components == 0
    assert report.dangling_refs == []
    expected_edges = {
        (entry["ref"], target)
        for entry in json.loads(raw)["dependencies"]
        for target in entry["dependsOn"]
    }
    assert report.graph.edges == expected_edges


def test_empty_components_block():
    report = parse_cyclonedx(cyclonedx([]))
    assert report.graph.nodes == {}
    assert report.graph.edges == set()


def test_dangling_dependency_targets_are_warnings():
    raw = cyclonedx(
        [{"bom-ref": "X", "name": "x"}, {"bom-ref": "Y", "name": "y"}],
        [{"ref": "X", "dependsOn": ["Y", "Z"]}],
    )
    report = parse_cyclonedx(raw)
    assert report.graph.edges == {("X", "Y")}
    assert report.dangling_refs == [("Z", "unknown target")]


def test_dangling_dependency_source():
    raw = cyclonedx([{"bom-ref": "X", "name": "x"}], [{"ref": "W", "dependsOn": ["X"]}])
    report = parse_cyclonedx(raw)
    assert report.graph.edges == set()
    assert report.dangling_refs == [("W", "unknown source")]


def test_component_without_bom_ref_skipped_and_counted():
    report = parse_cyclonedx(cyclonedx([{"name": "anon"}, {"bom-ref": "X", "name": "x"}]))
    assert set(report.graph.nodes) == {"X"}
    assert report.skipped_components == 1


def test_duplicate_bom_ref_skipped_and_counted():
    report = parse_cyclonedx(cyclonedx([
        {"bom-ref": "X", "name": "x"},
        {"bom-ref": "X", "name": "x-again"},
    ]))
    assert set(report.graph.nodes) == {"X"}
    assert report.graph.nodes["X"]["name"] == "x"
    assert report.skipped_components == 1


def test_metadata_component_becomes_node():
    raw = cyclonedx(
        [{"bom-ref": "lib", "name": "lib"}],
        [{"ref": "app", "dependsOn": ["lib"]}],
        metadata={"component": {"bom-ref": "app", "name": "app", "version": "1.0"}},
    )
    report = parse_cyclonedx(raw)
    assert set(report.graph.nodes) == {"lib", "app"}
    assert report.graph.edges == {("app", "lib")}
    assert report.graph.label == "app@1.0"


def test_hashes_become_prefixed_attributes():
    raw = cyclonedx([{
        "bom-ref": "X",
        "name": "x",
        "version": "2.0",
        "type": "library",
        "purl": "pkg:pypi/x@2.0",
        "hashes": [
            {"alg": "SHA-256", "content": "aa"},
            {"alg": "MD5", "content": "bb"},
        ],
    }])
    attrs = parse_cyclonedx(raw).graph.nodes["X"]
    assert attrs == {
        "hash:MD5": "bb",
        "hash:SHA-256": "aa",
        "name": "x",
        "purl": "pkg:pypi/x@2.0",
        "type": "library",
        "version": "2.0",
    }


def test_self_dependency_ignored():
    raw = cyclonedx([{"bom-ref": "X", "name": "x"}], [{"ref": "X", "dependsOn": ["X"]}])
    report = parse_cyclonedx(raw)
    assert report.graph.edges == set()
    assert report.dangling_refs == []


def test_not_json_is_malformed():
    with pytest.raises(MalformedDocument):
        parse_cyclonedx(b"this is not json")


def test_missing_components_is_malformed():
    with pytest.raises(MalformedDocument):
        parse_cyclonedx(b'{"bomFormat": "CycloneDX"}')


def test_spdx_rejected_with_hint():
    doc = json.dumps({"spdxVersion": "SPDX-2.3", "packages": []}).encode()
    with pytest.raises(MalformedDocument, match="SPDX"):
        parse_cyclonedx(doc)


def test_edge_count_never_exceeds_depends_on_total():
    raw = json.loads(fixture_bytes("proton_bridge_v1.6.3.json"))
    report = parse_cyclonedx(json.dumps(raw).encode())
    total = sum(len(entry.get("dependsOn", [])) for entry in raw["dependencies"])
    assert len(report.graph.edges) <= total


def test_cyclonedx_parse_deterministic():
    raw = fixture_bytes("proton_bridge_v1.8.0.json")
    first, second = parse_cyclonedx(raw), parse_cyclonedx(raw)
    assert first.graph == second.graph
    assert first.skipped_components == second.skipped_components
    assert first.dangling_refs == second.dangling_refs


# -- node-link format ---------------------------------------------------------


def test_nodelink_minimal():
    doc = b'{"nodes": [{"id": "C"}, {"id": "A"}], "edges": [["C", "A"]]}'
    report = parse_nodelink(doc)
    assert set(report.graph.nodes) == {"C", "A"}
    assert report.graph.edges == {("C", "A")}


def test_nodelink_unknown_endpoint():
    doc = b'{"nodes": [{"id": "C"}], "edges": [["C", "A"]]}'
    with pytest.raises(UnknownEndpoint):
        parse_nodelink(doc)


def test_nodelink_duplicate_id():
    doc = b'{"nodes": [{"id": "C"}, {"id": "C"}], "edges": []}'
    with pytest.raises(DuplicateNodeId):
        parse_nodelink(doc)


def test_nodelink_requires_nodes_array():
    with pytest.raises(MalformedDocument):
        parse_nodelink(b'{"edges": []}')


def test_nodelink_rejects_non_string_attrs():
    doc = b'{"nodes": [{"id": "C", "attrs": {"pins": 12}}], "edges": []}'
    with pytest.raises(MalformedDocument):
        parse_nodelink(doc)


def test_nodelink_rejects_bad_edge_shape():
    doc = b'{"nodes": [{"id": "C"}], "edges": [["C"]]}'
    with pytest.raises(MalformedDocument):
        parse_nodelink(doc)


def test_hbom_fixtures_parse_losslessly():
    names = set()
    for name in ("hbom_device1.json", "hbom_device2.json"):
        raw = fixture_bytes(name)
        report = parse_nodelink(raw)
        data = json.loads(raw)
        assert len(report.graph.nodes) == 30
        assert len(data["nodes"]) == 30
        for entry in data["nodes"]:
            assert report.graph.nodes[entry["id"]] == entry["attrs"]
        assert report.graph.edges == {tuple(edge) for edge in data["edges"]}
        names |= {attrs["name"] for attrs in report.graph.nodes.values()}
    assert {"AS298", "A5298"} <= names


node_ids = st.text(alphabet="abcdef", min_size=1, max_size=3)


@st.composite
def graphs(draw):
    ids = sorted(draw(st.sets(node_ids, min_size=1, max_size=5)))
    graph = BomGraph(draw(st.text(max_size=5)))
    for node_id in ids:
        graph.add_node(node_id, draw(st.dictionaries(
            st.text(alphabet="xyz", min_size=1, max_size=2), st.text(max_size=4), max_size=3)))
    if len(ids) > 1:
        for source, target in draw(st.lists(st.tuples(st.sampled_from(ids), st.sampled_from(ids)), max_size=8)):
            if source != target:
                graph.add_edge(source, target)
    return graph


@given(graphs())
def test_nodelink_round_trip(graph):
    report = parse_nodelink(write_nodelink(graph))
    assert report.graph == graph
    assert report.graph.label == graph.label
