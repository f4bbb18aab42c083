from __future__ import annotations

from pathlib import Path

import pytest

from bomdiff import BomGraph, parse_cyclonedx, parse_nodelink

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_bytes(name: str) -> bytes:
    return (FIXTURES / name).read_bytes()


def load_graph(name: str) -> BomGraph:
    raw = fixture_bytes(name)
    if b'"bomFormat"' in raw:
        return parse_cyclonedx(raw).graph
    return parse_nodelink(raw).graph


def build_graph(
    nodes: dict[str, dict[str, str]],
    edges: list[tuple[str, str]] = (),
    label: str = "",
) -> BomGraph:
    graph = BomGraph(label)
    for node_id, attrs in nodes.items():
        graph.add_node(node_id, attrs)
    for source, target in edges:
        graph.add_edge(source, target)
    return graph


@pytest.fixture
def golden_pair() -> tuple[BomGraph, BomGraph]:
    return load_graph("golden_graph1.json"), load_graph("golden_graph2.json")


@pytest.fixture
def hbom_pair() -> tuple[BomGraph, BomGraph]:
    return load_graph("hbom_device1.json"), load_graph("hbom_device2.json")
