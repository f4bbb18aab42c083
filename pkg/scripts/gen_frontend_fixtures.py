#!/usr/bin/env python3
"""Regenerate the viewer test fixtures under frontend/tests/fixtures/.

Run after `npm run build` in frontend/ so golden.html embeds the current
viewer bundle; commit the results.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from bomdiff import (
    BomGraph,
    MatchConfig,
    map_nodes,
    merge_graphs,
    parse_nodelink,
    suggest_matches,
    write_html,
)
from bomdiff.export import payload_dict

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "tests" / "fixtures"


def merged_pair(file_a: str, file_b: str):
    graph_a = parse_nodelink((ROOT / "tests/fixtures" / file_a).read_bytes()).graph
    graph_b = parse_nodelink((ROOT / "tests/fixtures" / file_b).read_bytes()).graph
    config = MatchConfig(attr_keys=["name"])
    mapping = map_nodes(graph_a, graph_b, config)
    suggestions = suggest_matches(graph_a, graph_b, mapping, config)
    return merge_graphs(graph_a, graph_b, mapping, suggestions)


def golden_merged():
    return merged_pair("golden_graph1.json", "golden_graph2.json")


def stress_graph(size: int = 500) -> BomGraph:
    rng = random.Random(500)
    graph = BomGraph("stress")
    ids = [f"n{i:03d}" for i in range(size)]
    for node_id in ids:
        graph.add_node(node_id, {"name": f"part-{node_id}"})
    for index in range(1, size):
        graph.add_edge(ids[rng.randrange(index)], ids[index])
    for _ in range(size // 3):
        a, b = rng.sample(ids, 2)
        if (a, b) not in graph.edges and (b, a) not in graph.edges:
            graph.add_edge(a, b)
    return graph


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    merged = golden_merged()

    payload = payload_dict(merged)
    (OUT / "golden-payload.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT / 'golden-payload.json'}")

    (OUT / "golden.html").write_text(write_html(merged), encoding="utf-8")
    print(f"wrote {OUT / 'golden.html'}")

    hbom = payload_dict(merged_pair("hbom_device1.json", "hbom_device2.json"))
    (OUT / "hbom-payload.json").write_text(
        json.dumps(hbom, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT / 'hbom-payload.json'}")

    graph = stress_graph()
    mapping = map_nodes(graph, graph, MatchConfig(attr_keys=["name"]))
    stress = payload_dict(merge_graphs(graph, graph, mapping))
    (OUT / "stress-500.json").write_text(
        json.dumps(stress, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    print(f"wrote {OUT / 'stress-500.json'}")


if __name__ == "__main__":
    main()
