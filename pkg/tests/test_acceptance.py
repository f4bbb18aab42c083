"""Acceptance suite: one test per release criterion.

Each test prints a PASS/FAIL line (visible with `pytest -s`) in addition
to the normal assertion outcome, so the suite doubles as a checklist.
"""

from __future__ import annotations

import functools
import json
import random
import time

import pytest

from bomdiff import (
    MatchConfig,
    MetricKind,
    collapse_leaves,
    map_nodes,
    merge_graphs,
    string_score,
    suggest_matches,
    write_gml,
    write_html,
    write_report,
)
from bomdiff.cli import run

from conftest import FIXTURES, build_graph, fixture_bytes, load_graph
from oracles import (
    find_attr_isomorphisms,
    random_connected_graph,
    reference_jaro_winkler,
)


def criterion(name):
    def decorate(test):
        @functools.wraps(test)
        def wrapper(*args, **kwargs):
            try:
                result = test(*args, **kwargs)
            except BaseException:
                print(f"\nACCEPTANCE {name}: FAIL")
                raise
            print(f"\nACCEPTANCE {name}: PASS")
            return result

        return wrapper

    return decorate


def all_keys(graph) -> list[str]:
    keys: set[str] = set()
    for attrs in graph.nodes.values():
        keys |= set(attrs)
    return sorted(keys)


# -- identity diff ------------------------------------------------------------


@criterion("identity-diff")
def test_identity_diff_on_all_fixtures(tmp_path, capsys):
    fixtures = ["saas_bom.json", "proton_bridge_v1.6.3.json", "hbom_device1.json"]
    for name in fixtures:
        path = str(FIXTURES / name)
        graph = load_graph(name)
        report_path = tmp_path / f"{name}.report.json"
        argv = [path, path, "--suggest", "--report", str(report_path)]
        for key in all_keys(graph):
            argv += ["--attr", key]
        started = time.monotonic()
        code = run(argv)
        elapsed = time.monotonic() - started
        assert code == 0, f"{name}: expected exit 0, got {code}"
        assert elapsed < 1.0, f"{name}: identity diff took {elapsed:.2f}s"
        report = json.loads(report_path.read_text())
        counts = report["counts"]["nodes"]
        assert counts["BOTH"] == len(graph.nodes)
        assert counts["ONLY_A"] == 0 and counts["ONLY_B"] == 0
        assert report["suggestions"] == []
    capsys.readouterr()


# -- golden end-to-end ----------------------------------------------------------


@criterion("golden-fixture")
def test_golden_fixture_pipeline():
    graph_a = load_graph("golden_graph1.json")
    graph_b = load_graph("golden_graph2.json")
    config = MatchConfig(attr_keys=["name"], suggest_threshold=0.85)

    mapping = map_nodes(graph_a, graph_b, config)
    assert set(mapping.pairs) == {"A", "B", "C", "E"}
    assert set(graph_a.nodes) - set(mapping.pairs) == {"D", "F", "G"}

    suggestions = suggest_matches(graph_a, graph_b, mapping, config)
    assert [(s.a, s.b) for s in suggestions] == [("D", "H")]
    assert suggestions[0].score >= 0.85

    merged = merge_graphs(graph_a, graph_b, mapping, suggestions)
    collapsed = collapse_leaves(merged)
    supernodes = [n for n in collapsed.nodes.values() if n.is_supernode]
    assert len(supernodes) == 1
    assert supernodes[0].members == ["A≡A", "B≡B"]
    assert ("C≡C", supernodes[0].id) in collapsed.edges


# -- transcription-error scenario -----------------------------------------------


@criterion("transcription-error")
def test_as298_vs_a5298():
    score = string_score(MetricKind.JARO_WINKLER, "AS298", "A5298")
    assert score == pytest.approx(0.88, abs=1e-3)
    assert reference_jaro_winkler("AS298", "A5298") == pytest.approx(0.88, abs=1e-3)

    graph_a = load_graph("hbom_device1.json")
    graph_b = load_graph("hbom_device2.json")
    permissive = MatchConfig(attr_keys=["name"], suggest_threshold=0.85)
    mapping = map_nodes(graph_a, graph_b, permissive)
    hits = [
        (graph_a.nodes[s.a]["name"], graph_b.nodes[s.b]["name"])
        for s in suggest_matches(graph_a, graph_b, mapping, permissive)
    ]
    assert ("AS298", "A5298") in hits

    strict = MatchConfig(attr_keys=["name"], suggest_threshold=0.90)
    hits = [
        (graph_a.nodes[s.a]["name"], graph_b.nodes[s.b]["name"])
        for s in suggest_matches(graph_a, graph_b, mapping, strict)
    ]
    assert ("AS298", "A5298") not in hits


# -- brute-force oracle equivalence ----------------------------------------------


@criterion("oracle-equivalence")
def test_recovers_isomorphism_against_bruteforce():
    rng = random.Random(20240811)
    config = MatchConfig(attr_keys=["name"])
    cases = 200
    for _ in range(cases):
        size = rng.randint(2, 8)
        ids, edges = random_connected_graph(rng, size)
        graph_a = build_graph({n: {"name": f"component-{n}"} for n in ids}, sorted(edges))
        new_ids = [f"r{i}" for i in range(size)]
        rng.shuffle(new_ids)
        rename = dict(zip(sorted(ids), new_ids))
        graph_b = build_graph(
            {rename[n]: graph_a.nodes[n] for n in ids},
            sorted((rename[s], rename[t]) for s, t in edges),
        )
        isos = find_attr_isomorphisms(
            sorted(graph_a.nodes),
            sorted(graph_b.nodes),
            {u: set(graph_a.undirected_neighbors(u)) for u in graph_a.nodes},
            {v: set(graph_b.undirected_neighbors(v)) for v in graph_b.nodes},
            graph_a.nodes,
            graph_b.nodes,
        )
        assert isos == [rename], "oracle must find exactly the planted isomorphism"
        mapping = map_nodes(graph_a, graph_b, config)
        assert {u: v for u, (v, _) in mapping.pairs.items()} == rename


# -- randomized property suite ----------------------------------------------------


@criterion("property-suite")
def test_property_suite():
    rng = random.Random(42)
    config = MatchConfig(attr_keys=["name"], suggest_threshold=0.8)
    started = time.monotonic()
    iterations = 1000
    for index in range(iterations):
        size = rng.randint(3, 7)
        ids, edges = random_connected_graph(rng, size)
        graph_a = build_graph({n: {"name": f"part-{n}-{index}"} for n in ids}, sorted(edges))

        new_ids = [f"w{i}" for i in range(size)]
        rng.shuffle(new_ids)
        rename = dict(zip(sorted(ids), new_ids))
        attrs_b = {rename[n]: dict(graph_a.nodes[n]) for n in ids}
        # Perturb up to two names so some nodes genuinely differ.
        for node_id in rng.sample(sorted(attrs_b), k=rng.randint(0, 2)):
            attrs_b[node_id] = {"name": f"perturbed-{node_id}-{index}"}
        graph_b = build_graph(attrs_b, sorted((rename[s], rename[t]) for s, t in edges))

        mapping = map_nodes(graph_a, graph_b, config)
        again = map_nodes(graph_a, graph_b, config)
        assert mapping.pairs == again.pairs and mapping.seed == again.seed

        targets = [v for v, _ in mapping.pairs.values()]
        assert len(targets) == len(set(targets)), "mapping must be injective"

        relabel = {v: f"x{i}" for i, v in enumerate(sorted(graph_b.nodes))}
        graph_c = build_graph(
            {relabel[v]: graph_b.nodes[v] for v in graph_b.nodes},
            sorted((relabel[s], relabel[t]) for s, t in graph_b.edges),
        )
        remapped = map_nodes(graph_a, graph_c, config)
        assert {u: relabel[v] for u, (v, _) in mapping.pairs.items()} == {
            u: v for u, (v, _) in remapped.pairs.items()
        }

        suggestions = suggest_matches(graph_a, graph_b, mapping, config)
        merged = merge_graphs(graph_a, graph_b, mapping, suggestions)
        assert len(merged.nodes) == len(graph_a.nodes) + len(graph_b.nodes) - len(mapping.pairs)

        collapsed = collapse_leaves(merged)
        twice = collapse_leaves(collapsed)
        assert set(twice.nodes) == set(collapsed.nodes)
        assert twice.edges == collapsed.edges
        assert twice.suggestions == collapsed.suggestions

        assert write_gml(merged) == write_gml(merged)
        assert write_report(merged) == write_report(merged)
        assert write_html(merged, viewer_bundle="// b") == write_html(merged, viewer_bundle="// b")

    elapsed = time.monotonic() - started
    assert elapsed < 60.0, f"property suite took {elapsed:.1f}s"


# -- hash-keyed version diff -------------------------------------------------------


@criterion("sha256-version-diff")
def test_sha256_version_diff(tmp_path, capsys):
    old = json.loads(fixture_bytes("proton_bridge_v1.6.3.json"))
    new = json.loads(fixture_bytes("proton_bridge_v1.8.0.json"))

    def hashes(bom) -> dict[str, str]:
        entries = list(bom["components"]) + [bom["metadata"]["component"]]
        return {c["bom-ref"]: c["hashes"][0]["content"] for c in entries}

    hashes_old, hashes_new = hashes(old), hashes(new)
    shared = set(hashes_old.values()) & set(hashes_new.values())
    expected_only_a = {ref for ref, h in hashes_old.items() if h not in shared}
    expected_only_b = {ref for ref, h in hashes_new.items() if h not in shared}

    graph_a = load_graph("proton_bridge_v1.6.3.json")
    graph_b = load_graph("proton_bridge_v1.8.0.json")
    config = MatchConfig(attr_keys=["hash:SHA-256"], metric=MetricKind.EXACT)
    merged = merge_graphs(graph_a, graph_b, map_nodes(graph_a, graph_b, config))

    only_a = {n.id[len("A:"):] for n in merged.nodes.values() if n.origin.value == "ONLY_A"}
    only_b = {n.id[len("B:"):] for n in merged.nodes.values() if n.origin.value == "ONLY_B"}
    both = sum(1 for n in merged.nodes.values() if n.origin.value == "BOTH")
    assert only_a == expected_only_a
    assert only_b == expected_only_b
    assert both == len(graph_a.nodes) - len(expected_only_a)

    code = run([
        str(FIXTURES / "proton_bridge_v1.6.3.json"),
        str(FIXTURES / "proton_bridge_v1.8.0.json"),
        "--attr", "hash:SHA-256", "--metric", "exact",
    ])
    assert code == 1
    capsys.readouterr()


# -- metric unit values --------------------------------------------------------------

CORPUS = [
    ("MARTHA", "MARHTA"), ("DWAYNE", "DUANE"), ("DIXON", "DICKSONX"),
    ("AS298", "A5298"), ("JELLYFISH", "SMELLYFISH"), ("apple", "apple"),
    ("", ""), ("", "nonempty"), ("a", "a"), ("a", "b"),
    ("kitten", "sitting"), ("flaw", "lawn"), ("gumbo", "gambol"),
    ("12-pin port", "12-pin port"), ("12-pin port", "14-pin port"),
    ("circuit board", "circuit bored"), ("PWR-REG-12V", "PWR-REG-12W"),
    ("DSP-4410", "DSP-4411"), ("node", "node "), ("Node", "node"),
    ("pkg:golang/a@v1", "pkg:golang/a@v2"), ("sha-aa", "sha-ab"),
    ("left", "right"), ("alpha", "omega"), ("0", "O"),
    ("resistor", "resistors"), ("capacitor", "capicator"),
    ("eth0", "eth1"), ("relay", "replay"), ("fan", "fang"),
    ("osc", "oscillator"), ("abcd", "dcba"), ("aaaa", "aaab"),
    ("xy", "yx"), ("main", "mian"), ("board", "bored"),
    ("one", "won"), ("two", "too"), ("forty", "fourty"),
    ("color", "colour"), ("gray", "grey"), ("meter", "metre"),
    ("analog", "analogue"), ("sulfur", "sulphur"), ("fiber", "fibre"),
    ("check", "cheque"), ("draft", "draught"), ("tire", "tyre"),
    ("curb", "kerb"), ("plow", "plough"),
]


@criterion("metric-units")
def test_metric_unit_values():
    assert len(CORPUS) == 50
    jw = string_score(MetricKind.JARO_WINKLER, "MARTHA", "MARHTA")
    assert jw == pytest.approx(0.9611, abs=1e-4)
    assert reference_jaro_winkler("MARTHA", "MARHTA") == pytest.approx(0.9611, abs=1e-4)

    for a, b in CORPUS:
        assert string_score(MetricKind.EXACT, a, b) == (1.0 if a == b else 0.0)
        for metric in MetricKind:
            left = string_score(metric, a, b)
            right = string_score(metric, b, a)
            assert left == right, f"{metric} not symmetric on {(a, b)}"
            assert 0.0 <= left <= 1.0
            assert string_score(metric, a, a) == 1.0
            assert string_score(metric, b, b) == 1.0
