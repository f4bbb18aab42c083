"""Command-line front end: ingest -> map -> merge -> export.

Exit codes follow diff conventions: 0 when the graphs matched completely
(no one-sided nodes), 1 when differences were found, 2 on usage or
processing errors (message on stderr names the failing stage).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from ._version import __version__
from .errors import BomDiffError
from .export import write_gml, write_html, write_report
from .ingest import IngestReport, parse_cyclonedx, parse_nodelink
from .mapping import map_nodes, suggest_matches
from .merge import collapse_leaves, merge_graphs
from .similarity import MatchConfig, MetricKind, MissingAttrPolicy

_METRICS = {m.value: m for m in MetricKind}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bomdiff",
        description="Compare two BOM files as attributed graphs and export the merged diff.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("input_a", help="first BOM file")
    parser.add_argument("input_b", help="second BOM file")
    parser.add_argument("--format-a", choices=["auto", "cyclonedx", "nodelink"], default="auto",
                        help="format of the first file")
    parser.add_argument("--format-b", choices=["auto", "cyclonedx", "nodelink"], default="auto",
                        help="format of the second file")
    parser.add_argument("--attr", action="append", metavar="KEY", default=None,
                        help="attribute key to match on (repeatable; default: name)")
    parser.add_argument("--metric", choices=sorted(_METRICS), default="exact",
                        help="string metric for the matching pass")
    parser.add_argument("--accept-threshold", type=float, default=1.0, metavar="F",
                        help="minimum score to accept a match (exact metric forces 1.0)")
    parser.add_argument("--suggest-threshold", type=float, default=0.85, metavar="F",
                        help="minimum score for a fuzzy suggestion edge")
    parser.add_argument("--suggest-metric", choices=sorted(_METRICS), default="jaro-winkler",
                        help="string metric for the fuzzy suggestion pass")
    parser.add_argument("--missing-attr", choices=[p.value for p in MissingAttrPolicy],
                        default="score-zero",
                        help="how a key absent from one node scores")
    parser.add_argument("--seed", metavar="IDA=IDB", default=None,
                        help="explicit starting pair instead of automatic seed search")
    parser.add_argument("--suggest", action="store_true",
                        help="run the fuzzy second pass and keep suggestion edges")
    parser.add_argument("--collapse", action="store_true",
                        help="collapse groups of matched sibling leaves into supernodes")
    parser.add_argument("--normalize", action="store_true",
                        help="lowercase and trim attribute values before scoring")
    parser.add_argument("--gml", metavar="PATH", default=None, help="write GML here")
    parser.add_argument("--report", metavar="PATH", default=None, help="write the JSON diff report here")
    parser.add_argument("--html", metavar="PATH", default=None, help="write the interactive HTML viewer here")
    parser.add_argument("--version", action="version", version=f"bomdiff {__version__}")
    return parser


def _fail(stage: str, message: str) -> int:
    print(f"bomdiff: {stage}: {message}", file=sys.stderr)
    return 2


def _detect_format(raw: bytes) -> str:
    try:
        data = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError):
        return "nodelink"
    if isinstance(data, dict) and data.get("bomFormat") == "CycloneDX":
        return "cyclonedx"
    return "nodelink"


def _ingest(path: str, fmt: str) -> IngestReport:
    raw = Path(path).read_bytes()
    if fmt == "auto":
        fmt = _detect_format(raw)
    if fmt == "cyclonedx":
        return parse_cyclonedx(raw)
    return parse_nodelink(raw)


def _warn_ingest(path: str, report: IngestReport) -> None:
    if report.skipped_components:
        print(
            f"bomdiff: warning: {path}: skipped {report.skipped_components} component(s) without a usable bom-ref",
            file=sys.stderr,
        )
    for ref, reason in report.dangling_refs:
        print(f"bomdiff: warning: {path}: dangling dependency ref {ref!r} ({reason})", file=sys.stderr)


def _atomic_write(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=target.parent or Path("."), prefix=target.name + ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    seed_override = None
    if args.seed is not None:
        if "=" not in args.seed:
            return _fail("usage", f"--seed expects IDA=IDB, got {args.seed!r}")
        left, _, right = args.seed.partition("=")
        if not left or not right:
            return _fail("usage", f"--seed expects IDA=IDB, got {args.seed!r}")
        seed_override = (left, right)

    try:
        config = MatchConfig(
            attr_keys=args.attr or ["name"],
            metric=_METRICS[args.metric],
            accept_threshold=args.accept_threshold,
            suggest_threshold=args.suggest_threshold,
            suggest_metric=_METRICS[args.suggest_metric],
            missing_attr_policy=MissingAttrPolicy(args.missing_attr),
            seed_override=seed_override,
            normalize=args.normalize,
        )
    except ValueError as exc:
        return _fail("usage", str(exc))

    reports = []
    for path, fmt in ((args.input_a, args.format_a), (args.input_b, args.format_b)):
        try:
            report = _ingest(path, fmt)
        except OSError as exc:
            return _fail("ingest", f"cannot read {path}: {exc}")
        except BomDiffError as exc:
            return _fail("ingest", f"{path}: {exc}")
        _warn_ingest(path, report)
        reports.append(report)
    graph_a, graph_b = reports[0].graph, reports[1].graph

    try:
        mapping = map_nodes(graph_a, graph_b, config)
        suggestions = suggest_matches(graph_a, graph_b, mapping, config) if args.suggest else []
        merged = merge_graphs(graph_a, graph_b, mapping, suggestions)
    except BomDiffError as exc:
        return _fail("match", str(exc))
    # GML and the report describe the collapsed graph when asked for; the
    # HTML always embeds both variants and merely opens on the chosen one.
    merged_out = collapse_leaves(merged) if args.collapse else merged

    artifacts: list[tuple[str, str]] = []
    try:
        if args.gml:
            artifacts.append((args.gml, write_gml(merged_out)))
        if args.report:
            artifacts.append((args.report, write_report(merged_out)))
        if args.html:
            initial = "collapsed" if args.collapse else "expanded"
            artifacts.append((args.html, write_html(merged, initial_variant=initial)))
    except (BomDiffError, OSError) as exc:
        return _fail("export", str(exc))

    try:
        for path, text in artifacts:
            _atomic_write(path, text)
    except OSError as exc:
        return _fail("export", str(exc))

    node_counts = merged_out.node_counts()
    edge_counts = merged_out.edge_counts()
    print(f"graphs: {merged.provenance.label_a} vs {merged.provenance.label_b}")
    print(f"nodes: both={node_counts['BOTH']} only_a={node_counts['ONLY_A']} only_b={node_counts['ONLY_B']}")
    print(f"edges: both={edge_counts['BOTH']} only_a={edge_counts['ONLY_A']} only_b={edge_counts['ONLY_B']}")
    print(f"suggestions: {len(merged_out.suggestions)}")
    for path, _ in artifacts:
        print(f"wrote {path}")

    identical = node_counts["ONLY_A"] == 0 and node_counts["ONLY_B"] == 0
    return 0 if identical else 1


def main() -> None:
    sys.exit(run())
