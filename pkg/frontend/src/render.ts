import { runLayout } from "./layout";
import type {
  GraphVariant,
  OriginClass,
  PayloadNode,
  Suggestion,
  VariantName,
  ViewerPayload,
} from "./types";
import { FALLBACK_COLORS } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW_W = 1200;
const VIEW_H = 800;

const CSS = `
#bomdiff-app { font: 13px/1.45 system-ui, sans-serif; color: #1c2330; margin: 0; }
.bd-toolbar { display: flex; gap: 14px; align-items: center; padding: 8px 12px;
  border-bottom: 1px solid #d6dbe4; background: #f4f6f9; flex-wrap: wrap; }
.bd-title { font-weight: 600; }
.bd-toolbar label { display: flex; gap: 4px; align-items: center; cursor: pointer; }
.bd-search { padding: 3px 6px; border: 1px solid #b9c2cf; border-radius: 3px; min-width: 180px; }
.bd-notice { color: #8a5a00; min-height: 1em; }
.bd-main { position: relative; }
.bd-svg { display: block; width: 100%; height: calc(100vh - 88px); background: #fcfdfe; }
.bd-panel { position: absolute; top: 10px; left: 10px; max-width: 380px; max-height: 70%;
  overflow: auto; background: rgba(255,255,255,.96); border: 1px solid #c7cedb;
  border-radius: 4px; padding: 8px 10px; box-shadow: 0 1px 4px rgba(20,30,50,.15); }
.bd-panel:empty { display: none; }
.bd-panel h3 { margin: 0 0 6px; font-size: 13px; word-break: break-all; }
.bd-attrs { border-collapse: collapse; width: 100%; }
.bd-attrs th, .bd-attrs td { text-align: left; padding: 2px 6px; border-top: 1px solid #e3e7ee;
  font-size: 12px; word-break: break-all; vertical-align: top; }
.bd-attrs .bd-mark { text-align: center; width: 1.4em; font-weight: 700; }
.bd-mark-eq { color: #2f9e44; }
.bd-mark-ne { color: #c92a2a; }
.bd-mark-abs { color: #9aa4b2; }
.bd-legend { display: flex; gap: 18px; padding: 6px 12px; border-top: 1px solid #d6dbe4;
  background: #f4f6f9; }
.bd-legend-item { display: flex; gap: 6px; align-items: center; }
.bd-swatch { width: 12px; height: 12px; border-radius: 50%; display: inline-block; }
.bd-banner { background: #ffe3e3; color: #8a1111; border: 1px solid #e8a0a0;
  padding: 10px 14px; font: 13px system-ui, sans-serif; }
.bd-node { cursor: pointer; }
.bd-node text { pointer-events: none; font-size: 10px; fill: #273043; }
.bd-badge { font-size: 9px; font-weight: 700; fill: #fff; text-anchor: middle; }
`;

interface SceneNode {
  data: PayloadNode;
  group: SVGGElement;
  circle: SVGCircleElement;
  x: number;
  y: number;
}

interface SceneEdge {
  line: SVGLineElement;
  source: string;
  target: string;
}

interface SavedStroke {
  stroke: string | null;
  width: string | null;
  dash: string | null;
  opacity: string | null;
}

export class Viewer {
  private readonly payload: ViewerPayload;
  private readonly colors: Record<string, string>;
  private variant: VariantName;
  private suggestionsVisible = true;

  private readonly svg: SVGSVGElement;
  private readonly edgeGroup: SVGGElement;
  private readonly suggestionGroup: SVGGElement;
  private readonly nodeGroup: SVGGElement;
  private readonly panel: HTMLElement;
  private readonly legend: HTMLElement;
  private readonly notice: HTMLElement;
  private readonly collapseBox: HTMLInputElement;
  private readonly suggestionBox: HTMLInputElement;

  private sceneNodes = new Map<string, SceneNode>();
  private sceneEdges: SceneEdge[] = [];
  private suggestionLines: SceneEdge[] = [];
  private hovered: string | null = null;
  private savedStrokes = new Map<SVGLineElement, SavedStroke>();

  constructor(container: HTMLElement, payload: ViewerPayload) {
    this.payload = payload;
    this.colors = { ...FALLBACK_COLORS, ...payload.colors };
    this.variant = payload.initial_variant ?? "expanded";

    const doc = container.ownerDocument;
    if (!doc.querySelector("style[data-bomdiff]")) {
      const style = doc.createElement("style");
      style.setAttribute("data-bomdiff", "");
      style.textContent = CSS;
      doc.head.appendChild(style);
    }

    const toolbar = doc.createElement("div");
    toolbar.className = "bd-toolbar";
    const title = doc.createElement("span");
    title.className = "bd-title";
    title.textContent = `${payload.provenance.graph_a} vs ${payload.provenance.graph_b}`;
    toolbar.appendChild(title);

    this.notice = doc.createElement("span");
    this.notice.className = "bd-notice";

    const search = doc.createElement("input");
    search.className = "bd-search";
    search.type = "search";
    search.placeholder = "find id or attribute…";
    search.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter") {
        this.search(search.value);
      }
    });
    toolbar.appendChild(search);

    this.suggestionBox = doc.createElement("input");
    this.suggestionBox.type = "checkbox";
    this.suggestionBox.checked = true;
    this.suggestionBox.addEventListener("change", () => {
      this.toggleSuggestions(this.suggestionBox.checked);
    });
    toolbar.appendChild(labeled(doc, this.suggestionBox, "suggestions"));

    this.collapseBox = doc.createElement("input");
    this.collapseBox.type = "checkbox";
    this.collapseBox.checked = this.variant === "collapsed";
    this.collapseBox.addEventListener("change", () => {
      this.toggleCollapse(this.collapseBox.checked);
    });
    toolbar.appendChild(labeled(doc, this.collapseBox, "collapse matched leaves"));
    toolbar.appendChild(this.notice);
    container.appendChild(toolbar);

    const main = doc.createElement("div");
    main.className = "bd-main";
    this.svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("class", "bd-svg");
    this.setViewBox(-VIEW_W / 2, -VIEW_H / 2, VIEW_W, VIEW_H);
    this.edgeGroup = doc.createElementNS(SVG_NS, "g") as SVGGElement;
    this.suggestionGroup = doc.createElementNS(SVG_NS, "g") as SVGGElement;
    this.nodeGroup = doc.createElementNS(SVG_NS, "g") as SVGGElement;
    this.svg.append(this.edgeGroup, this.suggestionGroup, this.nodeGroup);
    main.appendChild(this.svg);

    this.panel = doc.createElement("div");
    this.panel.className = "bd-panel";
    main.appendChild(this.panel);
    container.appendChild(main);

    this.legend = doc.createElement("div");
    this.legend.className = "bd-legend";
    container.appendChild(this.legend);

    this.renderScene();
  }

  currentVariant(): VariantName {
    return this.variant;
  }

  private currentGraph(): GraphVariant {
    return this.payload.variants[this.variant];
  }

  private setViewBox(x: number, y: number, w: number, h: number): void {
    this.svg.setAttribute("viewBox", `${x} ${y} ${w} ${h}`);
  }

  /** Rebuild the scene for the current variant from scratch. */
  private renderScene(): void {
    this.unhover();
    const doc = this.svg.ownerDocument;
    this.edgeGroup.textContent = "";
    this.suggestionGroup.textContent = "";
    this.nodeGroup.textContent = "";
    this.sceneNodes.clear();
    this.sceneEdges = [];
    this.suggestionLines = [];

    const graph = this.currentGraph();
    const layout = runLayout(
      graph.nodes.map((node) => node.id),
      graph.edges.map((edge) => [edge.source, edge.target] as [string, string]),
      { width: VIEW_W, height: VIEW_H },
    );

    for (const edge of graph.edges) {
      const line = doc.createElementNS(SVG_NS, "line") as SVGLineElement;
      const from = layout.positions.get(edge.source);
      const to = layout.positions.get(edge.target);
      if (!from || !to) continue;
      line.setAttribute("x1", fmt(from.x));
      line.setAttribute("y1", fmt(from.y));
      line.setAttribute("x2", fmt(to.x));
      line.setAttribute("y2", fmt(to.y));
      line.setAttribute("stroke", this.colors[edge.origin]);
      line.setAttribute("stroke-width", "1.6");
      line.setAttribute("stroke-opacity", "0.55");
      line.setAttribute("data-origin", edge.origin);
      this.edgeGroup.appendChild(line);
      this.sceneEdges.push({ line, source: edge.source, target: edge.target });
    }

    const present = new Set(graph.nodes.map((node) => node.id));
    for (const suggestion of this.payload.suggestions) {
      if (!present.has(suggestion.a) || !present.has(suggestion.b)) continue;
      const from = layout.positions.get(suggestion.a);
      const to = layout.positions.get(suggestion.b);
      if (!from || !to) continue;
      const line = doc.createElementNS(SVG_NS, "line") as SVGLineElement;
      line.setAttribute("x1", fmt(from.x));
      line.setAttribute("y1", fmt(from.y));
      line.setAttribute("x2", fmt(to.x));
      line.setAttribute("y2", fmt(to.y));
      line.setAttribute("stroke", this.colors["SUGGESTED"]);
      line.setAttribute("stroke-width", "2");
      line.setAttribute("stroke-dasharray", "6,4");
      line.setAttribute("data-origin", "SUGGESTED");
      const tooltip = doc.createElementNS(SVG_NS, "title");
      tooltip.textContent = describeSuggestion(suggestion);
      line.appendChild(tooltip);
      this.suggestionGroup.appendChild(line);
      this.suggestionLines.push({ line, source: suggestion.a, target: suggestion.b });
    }
    this.suggestionGroup.setAttribute("display", this.suggestionsVisible ? "inline" : "none");

    for (const node of graph.nodes) {
      const position = layout.positions.get(node.id);
      if (!position) continue;
      const group = doc.createElementNS(SVG_NS, "g") as SVGGElement;
      group.setAttribute("class", "bd-node");
      group.setAttribute("data-id", node.id);
      const circle = doc.createElementNS(SVG_NS, "circle") as SVGCircleElement;
      const radius = nodeRadius(node);
      circle.setAttribute("cx", fmt(position.x));
      circle.setAttribute("cy", fmt(position.y));
      circle.setAttribute("r", String(radius));
      circle.setAttribute("fill", this.colors[node.origin]);
      circle.setAttribute("stroke", "#39414e");
      circle.setAttribute("stroke-width", "1");
      group.appendChild(circle);
      if (node.member_count !== undefined) {
        const badge = doc.createElementNS(SVG_NS, "text");
        badge.setAttribute("class", "bd-badge");
        badge.setAttribute("x", fmt(position.x));
        badge.setAttribute("y", fmt(position.y + 3));
        badge.textContent = String(node.member_count);
        group.appendChild(badge);
      }
      group.addEventListener("mouseenter", () => this.hover(node.id));
      group.addEventListener("mouseleave", () => this.unhover());
      this.nodeGroup.appendChild(group);
      this.sceneNodes.set(node.id, { data: node, group, circle, x: position.x, y: position.y });
    }

    this.renderLegend();
  }

  private renderLegend(): void {
    const doc = this.legend.ownerDocument;
    this.legend.textContent = "";
    const tally: Record<OriginClass, number> = { BOTH: 0, ONLY_A: 0, ONLY_B: 0 };
    for (const node of this.currentGraph().nodes) {
      tally[node.origin] += 1;
    }
    for (const origin of ["BOTH", "ONLY_A", "ONLY_B"] as OriginClass[]) {
      const item = doc.createElement("span");
      item.className = "bd-legend-item";
      item.setAttribute("data-origin", origin);
      const swatch = doc.createElement("span");
      swatch.className = "bd-swatch";
      swatch.style.background = this.colors[origin];
      const text = doc.createElement("span");
      text.textContent = `${legendName(origin, this.payload)}: ${tally[origin]}`;
      item.append(swatch, text);
      this.legend.appendChild(item);
    }
    const suggestions = doc.createElement("span");
    suggestions.className = "bd-legend-item";
    suggestions.setAttribute("data-origin", "SUGGESTED");
    suggestions.textContent = `suggested matches: ${this.payload.suggestions.length}`;
    this.legend.appendChild(suggestions);
  }

  hover(nodeId: string): void {
    if (this.hovered === nodeId) return;
    this.unhover();
    const scene = this.sceneNodes.get(nodeId);
    if (!scene) return;
    this.hovered = nodeId;
    for (const edge of [...this.sceneEdges, ...this.suggestionLines]) {
      if (edge.source !== nodeId && edge.target !== nodeId) continue;
      this.savedStrokes.set(edge.line, {
        stroke: edge.line.getAttribute("stroke"),
        width: edge.line.getAttribute("stroke-width"),
        dash: edge.line.getAttribute("stroke-dasharray"),
        opacity: edge.line.getAttribute("stroke-opacity"),
      });
      edge.line.setAttribute("stroke", this.colors["HOVER"]);
      edge.line.setAttribute("stroke-width", "3.5");
      edge.line.setAttribute("stroke-opacity", "1");
      edge.line.removeAttribute("stroke-dasharray");
    }
    this.renderPanel(scene.data);
  }

  unhover(): void {
    if (this.hovered === null) return;
    for (const [line, saved] of this.savedStrokes) {
      restoreAttr(line, "stroke", saved.stroke);
      restoreAttr(line, "stroke-width", saved.width);
      restoreAttr(line, "stroke-dasharray", saved.dash);
      restoreAttr(line, "stroke-opacity", saved.opacity);
    }
    this.savedStrokes.clear();
    this.hovered = null;
    this.panel.textContent = "";
  }

  private renderPanel(node: PayloadNode): void {
    const doc = this.panel.ownerDocument;
    this.panel.textContent = "";
    const heading = doc.createElement("h3");
    heading.textContent = node.id;
    this.panel.appendChild(heading);

    if (node.members !== undefined) {
      const summary = doc.createElement("div");
      summary.textContent = `supernode of ${node.members.length} matched leaves`;
      this.panel.appendChild(summary);
      const list = doc.createElement("ul");
      for (const member of node.members) {
        const item = doc.createElement("li");
        item.textContent = member;
        list.appendChild(item);
      }
      this.panel.appendChild(list);
      return;
    }

    const table = doc.createElement("table");
    table.className = "bd-attrs";
    const head = doc.createElement("tr");
    for (const column of ["attribute", this.payload.provenance.graph_a, "", this.payload.provenance.graph_b]) {
      const cell = doc.createElement("th");
      cell.textContent = column;
      head.appendChild(cell);
    }
    table.appendChild(head);

    const attrsA = node.attrs_a ?? {};
    const attrsB = node.attrs_b ?? {};
    const keys = Array.from(new Set([...Object.keys(attrsA), ...Object.keys(attrsB)])).sort();
    for (const key of keys) {
      const row = doc.createElement("tr");
      const valueA = attrsA[key];
      const valueB = attrsB[key];
      row.appendChild(cell(doc, "td", key));
      row.appendChild(cell(doc, "td", valueA ?? "—"));
      const mark = cell(doc, "td", markFor(valueA, valueB));
      mark.className = `bd-mark ${markClass(valueA, valueB)}`;
      row.appendChild(mark);
      row.appendChild(cell(doc, "td", valueB ?? "—"));
      table.appendChild(row);
    }
    this.panel.appendChild(table);
  }

  toggleSuggestions(on: boolean): void {
    this.suggestionsVisible = on;
    this.suggestionBox.checked = on;
    this.suggestionGroup.setAttribute("display", on ? "inline" : "none");
  }

  toggleCollapse(on: boolean): void {
    const next: VariantName = on ? "collapsed" : "expanded";
    this.collapseBox.checked = on;
    if (next === this.variant) return;
    this.variant = next;
    this.renderScene();
  }

  /** Pan/zoom to the first node whose id or attribute contains the text. */
  search(text: string): boolean {
    const query = text.trim().toLowerCase();
    this.notice.textContent = "";
    if (!query) return false;
    for (const node of this.currentGraph().nodes) {
      if (matches(node, query)) {
        const scene = this.sceneNodes.get(node.id);
        if (!scene) break;
        this.setViewBox(scene.x - 180, scene.y - 120, 360, 240);
        return true;
      }
    }
    this.notice.textContent = `no match: "${text.trim()}"`;
    return false;
  }
}

function labeled(doc: Document, input: HTMLInputElement, text: string): HTMLLabelElement {
  const label = doc.createElement("label");
  label.appendChild(input);
  label.appendChild(doc.createTextNode(text));
  return label;
}

function cell(doc: Document, tag: string, text: string): HTMLElement {
  const element = doc.createElement(tag);
  element.textContent = text;
  return element;
}

function fmt(value: number): string {
  return value.toFixed(2);
}

function nodeRadius(node: PayloadNode): number {
  if (node.member_count === undefined) return 9;
  return Math.min(9 + 3 * Math.sqrt(node.member_count), 26);
}

function describeSuggestion(suggestion: Suggestion): string {
  return (
    `possible match: ${suggestion.a} ↔ ${suggestion.b}\n` +
    `score ${suggestion.score.toFixed(4)}, shared anchors ${suggestion.shared_anchor_count}`
  );
}

function legendName(origin: OriginClass, payload: ViewerPayload): string {
  if (origin === "BOTH") return "in both";
  if (origin === "ONLY_A") return `only in ${payload.provenance.graph_a}`;
  return `only in ${payload.provenance.graph_b}`;
}

function markFor(a: string | undefined, b: string | undefined): string {
  if (a === undefined || b === undefined) return "·";
  return a === b ? "=" : "≠";
}

function markClass(a: string | undefined, b: string | undefined): string {
  if (a === undefined || b === undefined) return "bd-mark-abs";
  return a === b ? "bd-mark-eq" : "bd-mark-ne";
}

function matches(node: PayloadNode, query: string): boolean {
  if (node.id.toLowerCase().includes(query)) return true;
  for (const attrs of [node.attrs_a, node.attrs_b]) {
    if (!attrs) continue;
    for (const value of Object.values(attrs)) {
      if (value.toLowerCase().includes(query)) return true;
    }
  }
  return false;
}

function restoreAttr(line: SVGLineElement, name: string, value: string | null): void {
  if (value === null) {
    line.removeAttribute(name);
  } else {
    line.setAttribute(name, value);
  }
}
