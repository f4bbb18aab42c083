import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { runLayout, seededRandom } from "../src/layout";
import type { ViewerPayload } from "../src/types";

const stress: ViewerPayload = JSON.parse(
  readFileSync(new URL("./fixtures/stress-500.json", import.meta.url), "utf8"),
);

function edgePairs(payload: ViewerPayload): Array<[string, string]> {
  return payload.variants.expanded.edges.map((e) => [e.source, e.target]);
}

describe("seededRandom", () => {
  it("is reproducible and in [0, 1)", () => {
    const a = seededRandom(7);
    const b = seededRandom(7);
    for (let i = 0; i < 100; i++) {
      const value = a();
      expect(value).toBe(b());
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });
});

describe("runLayout", () => {
  it("produces identical positions for identical inputs", () => {
    const ids = ["a", "b", "c", "d"];
    const edges: Array<[string, string]> = [["a", "b"], ["b", "c"], ["c", "d"]];
    const one = runLayout(ids, edges);
    const two = runLayout(ids, edges);
    for (const id of ids) {
      expect(one.positions.get(id)).toEqual(two.positions.get(id));
    }
  });

  it("separates coincident nodes", () => {
    const result = runLayout(["x", "y"], [["x", "y"]]);
    const x = result.positions.get("x")!;
    const y = result.positions.get("y")!;
    const dist = Math.hypot(x.x - y.x, x.y - y.y);
    expect(dist).toBeGreaterThan(10);
  });

  it("stabilizes the committed 500-node fixture in time", () => {
    const ids = stress.variants.expanded.nodes.map((n) => n.id);
    expect(ids).toHaveLength(500);
    const started = performance.now();
    const result = runLayout(ids, edgePairs(stress), { maxTicks: 300 });
    const elapsed = performance.now() - started;
    expect(elapsed).toBeLessThan(10_000);
    expect(result.energy).toBeLessThan(1.0);
    for (const point of result.positions.values()) {
      expect(Number.isFinite(point.x)).toBe(true);
      expect(Number.isFinite(point.y)).toBe(true);
    }
  });
});
