/**
 * Deterministic force-directed layout: pairwise repulsion, spring forces
 * along edges, and a weak pull toward the canvas center. Pure data in,
 * pure data out; no DOM. Positions are reproducible for a given seed.
 */

export interface LayoutPoint {
  id: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
}

export interface LayoutResult {
  positions: Map<string, LayoutPoint>;
  ticks: number;
  energy: number;
}

/** mulberry32: tiny seeded PRNG so layouts are reproducible. */
export function seededRandom(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width?: number;
  height?: number;
  seed?: number;
  maxTicks?: number;
  /** mean kinetic energy per node below which the layout counts as stable */
  settleEnergy?: number;
}

export function runLayout(
  ids: string[],
  edges: Array<[string, string]>,
  options: LayoutOptions = {},
): LayoutResult {
  const width = options.width ?? 1200;
  const height = options.height ?? 800;
  const seed = options.seed ?? 42;
  const maxTicks = options.maxTicks ?? 300;
  const settleEnergy = options.settleEnergy ?? 0.02;

  const random = seededRandom(seed);
  const nodes: LayoutPoint[] = ids.map((id) => ({
    id,
    x: (random() - 0.5) * width * 0.8,
    y: (random() - 0.5) * height * 0.8,
    vx: 0,
    vy: 0,
  }));
  const index = new Map(ids.map((id, i) => [id, i]));
  const springs: Array<[number, number]> = [];
  for (const [source, target] of edges) {
    const si = index.get(source);
    const ti = index.get(target);
    if (si !== undefined && ti !== undefined && si !== ti) {
      springs.push([si, ti]);
    }
  }

  const repulsion = 4000;
  const springLength = 70;
  const springStrength = 0.04;
  const centerPull = 0.005;
  const damping = 0.8;
  // Cooling factor: forces fade out over the run so the simulation always
  // settles instead of oscillating on dense graphs.
  let alpha = 1.0;
  const alphaDecay = 0.975;

  let energy = Infinity;
  let tick = 0;
  for (; tick < maxTicks; tick++) {
    for (let i = 0; i < nodes.length; i++) {
      const a = nodes[i];
      for (let j = i + 1; j < nodes.length; j++) {
        const b = nodes[j];
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let distSq = dx * dx + dy * dy;
        if (distSq < 1e-4) {
          // Coincident points: push apart along a seed-stable direction.
          dx = 0.01 * ((i + 1) / (j + 1));
          dy = 0.01;
          distSq = dx * dx + dy * dy;
        }
        const force = repulsion / distSq;
        const dist = Math.sqrt(distSq);
        const fx = (dx / dist) * force;
        const fy = (dy / dist) * force;
        a.vx += fx;
        a.vy += fy;
        b.vx -= fx;
        b.vy -= fy;
      }
    }
    for (const [si, ti] of springs) {
      const a = nodes[si];
      const b = nodes[ti];
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1e-2);
      const force = springStrength * (dist - springLength);
      const fx = (dx / dist) * force;
      const fy = (dy / dist) * force;
      a.vx += fx;
      a.vy += fy;
      b.vx -= fx;
      b.vy -= fy;
    }
    energy = 0;
    for (const node of nodes) {
      node.vx -= node.x * centerPull;
      node.vy -= node.y * centerPull;
      node.vx *= damping * alpha;
      node.vy *= damping * alpha;
      // Clamp a runaway step so early high-energy ticks cannot explode.
      const speed = Math.hypot(node.vx, node.vy);
      if (speed > 40) {
        node.vx *= 40 / speed;
        node.vy *= 40 / speed;
      }
      node.x += node.vx;
      node.y += node.vy;
      energy += node.vx * node.vx + node.vy * node.vy;
    }
    energy /= Math.max(nodes.length, 1);
    alpha *= alphaDecay;
    if (energy < settleEnergy) {
      tick++;
      break;
    }
  }

  return {
    positions: new Map(nodes.map((node) => [node.id, node])),
    ticks: tick,
    energy,
  };
}
