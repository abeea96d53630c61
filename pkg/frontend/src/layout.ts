/** Vertex layouts: canonical positions for the named families, a small
 * deterministic force-directed pass for custom graphs. */

import type { GraphJson } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<number, Point>;

export function familyLayout(graph: GraphJson): Layout {
  const pos: Layout = new Map();
  if (graph.family === "A") {
    for (let s = 1; s <= graph.n; s++) pos.set(s, { x: s, y: 0 });
    return pos;
  }
  if (graph.family === "D") {
    for (let s = 1; s < graph.n; s++) pos.set(s, { x: s, y: 0 });
    pos.set(graph.n, { x: graph.n - 2, y: 1 });
    return pos;
  }
  if (graph.family === "E") {
    for (let s = 1; s < graph.n; s++) pos.set(s, { x: s, y: 0 });
    pos.set(graph.n, { x: graph.n - 3, y: 1 });
    return pos;
  }
  return forceLayout(graph);
}

/** Spring embedding from a deterministic circular start. */
export function forceLayout(graph: GraphJson, iterations = 200): Layout {
  const n = graph.n;
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n;
    pos.push({ x: Math.cos(angle), y: Math.sin(angle) });
  }
  const ideal = n <= 2 ? 1 : 2 * Math.sin(Math.PI / n) * 1.6;
  for (let step = 0; step < iterations; step++) {
    const force: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[j].x - pos[i].x;
        const dy = pos[j].y - pos[i].y;
        const dist = Math.max(Math.hypot(dx, dy), 1e-6);
        const repel = (ideal * ideal) / dist / 8;
        force[i].x -= (dx / dist) * repel;
        force[i].y -= (dy / dist) * repel;
        force[j].x += (dx / dist) * repel;
        force[j].y += (dy / dist) * repel;
      }
    }
    for (const [u, v] of graph.edges) {
      const a = pos[u - 1];
      const b = pos[v - 1];
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.hypot(dx, dy), 1e-6);
      const pull = (dist - ideal) / 4;
      force[u - 1].x += (dx / dist) * pull;
      force[u - 1].y += (dy / dist) * pull;
      force[v - 1].x -= (dx / dist) * pull;
      force[v - 1].y -= (dy / dist) * pull;
    }
    const damp = 0.85 * (1 - step / iterations) + 0.05;
    for (let i = 0; i < n; i++) {
      pos[i].x += force[i].x * damp;
      pos[i].y += force[i].y * damp;
    }
  }
  const layout: Layout = new Map();
  pos.forEach((p, i) => layout.set(i + 1, p));
  return layout;
}

export interface ViewBox {
  x: number;
  y: number;
  width: number;
  height: number;
}

/** Bounding box with padding, for the svg viewBox attribute. */
export function boundingBox(layout: Layout, pad = 0.8): ViewBox {
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const p of layout.values()) {
    minX = Math.min(minX, p.x);
    minY = Math.min(minY, p.y);
    maxX = Math.max(maxX, p.x);
    maxY = Math.max(maxY, p.y);
  }
  return {
    x: minX - pad,
    y: minY - pad,
    width: maxX - minX + 2 * pad,
    height: maxY - minY + 2 * pad,
  };
}
