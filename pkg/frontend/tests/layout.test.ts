import { describe, expect, it } from "vitest";

import type { GraphJson } from "../src/api.js";
import { boundingBox, familyLayout, forceLayout } from "../src/layout.js";

const D5: GraphJson = {
  n: 5,
  edges: [[1, 2], [2, 3], [3, 4], [3, 5]],
  family: "D",
};

const E7: GraphJson = {
  n: 7,
  edges: [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [4, 7]],
  family: "E",
};

describe("layouts", () => {
  it("places the A family on a line", () => {
    const layout = familyLayout({ n: 4, edges: [[1, 2], [2, 3], [3, 4]], family: "A" });
    expect(layout.get(1)).toEqual({ x: 1, y: 0 });
    expect(layout.get(4)).toEqual({ x: 4, y: 0 });
  });

  it("raises the D fork above vertex n-2", () => {
    const layout = familyLayout(D5);
    expect(layout.get(5)).toEqual({ x: 3, y: 1 });
    expect(layout.get(4)).toEqual({ x: 4, y: 0 });
  });

  it("raises the E branch above vertex n-3", () => {
    const layout = familyLayout(E7);
    expect(layout.get(7)).toEqual({ x: 4, y: 1 });
  });

  it("gives custom graphs a deterministic spread-out embedding", () => {
    const graph: GraphJson = { n: 4, edges: [[1, 2], [2, 3], [3, 4], [1, 4]], family: "custom" };
    const a = forceLayout(graph);
    const b = forceLayout(graph);
    expect(a).toEqual(b);
    expect(a.size).toBe(4);
    const points = [...a.values()];
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const dist = Math.hypot(points[i].x - points[j].x, points[i].y - points[j].y);
        expect(dist).toBeGreaterThan(0.1);
      }
    }
  });

  it("computes a padded bounding box", () => {
    const layout = familyLayout({ n: 2, edges: [[1, 2]], family: "A" });
    const box = boundingBox(layout, 0.5);
    expect(box).toEqual({ x: 0.5, y: -0.5, width: 2, height: 1 });
  });
});
