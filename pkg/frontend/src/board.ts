/** SVG rendering of the board: vertex fill mirrors the configuration,
 * target bits show as dashed rings, hints and freshly flipped vertices
 * get highlight classes. */

import { boundingBox, familyLayout } from "./layout.js";
import type { BoardState } from "./state.js";
import { bitAt, currentConfig } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderOptions {
  /** vertex to highlight as the suggested next move */
  hint?: number | null;
  /** vertices that changed in the last move, for the pulse animation */
  flipped?: number[];
  onVertexClick?: (vertex: number) => void;
}

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function renderBoard(
  svg: SVGSVGElement,
  state: BoardState,
  options: RenderOptions = {},
): void {
  const layout = familyLayout(state.graph);
  const box = boundingBox(layout);
  svg.setAttribute("viewBox", `${box.x} ${box.y} ${box.width} ${box.height}`);
  svg.replaceChildren();

  const config = currentConfig(state);
  for (const [u, v] of state.graph.edges) {
    const a = layout.get(u)!;
    const b = layout.get(v)!;
    svg.appendChild(
      svgElement("line", {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        class: "edge",
      }),
    );
  }

  for (let vertex = 1; vertex <= state.graph.n; vertex++) {
    const p = layout.get(vertex)!;
    const black = bitAt(config, vertex);
    const group = svgElement("g", {
      class: "vertex-group",
      "data-vertex": String(vertex),
    });

    if (state.target !== null && bitAt(state.target, vertex)) {
      group.appendChild(
        svgElement("circle", {
          cx: String(p.x),
          cy: String(p.y),
          r: "0.34",
          class: "target-ring",
        }),
      );
    }

    const classes = ["vertex", black ? "black" : "white"];
    if (options.hint === vertex) classes.push("hint");
    if (options.flipped?.includes(vertex)) classes.push("flipped");
    const circle = svgElement("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: "0.25",
      class: classes.join(" "),
      "data-vertex": String(vertex),
    });
    if (options.onVertexClick) {
      circle.addEventListener("click", () => options.onVertexClick!(vertex));
    }
    group.appendChild(circle);

    const label = svgElement("text", {
      x: String(p.x),
      y: String(p.y + 0.55),
      class: "vertex-label",
    });
    label.textContent = `s${vertex}`;
    group.appendChild(label);
    svg.appendChild(group);
  }
}
