/** In-memory stand-in for the HTTP service, returning bodies frozen from
 * the real one. Move arithmetic is mirrored here so the double can answer
 * any configuration; classify/solve answers are fixture tables. */

import type { GraphJson } from "../src/api.js";

export const A2: GraphJson = { n: 2, edges: [[1, 2]], family: "A" };
export const A3: GraphJson = { n: 3, edges: [[1, 2], [2, 3]], family: "A" };

const CLASSIFY: Record<string, unknown> = {
  "A2:00": { label: "O0", labels: ["O0"], weight: 0 },
  "A2:10": { label: "O1", labels: ["O1"], weight: 1 },
  "A2:01": { label: "O1", labels: ["O1"], weight: 2 },
  "A2:11": { label: "O1", labels: ["O1"], weight: 1 },
  "A3:100": { label: "O1", labels: ["O1"], weight: 1 },
  "A3:010": { label: "O2", labels: ["O2"], weight: 2 },
  "A3:000": { label: "O0", labels: ["O0"], weight: 0 },
};

const SOLVE: Record<string, unknown> = {
  "A2:10>01": { reachable: true, moves: [1, 2], from_label: "O1", to_label: "O1" },
  "A2:01>01": { reachable: true, moves: [], from_label: "O1", to_label: "O1" },
  "A2:10>10": { reachable: true, moves: [], from_label: "O1", to_label: "O1" },
  "A3:100>010": { reachable: false, moves: [], from_label: "O1", to_label: "O2" },
};

export const SCRAMBLE_RESULT = "11";

function applyMove(graph: GraphJson, config: string, vertex: number): string {
  if (config[vertex - 1] !== "1") return config;
  const bits = config.split("");
  for (const [u, v] of graph.edges) {
    if (u === vertex) bits[v - 1] = bits[v - 1] === "1" ? "0" : "1";
    if (v === vertex) bits[u - 1] = bits[u - 1] === "1" ? "0" : "1";
  }
  return bits.join("");
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export interface RecordedCall {
  path: string;
  body: unknown;
}

export function makeMockFetch(calls: RecordedCall[] = []) {
  return async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ path, body });

    if (path.startsWith("/api/graph")) {
      const params = new URLSearchParams(path.split("?")[1]);
      const family = params.get("family");
      const n = Number(params.get("n"));
      if (family === "A" && n === 2) return json(A2);
      if (family === "A" && n === 3) return json(A3);
      return json({ detail: `unsupported fixture ${family}_${n}` }, 422);
    }
    if (path === "/api/move") {
      const { graph, config, vertex } = body;
      if (vertex < 1 || vertex > graph.n) {
        return json({ detail: `vertex ${vertex} out of range` }, 422);
      }
      const moved = applyMove(graph, config, vertex);
      return json({ config: moved, changed: moved !== config });
    }
    if (path === "/api/solve") {
      const { graph, from, to } = body;
      const key = `${graph.family}${graph.n}:${from}>${to}`;
      const hit = SOLVE[key];
      if (!hit) return json({ detail: `no solve fixture for ${key}` }, 422);
      return json(hit);
    }
    if (path === "/api/classify") {
      const { family, n, config } = body;
      const hit = CLASSIFY[`${family}${n}:${config}`];
      if (!hit) return json({ detail: `no classify fixture for ${family}${n}:${config}` }, 422);
      return json(hit);
    }
    if (path === "/api/scramble") {
      return json({ config: SCRAMBLE_RESULT });
    }
    return json({ detail: `unknown path ${path}` }, 404);
  };
}
