/** Typed client for the puzzle service; the UI never computes GF(2) itself. */

export interface GraphJson {
  n: number;
  edges: [number, number][];
  family: string;
}

export interface MoveResponse {
  config: string;
  changed: boolean;
}

export interface SolveResponse {
  reachable: boolean;
  moves: number[];
  from_label?: string | null;
  to_label?: string | null;
}

export interface ClassifyResponse {
  label: string;
  labels: string[];
  weight: number;
  in_Z?: boolean;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function parseDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (typeof body.detail === "string") return body.detail;
    return JSON.stringify(body.detail ?? body);
  } catch {
    return response.statusText || `request failed (${response.status})`;
  }
}

export class Client {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  getGraph(family: string, n: number): Promise<GraphJson> {
    return this.request<GraphJson>(
      `/api/graph?family=${encodeURIComponent(family)}&n=${n}`,
    );
  }

  move(graph: GraphJson, config: string, vertex: number): Promise<MoveResponse> {
    return this.post<MoveResponse>("/api/move", { graph, config, vertex });
  }

  solve(graph: GraphJson, from: string, to: string): Promise<SolveResponse> {
    return this.post<SolveResponse>("/api/solve", { graph, from, to });
  }

  classify(family: string, n: number, config: string): Promise<ClassifyResponse> {
    return this.post<ClassifyResponse>("/api/classify", { family, n, config });
  }

  scramble(
    graph: GraphJson,
    config: string,
    k: number,
    seed: number,
  ): Promise<{ config: string }> {
    return this.post<{ config: string }>("/api/scramble", {
      graph,
      config,
      k,
      seed,
    });
  }
}
