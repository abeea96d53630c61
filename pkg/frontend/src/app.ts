/** Application wiring: controls, status panel, toasts, and the play loop.
 *
 * All board mutations go through POST /api/move; the conserved orbit
 * label and weight of the current configuration stay on screen, which is
 * what explains unreachable targets.
 */

import { ApiError, Client } from "./api.js";
import type { GraphJson } from "./api.js";
import { renderBoard } from "./board.js";
import {
  applyMove,
  bitAt,
  blackVertices,
  canUndo,
  createBoard,
  currentConfig,
  flippedVertices,
  isSolved,
  resetTo,
  setTarget,
  undo,
  withClassify,
} from "./state.js";
import type { BoardState } from "./state.js";

export interface AppOptions {
  /** pause between animated solution steps, 0 in tests */
  stepDelayMs?: number;
  /** seed source for scrambles, overridable in tests */
  randomSeed?: () => number;
}

const FAMILIES = ["A", "D", "E", "custom"] as const;
const FAMILY_MIN: Record<string, number> = { A: 1, D: 4, E: 6 };

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export class BoardApp {
  state: BoardState | null = null;
  private hintVertex: number | null = null;
  private lastFlipped: number[] = [];
  private busy = false;

  private readonly svg: SVGSVGElement;
  private readonly orbitLabel: HTMLElement;
  private readonly weightLabel: HTMLElement;
  private readonly subspaceLabel: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly toasts: HTMLElement;
  private readonly historyLabel: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Client,
    private readonly options: AppOptions = {},
  ) {
    root.innerHTML = `
      <header>
        <h1>Flipping puzzle</h1>
        <p class="explainer">Click a black vertex to flip its neighbors.
        The orbit label is conserved by every move: targets in another
        orbit are unreachable.</p>
      </header>
      <section class="controls">
        <label>family
          <select id="family">${FAMILIES.map((f) => `<option${f === "A" ? " selected" : ""}>${f}</option>`).join("")}</select>
        </label>
        <label>n <input id="n" type="number" value="2" min="1" max="20"></label>
        <label class="custom-only hidden">graph JSON
          <input id="custom-json" placeholder='{"n":3,"edges":[[1,2],[2,3],[1,3]]}'>
        </label>
        <button id="btn-new">new board</button>
        <button id="btn-scramble">scramble</button>
        <button id="btn-undo">undo</button>
      </section>
      <section class="controls">
        <label>target <input id="target-config" placeholder="e.g. 01"></label>
        <button id="btn-target">set target</button>
        <button id="btn-clear-target">clear</button>
        <button id="btn-hint">hint</button>
        <button id="btn-solve">play solution</button>
      </section>
      <section class="status">
        <span>orbit <strong id="orbit-label">&mdash;</strong></span>
        <span>weight <strong id="weight-label">&mdash;</strong></span>
        <span id="subspace-label" class="hidden"></span>
        <span>moves <strong id="history-label">0</strong></span>
      </section>
      <div id="banner" class="banner hidden"></div>
      <svg id="board" class="board"></svg>
      <div id="toasts" class="toasts"></div>
    `;
    this.svg = root.querySelector("#board")!;
    this.orbitLabel = root.querySelector("#orbit-label")!;
    this.weightLabel = root.querySelector("#weight-label")!;
    this.subspaceLabel = root.querySelector("#subspace-label")!;
    this.banner = root.querySelector("#banner")!;
    this.toasts = root.querySelector("#toasts")!;
    this.historyLabel = root.querySelector("#history-label")!;
    this.bind();
  }

  private query<T extends HTMLElement>(selector: string): T {
    return this.root.querySelector(selector) as T;
  }

  private bind(): void {
    const familySelect = this.query<HTMLSelectElement>("#family");
    familySelect.addEventListener("change", () => {
      this.query<HTMLElement>(".custom-only").classList.toggle(
        "hidden",
        familySelect.value !== "custom",
      );
      const min = FAMILY_MIN[familySelect.value];
      const nInput = this.query<HTMLInputElement>("#n");
      if (min && Number(nInput.value) < min) nInput.value = String(min);
    });
    this.query("#btn-new").addEventListener("click", () => void this.newBoard());
    this.query("#btn-scramble").addEventListener("click", () => void this.scramble());
    this.query("#btn-undo").addEventListener("click", () => void this.undoMove());
    this.query("#btn-target").addEventListener("click", () => {
      this.applyTarget(this.query<HTMLInputElement>("#target-config").value.trim());
    });
    this.query("#btn-clear-target").addEventListener("click", () => this.applyTarget(null));
    this.query("#btn-hint").addEventListener("click", () => void this.hint());
    this.query("#btn-solve").addEventListener("click", () => void this.playSolution());
  }

  toast(message: string, kind: "info" | "error" = "info"): void {
    const el = document.createElement("div");
    el.className = `toast ${kind}`;
    el.textContent = message;
    this.toasts.appendChild(el);
    setTimeout(() => el.remove(), 4000);
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | undefined> {
    try {
      return await work();
    } catch (error) {
      if (error instanceof ApiError) {
        this.toast(error.message, "error");
      } else {
        this.toast(String(error), "error");
      }
      return undefined;
    }
  }

  async newBoard(): Promise<void> {
    await this.guard(async () => {
      const family = this.query<HTMLSelectElement>("#family").value;
      let graph: GraphJson;
      if (family === "custom") {
        const text = this.query<HTMLInputElement>("#custom-json").value;
        const parsed = JSON.parse(text) as GraphJson;
        graph = { n: parsed.n, edges: parsed.edges, family: "custom" };
      } else {
        const n = Number(this.query<HTMLInputElement>("#n").value);
        graph = await this.client.getGraph(family, n);
      }
      this.state = createBoard(graph, "1".repeat(graph.n));
      this.hintVertex = null;
      this.lastFlipped = [];
      this.clearBanner();
      await this.refreshClassify();
      this.render();
    });
  }

  /** Load an existing graph and configuration (used by tests). */
  async loadBoard(graph: GraphJson, config: string): Promise<void> {
    this.state = createBoard(graph, config);
    this.hintVertex = null;
    this.lastFlipped = [];
    this.clearBanner();
    await this.refreshClassify();
    this.render();
  }

  async clickVertex(vertex: number): Promise<void> {
    if (!this.state || this.busy) return;
    await this.guard(async () => {
      const before = currentConfig(this.state!);
      const result = await this.client.move(this.state!.graph, before, vertex);
      if (!result.changed) {
        this.toast("feigning move — no effect");
        return;
      }
      this.state = applyMove(this.state!, vertex, result.config);
      this.lastFlipped = flippedVertices(before, result.config);
      this.hintVertex = null;
      this.clearBanner();
      await this.refreshClassify();
      this.render();
      if (isSolved(this.state!)) this.toast("solved!");
    });
  }

  async undoMove(): Promise<void> {
    if (!this.state || !canUndo(this.state)) return;
    this.state = undo(this.state);
    this.hintVertex = null;
    this.lastFlipped = [];
    await this.refreshClassify();
    this.render();
  }

  async scramble(): Promise<void> {
    if (!this.state) return;
    await this.guard(async () => {
      const seed = (this.options.randomSeed ?? (() => Math.floor(Math.random() * 1e9)))();
      const result = await this.client.scramble(
        this.state!.graph,
        currentConfig(this.state!),
        20,
        seed,
      );
      this.state = resetTo(this.state!, result.config);
      this.hintVertex = null;
      this.lastFlipped = [];
      this.clearBanner();
      await this.refreshClassify();
      this.render();
    });
  }

  applyTarget(target: string | null): void {
    if (!this.state) return;
    if (target === "") target = null;
    try {
      this.state = setTarget(this.state, target);
    } catch (error) {
      this.toast(String(error), "error");
      return;
    }
    this.clearBanner();
    this.render();
  }

  async hint(): Promise<void> {
    const plan = await this.requestSolution();
    if (!plan) return;
    if (plan.length === 0) {
      this.toast("already solved");
      return;
    }
    this.hintVertex = plan[0];
    this.toast(`press s${plan[0]}`);
    this.render();
  }

  async playSolution(): Promise<void> {
    const plan = await this.requestSolution();
    if (!plan) return;
    if (plan.length === 0) {
      this.toast("already solved");
      return;
    }
    this.busy = true;
    try {
      for (const vertex of plan) {
        const before = currentConfig(this.state!);
        const result = await this.client.move(this.state!.graph, before, vertex);
        this.state = applyMove(this.state!, vertex, result.config);
        this.lastFlipped = flippedVertices(before, result.config);
        this.render();
        if (this.options.stepDelayMs !== 0) {
          await sleep(this.options.stepDelayMs ?? 350);
        }
      }
      await this.refreshClassify();
      this.render();
      if (isSolved(this.state!)) this.toast("solved!");
    } finally {
      this.busy = false;
    }
  }

  /** Ask the service for a move sequence to the target, or explain why not. */
  private async requestSolution(): Promise<number[] | undefined> {
    if (!this.state) return undefined;
    if (this.state.target === null) {
      this.toast("set a target first", "error");
      return undefined;
    }
    return await this.guard(async () => {
      const result = await this.client.solve(
        this.state!.graph,
        currentConfig(this.state!),
        this.state!.target!,
      );
      if (!result.reachable) {
        this.showBanner(
          result.from_label && result.to_label
            ? `you are in ${result.from_label}, target is in ${result.to_label} — no sequence exists`
            : "the target is in a different orbit — no sequence exists",
        );
        return undefined;
      }
      return result.moves;
    });
  }

  private async refreshClassify(): Promise<void> {
    if (!this.state) return;
    const { family, n } = this.state.graph;
    if (family !== "A" && family !== "D" && family !== "E") {
      this.orbitLabel.textContent = "—";
      this.weightLabel.textContent = "—";
      this.subspaceLabel.classList.add("hidden");
      return;
    }
    const classify = await this.guard(() =>
      this.client.classify(family, n, currentConfig(this.state!)),
    );
    if (!classify) return;
    this.state = withClassify(this.state, classify);
    this.orbitLabel.textContent = classify.label;
    this.weightLabel.textContent = String(classify.weight);
    if (classify.in_Z !== undefined) {
      this.subspaceLabel.textContent = classify.in_Z ? "inside Z" : "outside Z";
      this.subspaceLabel.classList.remove("hidden");
    } else {
      this.subspaceLabel.classList.add("hidden");
    }
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
  }

  private clearBanner(): void {
    this.banner.textContent = "";
    this.banner.classList.add("hidden");
  }

  render(): void {
    if (!this.state) return;
    renderBoard(this.svg, this.state, {
      hint: this.hintVertex,
      flipped: this.lastFlipped,
      onVertexClick: (vertex) => void this.clickVertex(vertex),
    });
    this.historyLabel.textContent = String(this.state.moves.length);
    const config = currentConfig(this.state);
    this.svg.setAttribute("data-config", config);
    this.svg.setAttribute("data-black", blackVertices(config).join(","));
  }

  /** Exposed for tests: is the given vertex currently black? */
  vertexIsBlack(vertex: number): boolean {
    return this.state !== null && bitAt(currentConfig(this.state), vertex);
  }
}

export function mountApp(
  root: HTMLElement,
  client: Client = new Client(),
  options: AppOptions = {},
): BoardApp {
  return new BoardApp(root, client, options);
}
