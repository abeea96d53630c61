/** Board state and its pure transitions.
 *
 * The state never computes a configuration itself: every config string in
 * the history is one the service returned. `base` is the configuration
 * the history replays from; undoing pops the last record.
 */

import type { ClassifyResponse, GraphJson } from "./api.js";

export interface MoveRecord {
  vertex: number;
  /** configuration returned by the service after the move */
  config: string;
}

export interface BoardState {
  graph: GraphJson;
  base: string;
  moves: MoveRecord[];
  target: string | null;
  classify: ClassifyResponse | null;
}

export function createBoard(graph: GraphJson, config: string): BoardState {
  if (config.length !== graph.n) {
    throw new Error(`config ${config} does not fit a graph on ${graph.n} vertices`);
  }
  return { graph, base: config, moves: [], target: null, classify: null };
}

export function currentConfig(state: BoardState): string {
  const last = state.moves[state.moves.length - 1];
  return last ? last.config : state.base;
}

/** Append a move the service has confirmed (its resulting config). */
export function applyMove(state: BoardState, vertex: number, config: string): BoardState {
  return {
    ...state,
    moves: [...state.moves, { vertex, config }],
    classify: null,
  };
}

export function canUndo(state: BoardState): boolean {
  return state.moves.length > 0;
}

export function undo(state: BoardState): BoardState {
  if (!canUndo(state)) return state;
  return { ...state, moves: state.moves.slice(0, -1), classify: null };
}

/** Fresh configuration (new board or scramble result); history restarts. */
export function resetTo(state: BoardState, config: string): BoardState {
  if (config.length !== state.graph.n) {
    throw new Error(`config ${config} does not fit a graph on ${state.graph.n} vertices`);
  }
  return { ...state, base: config, moves: [], classify: null };
}

export function setTarget(state: BoardState, target: string | null): BoardState {
  if (target !== null && target.length !== state.graph.n) {
    throw new Error(`target ${target} does not fit a graph on ${state.graph.n} vertices`);
  }
  return { ...state, target };
}

export function withClassify(state: BoardState, classify: ClassifyResponse): BoardState {
  return { ...state, classify };
}

export function isSolved(state: BoardState): boolean {
  return state.target !== null && currentConfig(state) === state.target;
}

export function bitAt(config: string, vertex: number): boolean {
  return config.charAt(vertex - 1) === "1";
}

export function blackVertices(config: string): number[] {
  const out: number[] = [];
  for (let v = 1; v <= config.length; v++) {
    if (bitAt(config, v)) out.push(v);
  }
  return out;
}

/** Vertices whose state differs between two configurations. */
export function flippedVertices(before: string, after: string): number[] {
  const out: number[] = [];
  for (let v = 1; v <= before.length; v++) {
    if (before.charAt(v - 1) !== after.charAt(v - 1)) out.push(v);
  }
  return out;
}

/** History invariant: each record chains from the previous configuration. */
export function historyIsConsistent(
  state: BoardState,
  replayedConfigs: string[],
): boolean {
  if (replayedConfigs.length !== state.moves.length) return false;
  return state.moves.every((record, i) => record.config === replayedConfigs[i]);
}
