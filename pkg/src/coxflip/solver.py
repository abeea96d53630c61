"""Reachability between configurations, with explicit move sequences.

A legal move keeps the selected vertex black, so every legal move undoes
itself and the reachability graph on configurations is undirected; a
plain breadth-first search with parent pointers both decides equivalence
and produces a replayable solution.  For the A/D/E families the orbit
classifier answers the unreachable case in O(n) without any search.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import CapacityError, RangeError
from .flipping import apply_move
from .gf2 import Gf2Vector
from .graphs import FAMILY_MIN_N, CoxeterGraph
from .orbits import classify, state_cap


@dataclass(frozen=True)
class MoveSequence:
    """Vertices to select in order; each is black when its turn comes."""

    moves: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.moves)


@dataclass(frozen=True)
class Unreachable:
    """No legal sequence exists; labels explain why for family graphs."""

    from_label: str | None = None
    to_label: str | None = None


def _check_pair(g: CoxeterGraph, a: Gf2Vector, b: Gf2Vector) -> None:
    if a.n != g.n or b.n != g.n:
        raise RangeError(
            f"configurations of lengths {a.n}, {b.n} do not fit a graph on {g.n} vertices"
        )


def _labels(g: CoxeterGraph, a: Gf2Vector, b: Gf2Vector) -> tuple[str | None, str | None]:
    if g.family in FAMILY_MIN_N:
        return classify(g.family, g.n, a), classify(g.family, g.n, b)
    return None, None


def _bfs_parents(g: CoxeterGraph, start: int, target: int):
    """Parent map of the legal-move search from start, stopping at target."""
    masks = g.neighbor_masks
    n = g.n
    cap = state_cap()
    parents: dict[int, tuple[int, int]] = {start: (start, 0)}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == target:
            return parents
        for j in range(n):
            if (v >> j) & 1:
                w = v ^ masks[j]
                if w not in parents:
                    if len(parents) >= cap:
                        raise CapacityError("solve search exceeded the state cap")
                    parents[w] = (v, j + 1)
                    queue.append(w)
    return parents if target in parents else None


def equivalent(g: CoxeterGraph, a: Gf2Vector, b: Gf2Vector) -> bool:
    """Can b be reached from a by legal moves?"""
    _check_pair(g, a, b)
    if g.family in FAMILY_MIN_N:
        la, lb = _labels(g, a, b)
        return la == lb
    return _bfs_parents(g, a.bits, b.bits) is not None


def solve(g: CoxeterGraph, a: Gf2Vector, b: Gf2Vector) -> MoveSequence | Unreachable:
    """A legal move sequence from a to b, or Unreachable with labels."""
    _check_pair(g, a, b)
    la, lb = _labels(g, a, b)
    if la is not None and la != lb:
        return Unreachable(from_label=la, to_label=lb)
    parents = _bfs_parents(g, a.bits, b.bits)
    if parents is None or b.bits not in parents:
        return Unreachable(from_label=la, to_label=lb)
    moves: list[int] = []
    v = b.bits
    while v != a.bits:
        v, s = parents[v]
        moves.append(s)
    moves.reverse()
    _check_replay(g, a, b, moves)
    return MoveSequence(moves=tuple(moves))


def _check_replay(g: CoxeterGraph, a: Gf2Vector, b: Gf2Vector, moves: list[int]) -> None:
    current = a
    for s in moves:
        if not current.bit(s):
            raise RuntimeError(f"solver produced an illegal move {s} at {current}")
        current = apply_move(g, current, s)
    if current != b:
        raise RuntimeError("solver sequence does not replay to the target")


def scramble(g: CoxeterGraph, a: Gf2Vector, k: int, seed: int) -> Gf2Vector:
    """Apply k random legal moves; turns with no legal move are skipped."""
    if k < 0:
        raise RangeError(f"move count must be nonnegative, got {k}")
    if a.n != g.n:
        raise RangeError("configuration does not fit the graph")
    rng = random.Random(seed)
    bits = a.bits
    masks = g.neighbor_masks
    for _ in range(k):
        legal = [j for j in range(g.n) if (bits >> j) & 1]
        if not legal:
            break
        bits ^= masks[rng.choice(legal)]
    return Gf2Vector(g.n, bits)
