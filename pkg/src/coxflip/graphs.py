"""Simply-laced Coxeter graphs, including the named A/D/E families.

Vertices are labeled 1..n and stand for the generators s_1..s_n; an edge
{u, v} means the two generators braid (m = 3), a non-edge means they
commute (m = 2).  The named families use the labelings

    A_n:  path 1 - 2 - ... - n
    D_n:  path 1 - ... - (n-1), with n also attached to n-2  (n >= 4)
    E_n:  path 1 - ... - (n-1), with n attached to n-3       (n >= 6)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import RangeError, ValidationError
from .gf2 import N_MAX

FAMILY_A = "A"
FAMILY_D = "D"
FAMILY_E = "E"
FAMILY_CUSTOM = "custom"

FAMILY_MIN_N = {FAMILY_A: 1, FAMILY_D: 4, FAMILY_E: 6}


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CoxeterGraph:
    """A simple graph on vertices 1..n with an optional family tag."""

    n: int
    edges: frozenset[tuple[int, int]]
    family: str = FAMILY_CUSTOM

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise ValidationError(f"vertex count must be in 1..{N_MAX}, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(f"edge ({u},{v}) has an endpoint outside 1..{self.n}")
            if u > v:
                raise ValidationError(f"edge ({u},{v}) is not normalized")

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Bitmask of the neighbors of each vertex; index j is vertex j+1."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def degree(self, s: int) -> int:
        return self.neighbor_masks[s - 1].bit_count()

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            grown = seen
            v = frontier
            i = 0
            while v:
                if v & 1:
                    grown |= self.neighbor_masks[i]
                v >>= 1
                i += 1
            frontier = grown & ~seen
            seen = grown
        return seen == (1 << self.n) - 1

    def induced_subgraph(self, vertices: Iterable[int]) -> "CoxeterGraph":
        """Subgraph on the given vertices, relabeled 1..|J| in sorted order."""
        ordered = sorted(set(vertices))
        if not ordered:
            raise RangeError("vertex subset must be nonempty")
        if ordered[0] < 1 or ordered[-1] > self.n:
            raise RangeError(f"subset {ordered} not within 1..{self.n}")
        index = {v: i + 1 for i, v in enumerate(ordered)}
        edges = frozenset(
            _normalize_edge(index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        )
        return CoxeterGraph(len(ordered), edges, FAMILY_CUSTOM)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": sorted([u, v] for u, v in self.edges),
            "family": self.family,
        }

    @staticmethod
    def from_json(data: Mapping) -> "CoxeterGraph":
        try:
            n = int(data["n"])
            raw_edges = list(data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad graph JSON: {exc}") from exc
        family = data.get("family", FAMILY_CUSTOM)
        if family in FAMILY_MIN_N:
            g = build_family(family, n)
            given = frozenset(_normalize_edge(int(u), int(v)) for u, v in raw_edges)
            if given != g.edges:
                raise ValidationError(f"edges do not match family {family}_{n}")
            return g
        return build_custom(n, [(int(u), int(v)) for u, v in raw_edges])


def build_family(family: str, n: int) -> CoxeterGraph:
    """Construct A_n, D_n or E_n with the canonical labeling."""
    if family not in FAMILY_MIN_N:
        raise ValidationError(f"unknown family {family!r}, expected one of A, D, E")
    if n < FAMILY_MIN_N[family]:
        raise RangeError(f"{family}_n needs n >= {FAMILY_MIN_N[family]}, got {n}")
    if family == FAMILY_A:
        edges = [(i, i + 1) for i in range(1, n)]
    elif family == FAMILY_D:
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    else:
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 3, n)]
    return CoxeterGraph(n, frozenset(edges), family)


def build_custom(n: int, edges: Iterable[tuple[int, int]]) -> CoxeterGraph:
    """Validate and build an arbitrary simple graph on 1..n."""
    if n < 1:
        raise ValidationError(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValidationError(f"edge ({u},{v}) has an endpoint outside 1..{n}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise ValidationError(f"duplicate edge ({u},{v})")
        seen.add(e)
    return CoxeterGraph(n, frozenset(seen), FAMILY_CUSTOM)


def neighbors(g: CoxeterGraph, s: int) -> frozenset[int]:
    """The vertices adjacent to s."""
    if not 1 <= s <= g.n:
        raise RangeError(f"vertex {s} out of range 1..{g.n}")
    mask = g.neighbor_masks[s - 1]
    return frozenset(i + 1 for i in range(g.n) if (mask >> i) & 1)
