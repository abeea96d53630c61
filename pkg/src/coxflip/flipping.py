"""Move matrices of the flipping puzzle and their defining relations.

The move matrix of a vertex s is the identity plus extra ones in column s
at the rows of the neighbors of s.  Applied to a configuration it flips
the neighbors of s when s is black, and does nothing when s is white (a
"feigning move").  The single-column part E_s = move - I drives the
relation checks: products of E's along graph walks collapse, which forces
the braid and commutation relations on the move matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RangeError
from .gf2 import Gf2Matrix, Gf2Vector, identity_cols, mat_mul, mat_vec
from .graphs import CoxeterGraph


def generator_matrix(g: CoxeterGraph, s: int) -> Gf2Matrix:
    """Move matrix of vertex s: ones on the diagonal and at (u, s) for u ~ s."""
    if not 1 <= s <= g.n:
        raise RangeError(f"vertex {s} out of range 1..{g.n}")
    cols = list(identity_cols(g.n))
    cols[s - 1] |= g.neighbor_masks[s - 1]
    return Gf2Matrix(g.n, tuple(cols))


def generators(g: CoxeterGraph) -> list[Gf2Matrix]:
    return [generator_matrix(g, s) for s in range(1, g.n + 1)]


def e_matrix(g: CoxeterGraph, s: int) -> Gf2Matrix:
    """The single-column part of the move matrix: column s = neighbor sum."""
    if not 1 <= s <= g.n:
        raise RangeError(f"vertex {s} out of range 1..{g.n}")
    cols = [0] * g.n
    cols[s - 1] = g.neighbor_masks[s - 1]
    return Gf2Matrix(g.n, tuple(cols))


def apply_move(g: CoxeterGraph, config: Gf2Vector, s: int) -> Gf2Vector:
    """Apply the move matrix of s to a configuration.

    Deliberately the full matrix product; that it flips exactly the
    neighbors of s when config_s = 1 and does nothing when config_s = 0
    is a tested consequence, not a code path.
    """
    return mat_vec(generator_matrix(g, s), config)


def legal_moves(g: CoxeterGraph, config: Gf2Vector) -> frozenset[int]:
    """Vertices that are black (selectable) in the configuration."""
    return config.support()


@dataclass(frozen=True)
class RelationReport:
    """Outcome of checking every defining identity on a graph."""

    graph: CoxeterGraph
    involution_failures: tuple[int, ...]
    decomposition_failures: tuple[int, ...]
    braid_failures: tuple[tuple[int, int], ...]
    e_product_failures: tuple[tuple[int, int], ...]
    walk_failures: tuple[tuple[int, ...], ...]
    pair_count: int
    walk_count: int

    @property
    def all_pass(self) -> bool:
        return not (
            self.involution_failures
            or self.decomposition_failures
            or self.braid_failures
            or self.e_product_failures
            or self.walk_failures
        )

    def failures(self) -> list[str]:
        out = [f"move {s} is not an involution" for s in self.involution_failures]
        out += [f"move {s} != I + E_{s}" for s in self.decomposition_failures]
        out += [f"(s{u} s{v})^m != I for m = m({u},{v})" for u, v in self.braid_failures]
        out += [f"E_{u} E_{v} != 0 for non-edge ({u},{v})" for u, v in self.e_product_failures]
        out += [f"walk identity failed on {w}" for w in self.walk_failures]
        return out


def verify_coxeter_relations(g: CoxeterGraph) -> RelationReport:
    """Check involutions, commutation/braid relations and the E-identities.

    Walk identities are checked on all walks of length <= 3 whose
    endpoints coincide or are adjacent; longer walks reduce to these.
    """
    gens = {s: generator_matrix(g, s) for s in range(1, g.n + 1)}
    es = {s: e_matrix(g, s) for s in range(1, g.n + 1)}
    ident = Gf2Matrix.identity(g.n)
    zero = Gf2Matrix.zero(g.n)

    involution_failures = tuple(s for s in gens if mat_mul(gens[s], gens[s]) != ident)
    decomposition_failures = tuple(s for s in gens if ident ^ es[s] != gens[s])

    braid_failures = []
    e_product_failures = []
    pair_count = 0
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            pair_count += 1
            prod = mat_mul(gens[u], gens[v])
            order = 3 if g.has_edge(u, v) else 2
            power = ident
            for _ in range(order):
                power = mat_mul(power, prod)
            if power != ident:
                braid_failures.append((u, v))
            if not g.has_edge(u, v):
                if mat_mul(es[u], es[v]) != zero or mat_mul(es[v], es[u]) != zero:
                    e_product_failures.append((u, v))

    # E_{s_t} ... E_{s_0} over walks with adjacent consecutive vertices:
    # equals E_{s_0} when the endpoints coincide, E_{s_t} E_{s_0} when they
    # are adjacent.
    walk_failures: list[tuple[int, ...]] = []
    walk_count = 0

    def extend(walk: tuple[int, ...], product: Gf2Matrix) -> None:
        nonlocal walk_count
        t = len(walk) - 1
        head, tail = walk[-1], walk[0]
        if t >= 1:
            expected = None
            if head == tail:
                expected = es[tail]
            elif g.has_edge(head, tail):
                expected = mat_mul(es[head], es[tail])
            if expected is not None:
                walk_count += 1
                if product != expected:
                    walk_failures.append(walk)
        if t >= 3:
            return
        mask = g.neighbor_masks[head - 1]
        for nxt in range(1, g.n + 1):
            if (mask >> (nxt - 1)) & 1:
                extend(walk + (nxt,), mat_mul(es[nxt], product))

    for start in range(1, g.n + 1):
        extend((start,), es[start])

    return RelationReport(
        graph=g,
        involution_failures=involution_failures,
        decomposition_failures=decomposition_failures,
        braid_failures=tuple(braid_failures),
        e_product_failures=tuple(e_product_failures),
        walk_failures=tuple(walk_failures),
        pair_count=pair_count,
        walk_count=walk_count,
    )
