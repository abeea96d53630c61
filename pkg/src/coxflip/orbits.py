"""Orbits of configurations under the flipping group.

For the A/D/E families the orbits have closed-form descriptions: expand a
configuration in the family's "simple basis" (built here by applying the
move matrices to the first standard vector) and read off its weight, the
number of basis vectors appearing.  Orbit membership is then a weight
condition, which ``classify`` evaluates in O(n) column operations.  The
brute-force breadth-first partition of all 2**n configurations is kept as
the independent route; the two must agree fiber-for-fiber.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import CapacityError, RangeError, UnsupportedFamilyError
from .flipping import generators
from .gf2 import Gf2Matrix, Gf2Vector, SpanBasis, mat_inverse, mat_vec, vec_apply
from .graphs import FAMILY_A, FAMILY_D, FAMILY_MIN_N, build_family

DEFAULT_STATE_CAP = 1 << 24


def state_cap() -> int:
    """Max number of configurations a breadth-first search may visit."""
    return int(os.environ.get("COXFLIP_STATE_CAP", DEFAULT_STATE_CAP))


# ---------------------------------------------------------------------------
# simple bases

@dataclass(frozen=True)
class SimpleBasis:
    """Family basis of F_2^n plus the one distinguished non-basis vector.

    ``matrix`` holds the basis vectors as columns; ``labels[j]`` is the
    index of the vector in column j+1 within the chain 1, 2, ..., n+1
    built from the recurrence.  ``extra`` is the remaining member of that
    chain (index ``extra_label``), which is a sum of basis columns.
    """

    family: str
    n: int
    matrix: Gf2Matrix
    inverse: Gf2Matrix
    labels: tuple[int, ...]
    extra: Gf2Vector
    extra_label: int

    def overline(self, j: int) -> Gf2Vector:
        """The j-th chain vector, 1 <= j <= n+1."""
        if j == self.extra_label:
            return self.extra
        try:
            pos = self.labels.index(j)
        except ValueError:
            raise RangeError(f"chain index {j} out of range 1..{self.n + 1}") from None
        return self.matrix.column(pos + 1)

    def coordinates(self, a: Gf2Vector) -> Gf2Vector:
        """Expansion of a over the basis columns."""
        return mat_vec(self.inverse, a)


@lru_cache(maxsize=None)
def simple_basis(family: str, n: int) -> SimpleBasis:
    """Build the family basis by driving s_1-tilde through the moves.

    The chain starts at the characteristic vector of s_1 and each next
    vector is the previous one hit by the next move matrix; the vector
    n+1 (families A, E) or n (family D) is the one left out of the basis.
    """
    if family not in FAMILY_MIN_N:
        raise UnsupportedFamilyError(f"no simple basis for family {family!r}")
    g = build_family(family, n)
    gens = generators(g)
    chain = [Gf2Vector.unit(n, 1)]
    top = n if family == FAMILY_A else n - 1
    for i in range(1, top + 1):
        chain.append(mat_vec(gens[i - 1], chain[-1]))
    if family == FAMILY_A:
        columns, labels = chain[:n], tuple(range(1, n + 1))
        extra, extra_label = chain[n], n + 1
    elif family == FAMILY_D:
        columns = chain[: n - 1] + [Gf2Vector.unit(n, n)]
        labels = tuple(range(1, n)) + (n + 1,)
        extra, extra_label = chain[n - 1], n
    else:
        columns, labels = chain[:n], tuple(range(1, n + 1))
        extra, extra_label = Gf2Vector.unit(n, n), n + 1
    matrix = Gf2Matrix.from_columns(columns)
    return SimpleBasis(
        family=family,
        n=n,
        matrix=matrix,
        inverse=mat_inverse(matrix),
        labels=labels,
        extra=extra,
        extra_label=extra_label,
    )


def weight(basis: SimpleBasis, a: Gf2Vector) -> int:
    """Number of basis vectors in the expansion of a."""
    return basis.coordinates(a).popcount()


def in_subspace_z(basis: SimpleBasis, a: Gf2Vector) -> bool:
    """Family D: is a inside the span of the first n-1 basis vectors?"""
    if basis.family != FAMILY_D:
        raise UnsupportedFamilyError("the invariant subspace Z is a D-family notion")
    return basis.coordinates(a).bit(basis.n) == 0


# ---------------------------------------------------------------------------
# closed-form classification

LABEL_OMEGA_ODD = "Omega_o"
LABEL_OMEGA_EVEN = "Omega_e"


def orbit_labels(family: str, n: int, a: Gf2Vector) -> tuple[str, ...]:
    """All label names whose defining weight condition a satisfies."""
    if family not in FAMILY_MIN_N:
        raise UnsupportedFamilyError(f"no closed-form orbits for family {family!r}")
    basis = simple_basis(family, n)
    if a.n != n:
        raise RangeError(f"configuration has length {a.n}, expected {n}")
    wt = weight(basis, a)
    if family == FAMILY_A:
        return (f"O{min(wt, n + 1 - wt)}",)
    if family == FAMILY_D:
        if in_subspace_z(basis, a):
            return (f"O{min(wt, n - wt)}",)
        names = []
        if wt % 2 == 1 or wt % 2 == (n - 1) % 2:
            names.append(LABEL_OMEGA_ODD)
        if wt % 2 == 0 or wt % 2 == n % 2:
            names.append(LABEL_OMEGA_EVEN)
        return tuple(names)
    # family E
    if a.bits == 0:
        return ("O0",)
    r = wt % 4
    hits = set()
    for i, arms in ((1, (1, n - 2)), (2, (2, n - 3)), (3, (3, n)), (4, (0, n - 1))):
        if r in {arm % 4 for arm in arms}:
            hits.add(i)
    return tuple(f"O{i}" for i in sorted(hits))


def classify(family: str, n: int, a: Gf2Vector) -> str:
    """Canonical orbit label of a configuration (smallest label wins)."""
    return orbit_labels(family, n, a)[0]


def o1_size(n: int) -> int:
    """Closed-form size of the E-family orbit of the first basis vector."""
    if n < 6:
        raise RangeError(f"the E family needs n >= 6, got {n}")
    r = n % 4
    if r == 0:
        return 2 ** (n - 1) - (-1) ** (n // 4) * 2 ** ((n - 2) // 2)
    if r == 1:
        return 2 ** (n - 1)
    if r == 2:
        return 2 ** (n - 1) + (-1) ** ((n - 2) // 4) * 2 ** ((n - 2) // 2) - 1
    return 2 ** (n - 2) + (-1) ** ((n - 3) // 4) * 2 ** ((n - 3) // 2)


def classifier_fibers(family: str, n: int) -> dict[str, tuple[int, int]]:
    """Size and minimal representative of each canonical label's fiber."""
    if (1 << n) > state_cap():
        raise CapacityError(f"2**{n} configurations exceed the state cap")
    fibers: dict[str, tuple[int, int]] = {}
    for bits in range(1 << n):
        label = classify(family, n, Gf2Vector(n, bits))
        size, rep = fibers.get(label, (0, bits))
        fibers[label] = (size + 1, min(rep, bits))
    return fibers


# ---------------------------------------------------------------------------
# brute-force orbits

def _steppers(gens: Sequence[Gf2Matrix]):
    """Per-generator packed-state maps, specialized for move matrices.

    A move matrix differs from the identity in one column only, so its
    action on a configuration is a bit test plus an XOR; anything else
    falls back to the generic column fold.
    """
    steps = []
    for g in gens:
        diff = [(j, col ^ (1 << j)) for j, col in enumerate(g.cols) if col != 1 << j]
        if len(diff) == 1:
            j, mask = diff[0]
            steps.append(lambda v, j=j, mask=mask: v ^ mask if (v >> j) & 1 else v)
        elif not diff:
            steps.append(lambda v: v)
        else:
            cols = g.cols
            steps.append(lambda v, cols=cols: vec_apply(cols, v))
    return steps


def orbit_of(gens: Sequence[Gf2Matrix], a: Gf2Vector) -> frozenset[Gf2Vector]:
    """All configurations reachable from a under the generators."""
    if any(g.n != a.n for g in gens):
        raise RangeError("generator dimension does not match the configuration")
    steps = _steppers(gens)
    seen = {a.bits}
    queue = [a.bits]
    cap = state_cap()
    while queue:
        v = queue.pop()
        for step in steps:
            w = step(v)
            if w not in seen:
                if len(seen) >= cap:
                    raise CapacityError("orbit search exceeded the state cap")
                seen.add(w)
                queue.append(w)
    return frozenset(Gf2Vector(a.n, bits) for bits in seen)


@dataclass(frozen=True)
class OrbitClass:
    label: str
    representative: Gf2Vector
    size: int
    members: frozenset[int] | None

    def contains(self, a: Gf2Vector) -> bool:
        if self.members is None:
            raise CapacityError("orbit members were not materialized")
        return a.bits in self.members


@dataclass(frozen=True)
class OrbitPartition:
    n: int
    classes: tuple[OrbitClass, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def class_of(self, a: Gf2Vector) -> OrbitClass:
        for c in self.classes:
            if c.contains(a):
                return c
        raise RangeError(f"configuration {a} not covered by the partition")


_MEMBER_SET_LIMIT = 1 << 20


def orbit_partition(gens: Sequence[Gf2Matrix], n: int) -> OrbitPartition:
    """Partition all 2**n configurations into generator orbits.

    Classes come out ordered by minimal representative, which is also the
    representative reported; labels are positional ("c0", "c1", ...).
    """
    if (1 << n) > state_cap():
        raise CapacityError(f"2**{n} configurations exceed the state cap")
    if any(g.n != n for g in gens):
        raise RangeError("generator dimension does not match n")
    steps = _steppers(gens)
    visited = bytearray(1 << n)
    keep_members = (1 << n) <= _MEMBER_SET_LIMIT
    classes = []
    for start in range(1 << n):
        if visited[start]:
            continue
        members = [start]
        visited[start] = 1
        queue = [start]
        while queue:
            v = queue.pop()
            for step in steps:
                w = step(v)
                if not visited[w]:
                    visited[w] = 1
                    members.append(w)
                    queue.append(w)
        classes.append(
            OrbitClass(
                label=f"c{len(classes)}",
                representative=Gf2Vector(n, start),
                size=len(members),
                members=frozenset(members) if keep_members else None,
            )
        )
    return OrbitPartition(n=n, classes=tuple(classes))


# ---------------------------------------------------------------------------
# irreducibility

def invariant_closure_dim(gens: Sequence[Gf2Matrix], v: int, n: int) -> int:
    """Dimension of the smallest generator-stable subspace containing v.

    Iterates span -> apply generators -> re-span until stable.
    """
    span = SpanBasis([v])
    pending = [v]
    while pending:
        b = pending.pop()
        for g in gens:
            image = vec_apply(g.cols, b)
            if span.add(image):
                pending.append(image)
    return span.dim


def is_irreducible(gens: Sequence[Gf2Matrix], n: int) -> bool:
    """No nonzero proper subspace is stable under every generator.

    The smallest stable subspace containing v is spanned by the orbit of
    v, so its dimension is constant along an orbit; one representative
    per orbit covers every nonzero vector.
    """
    partition = orbit_partition(gens, n)
    for cls in partition.classes:
        rep = cls.representative.bits
        if rep == 0:
            continue
        if invariant_closure_dim(gens, rep, n) < n:
            return False
    return True
