"""Named homomorphisms between flipping groups and permutation groups.

Every A/D/E flipping group permutes its chain of simple-basis vectors
(families A and E permute the whole chain; family D permutes the first n
while the last one picks up a translation).  The maps here move between
matrices and those permutations in both directions, build the explicit
central involution of the E7-inside-E8 subgroup from its published word,
and account for kernel sizes against the classical Weyl group orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotPermutationError, RangeError, UnsupportedFamilyError
from .flipping import generator_matrix, generators
from .gf2 import Gf2Matrix, Gf2Vector, mat_mul, mat_vec
from .graphs import FAMILY_A, FAMILY_D, FAMILY_E, build_family
from .groups import StabilizerChain, enumerate_group, order_schreier_sims, restriction
from .orbits import SimpleBasis, in_subspace_z, o1_size, simple_basis


# ---------------------------------------------------------------------------
# permutations on 1-based points

@dataclass(frozen=True)
class Permutation:
    """Bijection of {1, ..., degree}; images[i] is the image of point i+1."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise NotPermutationError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(1, degree + 1)))

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for i, a in enumerate(cycle):
                images[a - 1] = cycle[(i + 1) % len(cycle)]
        return Permutation(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(x) = self(other(x))."""
        if self.degree != other.degree:
            raise NotPermutationError("degree mismatch")
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def to_cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        cycles = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            cycles.append(tuple(cycle))
        return cycles


# ---------------------------------------------------------------------------
# induced permutations and their inverse lifts

def induced_permutation(basis: SimpleBasis, m: Gf2Matrix, degree: int) -> Permutation:
    """Permutation of the chain vectors 1..degree induced by the matrix.

    Raises NotPermutationError when some image leaves the chain family,
    which signals a matrix outside the group (or the wrong family).
    """
    index = {basis.overline(j).bits: j for j in range(1, degree + 1)}
    images = []
    for j in range(1, degree + 1):
        image = mat_vec(m, basis.overline(j))
        k = index.get(image.bits)
        if k is None:
            raise NotPermutationError(
                f"image of chain vector {j} is not a chain vector"
            )
        images.append(k)
    return Permutation(tuple(images))


def alpha_image(basis: SimpleBasis, m: Gf2Matrix) -> Permutation:
    """Family A: the induced permutation of all n+1 chain vectors."""
    if basis.family != FAMILY_A:
        raise UnsupportedFamilyError("alpha_image needs an A-family basis")
    return induced_permutation(basis, m, basis.n + 1)


def beta_image(basis: SimpleBasis, m: Gf2Matrix) -> Permutation:
    """Family D: the induced permutation of the first n chain vectors."""
    if basis.family != FAMILY_D:
        raise UnsupportedFamilyError("beta_image needs a D-family basis")
    return induced_permutation(basis, m, basis.n)


def epsilon_image(basis: SimpleBasis, m: Gf2Matrix) -> Permutation:
    """Family E: the induced permutation of the n basis vectors."""
    if basis.family != FAMILY_E:
        raise UnsupportedFamilyError("epsilon_image needs an E-family basis")
    return induced_permutation(basis, m, basis.n)


def perm_lift(basis: SimpleBasis, perm: Permutation) -> Gf2Matrix:
    """The unique matrix sending chain vector j to chain vector perm(j).

    Chain vectors beyond the permutation's degree are fixed.  For the E
    family this inverts ``epsilon_image``; for the D family (degree n) it
    realizes the action of a permutation on the invariant subspace.
    """
    columns = []
    for label in basis.labels:
        image_label = perm(label) if label <= perm.degree else label
        columns.append(basis.overline(image_label))
    return mat_mul(Gf2Matrix.from_columns(columns), basis.inverse)


# ---------------------------------------------------------------------------
# the D-family semidirect picture

@dataclass(frozen=True)
class SemidirectElement:
    """Pair (translation in Z, permutation of the first n chain vectors)."""

    translation: Gf2Vector
    perm: Permutation


def delta_image(basis: SimpleBasis, m: Gf2Matrix) -> SemidirectElement:
    """Family D: split a group element into translation and permutation parts."""
    if basis.family != FAMILY_D:
        raise UnsupportedFamilyError("delta_image needs a D-family basis")
    top = basis.overline(basis.n + 1)
    translation = top ^ mat_vec(m, top)
    if not in_subspace_z(basis, translation):
        raise NotPermutationError("translation part escaped the invariant subspace")
    return SemidirectElement(translation=translation, perm=beta_image(basis, m))


def semidirect_mul(
    basis: SimpleBasis, x: SemidirectElement, y: SemidirectElement
) -> SemidirectElement:
    """(u, s)(v, t) = (u + s.v, st), with s acting on Z through its lift."""
    acted = mat_vec(perm_lift(basis, x.perm), y.translation)
    return SemidirectElement(
        translation=x.translation ^ acted, perm=x.perm.compose(y.perm)
    )


# ---------------------------------------------------------------------------
# the central involution of the E7 subgroup of E8

_E8_W0_CYCLES: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((2, 8, 3, 7, 4, 6, 5),),
    ((5, 8), (4, 7), (3, 6)),
    ((4, 8), (3, 7), (2, 6)),
    ((5, 8), (4, 7)),
    ((3, 7), (2, 6)),
)


def build_e8_w0() -> Gf2Matrix:
    """Image of the longest element of the E7 subgroup inside E8.

    The product interleaves five permutation lifts with the move matrix
    of vertex 8, read left to right and acting by left multiplication.
    """
    basis = simple_basis(FAMILY_E, 8)
    s8 = generator_matrix(build_family(FAMILY_E, 8), 8)
    result = Gf2Matrix.identity(8)
    for cycles in _E8_W0_CYCLES:
        lift = perm_lift(basis, Permutation.from_cycles(8, cycles))
        result = mat_mul(mat_mul(result, lift), s8)
    return result


# ---------------------------------------------------------------------------
# kernel accounting

def classical_weyl_order(family: str, n: int) -> int:
    """Order of the finite Coxeter group of the given type."""
    if family == FAMILY_A:
        if n < 1:
            raise RangeError("A_n needs n >= 1")
        return math.factorial(n + 1)
    if family == FAMILY_D:
        if n < 4:
            raise RangeError("D_n needs n >= 4")
        return 2 ** (n - 1) * math.factorial(n)
    if family == FAMILY_E:
        orders = {6: 51840, 7: 2903040, 8: 696729600}
        if n not in orders:
            raise RangeError(f"E_{n} is not a finite type")
        return orders[n]
    raise UnsupportedFamilyError(f"no classical order for family {family!r}")


def flipping_group_order(family: str, n: int) -> int:
    """Exact order of the family's flipping group, via a stabilizer chain."""
    return order_schreier_sims(generators(build_family(family, n)))


def kernel_order(family: str, n: int) -> int:
    """Classical order divided by the flipping group order, exactly."""
    total = classical_weyl_order(family, n)
    image = flipping_group_order(family, n)
    if total % image:
        raise ArithmeticError(
            f"flipping group order {image} does not divide {total} for {family}_{n}"
        )
    return total // image


@dataclass(frozen=True)
class DivisibilityReport:
    """|subgroup on vertices 2..n| * |orbit of the first basis vector|."""

    n: int
    subgroup_order: int
    orbit_size: int
    group_order: int

    @property
    def product(self) -> int:
        return self.subgroup_order * self.orbit_size

    @property
    def divides(self) -> bool:
        return self.group_order % self.product == 0

    @property
    def equals(self) -> bool:
        return self.group_order == self.product


def verify_divisibility_e(n: int) -> DivisibilityReport:
    """Check the counting identity for E_n, n in {6, 7, 8}."""
    if n not in (6, 7, 8):
        raise RangeError(f"divisibility check is for n in 6..8, got {n}")
    g = build_family(FAMILY_E, n)
    pair = restriction(g, range(2, n + 1))
    subgroup_order = enumerate_group(pair.sub_generators).order
    group_order = (
        StabilizerChain(generators(g)).order if n == 8 else enumerate_group(generators(g)).order
    )
    return DivisibilityReport(
        n=n,
        subgroup_order=subgroup_order,
        orbit_size=o1_size(n),
        group_order=group_order,
    )
