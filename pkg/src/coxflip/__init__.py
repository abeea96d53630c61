"""Flipping puzzles on simply-laced Coxeter graphs over GF(2)."""

from .errors import (
    BackendError,
    CapacityError,
    CoxflipError,
    DimensionError,
    NotPermutationError,
    RangeError,
    SingularError,
    UnsupportedFamilyError,
    ValidationError,
)
from .gf2 import Gf2Matrix, Gf2Vector, mat_inverse, mat_mul, mat_vec, rank
from .graphs import CoxeterGraph, build_custom, build_family, neighbors
from .flipping import (
    RelationReport,
    apply_move,
    e_matrix,
    generator_matrix,
    generators,
    legal_moves,
    verify_coxeter_relations,
)
from .groups import (
    ExplicitSet,
    MatrixGroup,
    RestrictionPair,
    StabilizerChain,
    center,
    enumerate_group,
    membership,
    order_schreier_sims,
    restriction,
)
from .orbits import (
    OrbitClass,
    OrbitPartition,
    SimpleBasis,
    classify,
    classifier_fibers,
    in_subspace_z,
    is_irreducible,
    o1_size,
    orbit_labels,
    orbit_of,
    orbit_partition,
    simple_basis,
    weight,
)
from .solver import MoveSequence, Unreachable, equivalent, scramble, solve
from .structure import (
    DivisibilityReport,
    Permutation,
    SemidirectElement,
    alpha_image,
    beta_image,
    build_e8_w0,
    classical_weyl_order,
    delta_image,
    epsilon_image,
    flipping_group_order,
    kernel_order,
    perm_lift,
    semidirect_mul,
    verify_divisibility_e,
)

__version__ = "0.1.0"
