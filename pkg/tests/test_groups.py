import math

import pytest

from coxflip.errors import BackendError, CapacityError, ValidationError
from coxflip.flipping import generator_matrix, generators
from coxflip.gf2 import Gf2Matrix, mat_mul
from coxflip.graphs import build_custom, build_family
from coxflip.groups import (
    MatrixGroup,
    StabilizerChain,
    center,
    enumerate_group,
    membership,
    order_schreier_sims,
    restriction,
)


def test_enumerate_a2():
    es = enumerate_group(generators(build_family("A", 2)))
    assert es.order == 6


def test_enumerate_single_vertex():
    es = enumerate_group(generators(build_custom(1, [])))
    assert es.order == 1
    assert next(es.elements()).is_identity()


def test_enumerate_a_family_factorials():
    # n = 1 is the degenerate case: the single move matrix is the identity,
    # so the whole group collapses while the Coxeter group itself has order 2
    assert enumerate_group(generators(build_family("A", 1))).order == 1
    for n in range(2, 6):
        es = enumerate_group(generators(build_family("A", n)))
        assert es.order == math.factorial(n + 1)


def test_enumerate_closure_and_determinism():
    gens = generators(build_family("A", 3))
    es = enumerate_group(gens)
    keys = list(es.element_keys())
    assert keys == sorted(keys)
    ident = Gf2Matrix.identity(3)
    assert es.contains(ident)
    for m in es.elements():
        for g in gens:
            assert es.contains(mat_mul(m, g))


def test_enumerate_python_path_large_dimension():
    # an edge plus seven isolated vertices: the group is still that of A_2
    g = build_custom(9, [(1, 2)])
    es = enumerate_group(generators(g))
    assert es.order == 6
    assert order_schreier_sims(generators(g)) == 6


def test_enumerate_capacity():
    with pytest.raises(CapacityError):
        enumerate_group(generators(build_family("A", 4)), cap=10)


def test_enumerate_rejects_mixed_dims():
    with pytest.raises(ValidationError):
        enumerate_group(
            [Gf2Matrix.identity(2), Gf2Matrix.identity(3)]
        )


def test_chain_orders_match_enumeration():
    cases = [("A", 3), ("A", 4), ("D", 4), ("D", 5), ("E", 6)]
    for family, n in cases:
        gens = generators(build_family(family, n))
        assert order_schreier_sims(gens) == enumerate_group(gens).order


def test_chain_order_a3():
    assert order_schreier_sims(generators(build_family("A", 3))) == 24


def test_chain_order_d4():
    assert order_schreier_sims(generators(build_family("D", 4))) == 96


def test_chain_base_points_are_basis_vectors():
    chain = StabilizerChain(generators(build_family("D", 4)))
    for b in chain.base_points():
        assert b.bit_count() == 1


def test_membership():
    g = build_family("A", 2)
    gens = generators(g)
    group = MatrixGroup.from_generators(gens, backend="auto")
    assert membership(group, Gf2Matrix.identity(2))
    assert membership(group, mat_mul(gens[0], gens[1]))
    probe = Gf2Matrix(2, (0b11, 0b10))  # this is the move matrix of vertex 1
    explicit = MatrixGroup.from_generators(gens, backend="explicit")
    chain = MatrixGroup.from_generators(gens, backend="chain")
    assert explicit.contains(probe) == chain.contains(probe) == True


def test_membership_negative():
    # GL_2(F_2) has order 6 = |W(A_2)|, so use A_1 x A_1 for a proper subgroup
    g = build_custom(2, [])
    group = MatrixGroup.from_generators(generators(g), backend="auto")
    assert group.order == 1
    swap = Gf2Matrix(2, (0b10, 0b01))
    assert not group.contains(swap)


def test_center_trivial():
    for family, n in (("A", 3), ("D", 4)):
        group = MatrixGroup.from_generators(
            generators(build_family(family, n)), backend="explicit"
        )
        central = center(group)
        assert len(central) == 1 and central[0].is_identity()


def test_center_of_trivial_group():
    group = MatrixGroup.from_generators(
        generators(build_custom(1, [])), backend="explicit"
    )
    central = center(group)
    assert len(central) == 1 and central[0].is_identity()


def test_center_python_path():
    group = MatrixGroup.from_generators(
        generators(build_custom(9, [(1, 2)])), backend="explicit"
    )
    central = center(group)
    assert len(central) == 1 and central[0].is_identity()


def test_center_needs_explicit_backend():
    group = MatrixGroup.from_generators(
        generators(build_family("A", 3)), backend="chain"
    )
    with pytest.raises(BackendError):
        center(group)


def test_restriction_one_vertex():
    pair = restriction(build_family("A", 3), [1])
    assert enumerate_group(pair.restricted_generators).order == 1
    assert enumerate_group(pair.sub_generators).order == 2


def test_restriction_e6_d5_subgroup():
    pair = restriction(build_family("E", 6), range(2, 7))
    assert enumerate_group(pair.sub_generators).order == 1920


def test_restriction_blocks_match_induced_subgraph():
    g = build_family("D", 5)
    pair = restriction(g, [1, 2, 3])
    expected = [generator_matrix(pair.subgraph, s) for s in (1, 2, 3)]
    assert list(pair.restricted_generators) == expected


def test_restriction_block_triangular_and_surjective():
    g = build_family("A", 4)
    pair = restriction(g, [2, 3])
    sub = enumerate_group(pair.sub_generators)
    images = set()
    for m in sub.elements():
        assert pair.block_triangular(m)
        images.add(pair.restrict(m).packed)
    target = enumerate_group(pair.restricted_generators)
    assert images == set(target.element_keys())
