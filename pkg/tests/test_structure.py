import random

import pytest

from coxflip.errors import NotPermutationError, RangeError, UnsupportedFamilyError
from coxflip.flipping import generator_matrix, generators
from coxflip.gf2 import Gf2Matrix, mat_mul, mat_vec
from coxflip.graphs import build_family
from coxflip.groups import StabilizerChain, enumerate_group
from coxflip.orbits import orbit_of, simple_basis
from coxflip.structure import (
    Permutation,
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


# ---------------------------------------------------------------------------
# permutations

def test_permutation_basics():
    p = Permutation.from_cycles(4, [(1, 2, 3)])
    assert p.images == (2, 3, 1, 4)
    assert p(1) == 2 and p(4) == 4
    assert p.compose(p.inverse()) == Permutation.identity(4)
    assert p.to_cycles() == [(1, 2, 3)]


def test_permutation_compose_order():
    # compose(p, q) applies q first
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    assert p.compose(q)(3) == p(q(3)) == 1


def test_permutation_rejects_non_bijection():
    with pytest.raises(NotPermutationError):
        Permutation((1, 1, 3))


# ---------------------------------------------------------------------------
# family A: the symmetric-group picture

def test_alpha_on_a2_generators():
    b = simple_basis("A", 2)
    g = build_family("A", 2)
    assert alpha_image(b, Gf2Matrix.identity(2)) == Permutation.identity(3)
    assert alpha_image(b, generator_matrix(g, 1)) == Permutation.from_cycles(3, [(1, 2)])
    assert alpha_image(b, generator_matrix(g, 2)) == Permutation.from_cycles(3, [(2, 3)])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alpha_is_isomorphism(n):
    b = simple_basis("A", n)
    group = enumerate_group(generators(build_family("A", n)))
    images = {}
    for key, m in zip(group.element_keys(), group.elements()):
        images[key] = alpha_image(b, m)
    # bijective onto S_{n+1}
    assert len(set(p.images for p in images.values())) == group.order
    import math

    assert group.order == math.factorial(n + 1)
    # homomorphism on all pairs
    mats = {key: Gf2Matrix.from_packed(key, n) for key in images}
    for k1, m1 in mats.items():
        for k2, m2 in mats.items():
            prod = mat_mul(m1, m2)
            assert images[prod.packed] == images[k1].compose(images[k2])


def test_alpha_rejects_matrix_outside_group():
    b = simple_basis("A", 3)
    # swapping two standard vectors does not permute the chain family
    swap = Gf2Matrix(3, (0b010, 0b001, 0b100))
    chain = StabilizerChain(generators(build_family("A", 3)))
    assert not chain.contains(swap)
    with pytest.raises(NotPermutationError):
        alpha_image(b, swap)


def test_alpha_wrong_family():
    with pytest.raises(UnsupportedFamilyError):
        alpha_image(simple_basis("D", 4), Gf2Matrix.identity(4))


# ---------------------------------------------------------------------------
# family D: translations and permutations

def test_beta_on_d4_generators():
    b = simple_basis("D", 4)
    g = build_family("D", 4)
    assert beta_image(b, generator_matrix(g, 1)) == Permutation.from_cycles(4, [(1, 2)])
    assert beta_image(b, generator_matrix(g, 4)) == Permutation.from_cycles(4, [(3, 4)])
    assert beta_image(b, Gf2Matrix.identity(4)) == Permutation.identity(4)


def test_delta_on_d4_generators():
    b = simple_basis("D", 4)
    g = build_family("D", 4)
    d1 = delta_image(b, generator_matrix(g, 1))
    assert d1.translation.bits == 0
    assert d1.perm == Permutation.from_cycles(4, [(1, 2)])
    d4 = delta_image(b, generator_matrix(g, 4))
    # the branch move shifts the top chain vector by (n-1)-bar + n-bar
    assert d4.translation == b.overline(3) ^ b.overline(4)
    assert d4.perm == Permutation.from_cycles(4, [(3, 4)])
    di = delta_image(b, Gf2Matrix.identity(4))
    assert di.translation.bits == 0 and di.perm == Permutation.identity(4)


@pytest.mark.parametrize("n", [4, 5])
def test_delta_injective_homomorphism(n):
    b = simple_basis("D", n)
    group = enumerate_group(generators(build_family("D", n)))
    elements = list(group.elements())
    images = {m.packed: delta_image(b, m) for m in elements}
    # injective
    seen = {(d.translation.bits, d.perm.images) for d in images.values()}
    assert len(seen) == group.order
    # homomorphism: all pairs on D4, generator pairs plus a sample on D5
    gens = generators(build_family("D", n))
    rng = random.Random(3)
    if n == 4:
        pairs = [(m1, m2) for m1 in elements for m2 in elements]
    else:
        pairs = [(g, m) for g in gens for m in elements]
        pairs += [
            (rng.choice(elements), rng.choice(elements)) for _ in range(20000)
        ]
    for m1, m2 in pairs:
        prod = mat_mul(m1, m2)
        lhs = semidirect_mul(b, images[m1.packed], images[m2.packed])
        rhs = images[prod.packed]
        assert lhs.translation == rhs.translation and lhs.perm == rhs.perm


@pytest.mark.parametrize("n,index", [(4, 2), (5, 1)])
def test_delta_image_characterization(n, index):
    import math

    b = simple_basis("D", n)
    group = enumerate_group(generators(build_family("D", n)))
    top = b.overline(n + 1)
    orbit = orbit_of(generators(build_family("D", n)), top)
    expected_translations = {(top ^ v).bits for v in orbit}
    translations = {delta_image(b, m).translation.bits for m in group.elements()}
    assert translations == expected_translations
    semidirect_order = 2 ** (n - 1) * math.factorial(n)
    assert semidirect_order // group.order == index


@pytest.mark.parametrize("n", [4, 5])
def test_gamma_factors_through_beta(n):
    # on the invariant subspace, a group element acts exactly as the lift
    # of its induced permutation
    b = simple_basis("D", n)
    group = enumerate_group(generators(build_family("D", n)))
    rng = random.Random(5)
    keys = list(group.element_keys())
    for key in rng.sample(keys, 50):
        m = Gf2Matrix.from_packed(key, n)
        lift = perm_lift(b, beta_image(b, m))
        for j in range(1, n):
            z = b.matrix.column(j)
            assert mat_vec(m, z) == mat_vec(lift, z)


# ---------------------------------------------------------------------------
# family E: the lift and its inverse

@pytest.mark.parametrize("n", [6, 7, 8])
def test_perm_lift_roundtrip(n):
    b = simple_basis("E", n)
    rng = random.Random(n)
    for _ in range(100):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        m = perm_lift(b, p)
        assert epsilon_image(b, m) == p
    # and the other direction on the path subgroup generators
    g = build_family("E", n)
    for i in range(1, n):
        s = generator_matrix(g, i)
        assert perm_lift(b, epsilon_image(b, s)) == s


def test_perm_lift_of_transposition_is_move():
    b = simple_basis("E", 6)
    g = build_family("E", 6)
    for i in range(1, 6):
        p = Permutation.from_cycles(6, [(i, i + 1)])
        assert perm_lift(b, p) == generator_matrix(g, i)


def test_lift_inverts_induced_permutation_on_path_subgroup():
    # random words in the first n-1 moves come back unchanged through
    # epsilon and its lift
    n = 7
    b = simple_basis("E", n)
    g = build_family("E", n)
    path_gens = [generator_matrix(g, i) for i in range(1, n)]
    rng = random.Random(13)
    for _ in range(50):
        m = Gf2Matrix.identity(n)
        for _ in range(rng.randrange(1, 12)):
            m = mat_mul(m, rng.choice(path_gens))
        assert perm_lift(b, epsilon_image(b, m)) == m


def test_perm_lift_lands_in_path_subgroup():
    # the 7-cycle from the longest-element word sifts into the subgroup
    # generated by the first seven moves of E8
    b = simple_basis("E", 8)
    g = build_family("E", 8)
    chain = StabilizerChain([generator_matrix(g, i) for i in range(1, 8)])
    m = perm_lift(b, Permutation.from_cycles(8, [(2, 8, 3, 7, 4, 6, 5)]))
    assert chain.contains(m)


# ---------------------------------------------------------------------------
# the E8 central involution

def test_e8_w0_properties():
    w0 = build_e8_w0()
    assert not w0.is_identity()
    assert mat_mul(w0, w0).is_identity()
    g = build_family("E", 8)
    for j in range(2, 9):
        s = generator_matrix(g, j)
        assert mat_mul(w0, s) == mat_mul(s, w0)
    s1 = generator_matrix(g, 1)
    assert mat_mul(w0, s1) != mat_mul(s1, w0)


def test_e8_w0_moves_chain_vector_8():
    w0 = build_e8_w0()
    b = simple_basis("E", 8)
    assert mat_vec(w0, b.overline(8)) == b.overline(1) ^ b.overline(8)


def test_e8_w0_in_vertex2_to_8_subgroup():
    g = build_family("E", 8)
    chain = StabilizerChain([generator_matrix(g, j) for j in range(2, 9)])
    assert chain.contains(build_e8_w0())


# ---------------------------------------------------------------------------
# kernel accounting

def test_classical_orders():
    assert classical_weyl_order("A", 3) == 24
    assert classical_weyl_order("D", 4) == 192
    assert classical_weyl_order("E", 6) == 51840
    assert classical_weyl_order("E", 7) == 2903040
    assert classical_weyl_order("E", 8) == 696729600
    with pytest.raises(RangeError):
        classical_weyl_order("E", 9)
    with pytest.raises(RangeError):
        classical_weyl_order("D", 3)


def test_kernel_orders():
    assert kernel_order("A", 1) == 2
    assert kernel_order("A", 4) == 1
    assert kernel_order("D", 5) == 1
    assert kernel_order("D", 6) == 2
    assert kernel_order("E", 6) == 1


def test_flipping_group_order_matches_enumeration():
    assert flipping_group_order("D", 4) == 96
    assert flipping_group_order("A", 5) == 720


def test_divisibility_e6():
    report = verify_divisibility_e(6)
    assert report.subgroup_order == 1920
    assert report.orbit_size == 27
    assert report.product == 51840
    assert report.group_order == 51840
    assert report.divides and report.equals
    with pytest.raises(RangeError):
        verify_divisibility_e(9)
