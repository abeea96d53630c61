import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxflip.errors import RangeError
from coxflip.flipping import (
    apply_move,
    e_matrix,
    generator_matrix,
    legal_moves,
    verify_coxeter_relations,
)
from coxflip.gf2 import Gf2Matrix, Gf2Vector, mat_mul
from coxflip.graphs import build_custom, build_family

from test_graphs import custom_graphs


def test_generator_matrix_a2():
    g = build_family("A", 2)
    s1 = generator_matrix(g, 1)
    # rows [1 0; 1 1]: column 1 is s1+s2, column 2 is s2
    assert s1.cols == (0b11, 0b10)
    assert list(s1.rows()) == ["10", "11"]


def test_generator_matrix_isolated_vertex():
    g = build_custom(3, [(1, 2)])
    assert generator_matrix(g, 3) == Gf2Matrix.identity(3)


def test_generator_matrix_d4_branch():
    g = build_family("D", 4)
    s2 = generator_matrix(g, 2)
    ident = Gf2Matrix.identity(4)
    assert s2.column(2).support() == {1, 2, 3, 4}
    for j in (1, 3, 4):
        assert s2.column(j) == ident.column(j)


def test_generator_out_of_range():
    with pytest.raises(RangeError):
        generator_matrix(build_family("A", 2), 3)


def test_e_matrix_examples():
    a2 = build_family("A", 2)
    e1 = e_matrix(a2, 1)
    assert e1.cols == (0b10, 0)  # only entry (2,1)
    a3 = build_family("A", 3)
    e2 = e_matrix(a3, 2)
    assert e2.column(2).support() == {1, 3}
    assert e2.column(1).bits == 0 and e2.column(3).bits == 0
    assert e_matrix(build_custom(2, []), 1) == Gf2Matrix.zero(2)


def test_generator_is_identity_plus_e():
    for g in (build_family("A", 4), build_family("D", 5), build_family("E", 6)):
        for s in range(1, g.n + 1):
            assert generator_matrix(g, s) == Gf2Matrix.identity(g.n) ^ e_matrix(g, s)


def test_apply_move_examples():
    g = build_family("A", 2)
    assert apply_move(g, Gf2Vector.from_string("10"), 1).to_string() == "11"
    # feigning move: the selected vertex is white
    assert apply_move(g, Gf2Vector.from_string("01"), 1).to_string() == "01"
    assert apply_move(g, Gf2Vector.from_string("11"), 2).to_string() == "01"


def test_legal_moves():
    a3 = build_family("A", 3)
    assert legal_moves(a3, Gf2Vector.from_string("000")) == frozenset()
    assert legal_moves(a3, Gf2Vector.from_string("101")) == {1, 3}
    assert legal_moves(build_family("D", 4), Gf2Vector.from_string("1111")) == {1, 2, 3, 4}


def test_relations_a2():
    report = verify_coxeter_relations(build_family("A", 2))
    assert report.all_pass
    # braid relation on the single edge
    g = build_family("A", 2)
    prod = mat_mul(generator_matrix(g, 1), generator_matrix(g, 2))
    cube = mat_mul(mat_mul(prod, prod), prod)
    assert cube.is_identity()
    assert not mat_mul(prod, prod).is_identity()


def test_relations_two_isolated_vertices():
    g = build_custom(2, [])
    report = verify_coxeter_relations(g)
    assert report.all_pass
    assert generator_matrix(g, 1).is_identity()


def test_relations_e6_all_pairs():
    report = verify_coxeter_relations(build_family("E", 6))
    assert report.all_pass
    assert report.pair_count == 15


def test_relations_triangle():
    assert verify_coxeter_relations(build_custom(3, [(1, 2), (2, 3), (1, 3)])).all_pass


@given(custom_graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_relations_hold_on_random_graphs(g):
    assert verify_coxeter_relations(g).all_pass


@given(custom_graphs(max_n=7), st.data())
def test_move_is_configuration_involution(g, data):
    bits = data.draw(st.integers(0, (1 << g.n) - 1))
    s = data.draw(st.integers(1, g.n))
    config = Gf2Vector(g.n, bits)
    once = apply_move(g, config, s)
    assert apply_move(g, once, s) == config
    if not config.bit(s):
        assert once == config  # feigning move
    else:
        flipped = (config ^ once).support()
        assert flipped == set() | {u for u in range(1, g.n + 1) if g.has_edge(u, s)}


@given(custom_graphs(max_n=6))
def test_move_squares_to_identity(g):
    for s in range(1, g.n + 1):
        m = generator_matrix(g, s)
        assert mat_mul(m, m).is_identity()
