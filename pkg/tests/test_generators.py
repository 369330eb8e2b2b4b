from fractions import Fraction

import pytest

from dischargekit.configurations import find_long_thread
from dischargekit.density import mad
from dischargekit.generators import (book, circular_clique, complete_graph, example_Gt,
                                     fat_triangle_subdivided, gadget_family, gadget_Fk, gadget_Gkn,
                                     heawood_minus_vertex, named_graph, petersen,
                                     subdivided_complete, thread_replace)
from dischargekit.graph import GraphError, girth, square
from dischargekit.oracles import (OracleBudget, brute_chromatic_kind, brute_improper)


def test_circular_cliques():
    assert circular_clique(5, 2).degrees() == {v: 2 for v in range(5)}
    assert circular_clique(4, 1) == complete_graph(4)
    g = circular_clique(8, 3)
    assert g.n == 8 and set(g.degrees().values()) == {3}
    with pytest.raises(GraphError):
        circular_clique(6, 3)


@pytest.mark.parametrize("t, n, m", [(1, 4, 6), (2, 10, 12), (3, 16, 18)])
def test_example_Gt(t, n, m):
    g = example_Gt(t)
    assert (g.n, g.m) == (n, m)
    assert g.average_degree() == 2 + Fraction(2, 3 * t - 1)


def test_G1_is_K4():
    g = example_Gt(1)
    assert g.m == 6 and set(g.degrees().values()) == {3}


@pytest.mark.parametrize("ell", range(1, 6))
def test_thread_replace_has_no_long_thread(ell):
    g = thread_replace(petersen(), ell)
    assert g.average_degree() == 2 + Fraction(2, 3 * ell - 1)
    assert find_long_thread(g, ell) is None


def test_thread_replace_needs_cubic():
    with pytest.raises(GraphError):
        thread_replace(complete_graph(5), 2)
    assert thread_replace(complete_graph(4), 1) == complete_graph(4)


def test_subdivided_complete_counts():
    g = subdivided_complete(5)
    assert (g.n, g.m) == (15, 20)
    assert subdivided_complete(2).m == 2


def test_fat_triangle():
    g = fat_triangle_subdivided(4)
    assert g.max_degree() == 8 and g.n == 15
    assert girth(fat_triangle_subdivided(2)) == 4
    assert girth(fat_triangle_subdivided(1)) == 6


def test_square_of_fat_triangle_needs_six_colors():
    assert brute_chromatic_kind(square(fat_triangle_subdivided(2))) == 6


def test_gadgets():
    b = book(2)
    assert (b.n, b.m) == (4, 5)
    f = gadget_Fk(2)
    assert f.n == 1 + 2 * 4 and f.degree(0) == 2 * 4
    g = gadget_family("Gkn", 2, 1)
    assert g == gadget_Gkn(2, 1)
    assert mad(g).value == Fraction(3 * 32 - 2, 3 * 10 - 1)
    assert brute_improper(g, 2, 2, OracleBudget(max_vertices=64)) is None


def test_obstructions_for_improper_colorings():
    b = OracleBudget(max_vertices=64)
    left, right = named_graph("improper01_obstruction"), named_graph("improper11_obstruction")
    assert brute_improper(left, 0, 1, b) is None
    assert brute_improper(right, 1, 1, b) is None
    # the obstructions are tight in the weaker direction
    assert brute_improper(left, 1, 1, b) is not None


def test_named_graphs():
    h = heawood_minus_vertex()
    assert (h.n, h.m) == (13, 18) and h.average_degree() == Fraction(36, 13)
    assert set(named_graph("dodecahedron").degrees().values()) == {3}
    assert set(named_graph("icosahedron").degrees().values()) == {5}
    assert named_graph("K(5)") == complete_graph(5)
    with pytest.raises(GraphError):
        named_graph("nonsense")
    with pytest.raises(GraphError):
        named_graph("petersen", embedded=True)
