import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import seeds, sparse_sample
from dischargekit.colorers import (CircularPalette, Coloring, acyclic_6list, circular_color,
                                   color_sequence, color_thread, degeneracy_color, extend_thread,
                                   forbidden_bound, if_partition, improper_2list,
                                   list_color_even_cycle, square_bound, square_color_planar,
                                   star_color4, total_compose, validate)
from dischargekit.density import mad
from dischargekit.errors import HypothesisError, Infeasible
from dischargekit.generators import (complete_graph, cycle_graph, named_graph, petersen,
                                     thread_replace)
from dischargekit.graph import Graph, GraphError, bfs_distances, square
from dischargekit.oracles import (brute_chromatic_kind, brute_homomorphism, brute_if,
                                  brute_list_color, brute_thread_reach)
from dischargekit.sampling import random_lists, random_plane_graph, random_triangulation


def _ok(g, col, lists=None):
    bad = validate(g, col, lists)
    assert bad is None, str(bad)


# ---------------------------------------------------------------- thread extension

@pytest.mark.parametrize("p", range(3, 10))
def test_extend_thread_matches_walk_search(p):
    for q in range(1, (p - 1) // 2 + 1):
        for ell in range(7):
            for start in range(p):
                ext = extend_thread(p, q, ell, start)
                reach = brute_thread_reach(p, q, ell, start)
                assert [ext.allowed(i) for i in range(ell + 2)] == reach
                assert ext.forbidden == frozenset(range(p)) - reach[-1]
                for i in range(ell + 2):
                    assert ext.intervals[i][1] == min(p, 1 + i * (p - 2 * q))
                assert ext.forbidden_count <= forbidden_bound(p, q, ell)


def test_extend_thread_rejects_bad_parameters():
    for p, q, ell in [(4, 2, 1), (5, 0, 1), (5, 2, -1)]:
        with pytest.raises(ValueError):
            extend_thread(p, q, ell)


@given(st.integers(3, 11), st.data())
def test_color_thread_walks(p, data):
    q = data.draw(st.integers(1, (p - 1) // 2))
    ell = data.draw(st.integers(0, 6))
    a, b = data.draw(st.integers(0, p - 1)), data.draw(st.integers(0, p - 1))
    pal = CircularPalette(p, q)
    walk = color_thread(pal, a, b, ell)
    reachable = b in brute_thread_reach(p, q, ell, a)[-1]
    assert (walk is not None) == reachable
    if walk is not None:
        seq = [a] + walk + [b]
        assert len(walk) == ell
        assert all(pal.adjacent(x, y) for x, y in zip(seq, seq[1:]))


# ---------------------------------------------------------------- circular colorings

@pytest.mark.parametrize("t", [1, 2, 3])
def test_circular_color_fuzz(t):
    bound = 2 + Fraction(1, 2 * t)
    rng = random.Random(t)
    cp = cycle_graph(2 * t + 1)
    for i in range(60):
        g = sparse_sample(rng, bound, min_odd_girth=2 * t + 1)
        col = circular_color(g, t)
        assert col.params == {"p": 2 * t + 1, "q": t}
        _ok(g, col)
        if g.n <= 12 and i % 4 == 0:
            assert brute_homomorphism(g, cp) is not None


def test_circular_color_anchors():
    # a long thread in K4 brings mad under 9/4 while keeping odd girth >= 5
    g = thread_replace(complete_graph(4), 5)
    assert mad(g).value < Fraction(9, 4)
    _ok(g, circular_color(g, 2))
    _ok(cycle_graph(9), circular_color(cycle_graph(9), 2))
    with pytest.raises(HypothesisError):
        circular_color(cycle_graph(3), 2)
    with pytest.raises(HypothesisError):
        circular_color(petersen(), 2)  # mad 3


# ---------------------------------------------------------------- I,F and star

def test_if_partition_and_star_fuzz():
    rng = random.Random(7)
    for i in range(120):
        g = sparse_sample(rng, Fraction(7, 3))
        I, F = if_partition(g)
        assert sorted(I + F) == sorted(g.vertices)
        lab = {v: "I" for v in I} | {v: "F" for v in F}
        _ok(g, Coloring("if", lab))
        col = star_color4(g)
        assert set(col.colors.values()) <= {0, 1, 2, 3}
        _ok(g, col)
        if g.n <= 11 and i % 3 == 0:
            assert brute_if(g) is not None
            assert brute_chromatic_kind(g, "star") <= 4


@pytest.mark.parametrize("base", ["K4", "petersen", "cube"])
def test_if_partition_weak_hub_reduction(base):
    # every edge becomes a 2-thread: no 3-thread exists, so the peeling must
    # use a 3-vertex with at least five weak 2-neighbors
    g = thread_replace(named_graph(base), 3)
    I, F = if_partition(g)
    _ok(g, Coloring("if", {**{v: "I" for v in I}, **{v: "F" for v in F}}))
    _ok(g, star_color4(g))


def test_if_partition_refuses_dense_input():
    with pytest.raises(HypothesisError):
        if_partition(complete_graph(4))


# ---------------------------------------------------------------- list colorings

def test_improper_2list_fuzz():
    rng = random.Random(11)
    for i in range(120):
        g = sparse_sample(rng, Fraction(8, 3))
        lists = random_lists(rng, g, 2, rng.randint(2, 4))
        col = improper_2list(g, lists)
        _ok(g, col, lists)
        if g.n <= 12 and i % 3 == 0:
            assert brute_list_color(g, lists, "improper", d=1) is not None


def test_improper_2list_needs_two_colors():
    g = cycle_graph(4)
    with pytest.raises(HypothesisError):
        improper_2list(g, {v: [0] for v in g.vertices})


def test_acyclic_6list_fuzz():
    rng = random.Random(13)
    for i in range(120):
        g = sparse_sample(rng, Fraction(3))
        lists = random_lists(rng, g, 6, rng.randint(6, 10))
        col = acyclic_6list(g, lists)
        _ok(g, col, lists)
        if g.n <= 10 and i % 4 == 0:
            assert brute_list_color(g, lists, "acyclic") is not None


@given(st.integers(1, 12), st.booleans(), seeds)
def test_color_sequence(n, closed, seed):
    rng = random.Random(seed)
    items = list(range(n))
    lists = {x: rng.sample(range(4), 2) for x in items}
    try:
        out = color_sequence(items, lists, closed)
    except Infeasible:
        assert closed and n % 2 and len({tuple(sorted(l)) for l in lists.values()}) == 1
        return
    assert all(out[x] in lists[x] for x in items)
    pairs = list(zip(items, items[1:])) + ([(items[-1], items[0])] if closed and n > 1 else [])
    assert all(out[a] != out[b] for a, b in pairs if a != b)


def test_list_color_even_cycle():
    c = cycle_graph(6)
    col = list_color_even_cycle(c, {v: [0, 1] for v in c.vertices})
    _ok(c, col)
    c5 = cycle_graph(5)
    with pytest.raises(Infeasible):
        list_color_even_cycle(c5, {v: [0, 1] for v in c5.vertices})
    with pytest.raises(GraphError):
        list_color_even_cycle(complete_graph(4), {})


@given(seeds)
def test_degeneracy_color(seed):
    g = sparse_sample(random.Random(seed), Fraction(4))
    col = degeneracy_color(g, 4)
    _ok(g, col)
    assert set(col.colors.values()) <= set(range(4))


# ---------------------------------------------------------------- square and total

def test_square_color_planar_fuzz():
    rng = random.Random(17)
    for i in range(60):
        pg = random_triangulation(rng, rng.randint(4, 30)) if i % 2 else random_plane_graph(rng, 40)
        g = pg.graph
        col = square_color_planar(g)
        _ok(square(g), col)
        assert col.num_colors() <= square_bound(g.max_degree())
        if g.n <= 9 and i % 3 == 0:
            assert brute_chromatic_kind(square(g)) <= col.num_colors()


def test_square_color_planar_rejects_dense_nonplanar():
    with pytest.raises(HypothesisError):
        square_color_planar(complete_graph(8))


def _k4_inputs():
    vc = {0: 1, 1: 2, 2: 3, 3: 4}
    ec = {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}
    return vc, ec


def test_total_compose_k4():
    g = complete_graph(4)
    col = total_compose(g, *_k4_inputs())
    _ok(g, col)
    assert col.num_colors() == 5


def test_total_compose_cube_and_even_cycles():
    cube = named_graph("cube")
    dist = bfs_distances(cube, 0)
    vc = {v: 1 + dist[v] % 2 for v in cube.vertices}
    # a 3-edge-coloring found as a proper coloring of the line graph
    es = list(cube.edges)
    line = Graph(range(len(es)), [(i, j) for i in range(len(es)) for j in range(i + 1, len(es))
                                  if set(es[i]) & set(es[j])])
    lc = brute_list_color(line, {i: range(3) for i in line.vertices})
    ec = {es[i]: c for i, c in lc.items()}
    col = total_compose(cube, vc, ec)
    _ok(cube, col)
    assert col.num_colors() <= 5
    for n in (4, 6, 8):
        c = cycle_graph(n)
        vc = {v: 1 + v % 2 for v in c.vertices}
        ec = {(i, (i + 1) % n): i % 2 for i in range(n)}
        _ok(c, total_compose(c, vc, ec))


def test_total_compose_rejects_bad_inputs():
    g = complete_graph(4)
    vc, ec = _k4_inputs()
    with pytest.raises(ValueError):
        total_compose(g, {**vc, 1: 1}, ec)
    with pytest.raises(ValueError):
        total_compose(g, vc, {**ec, (0, 1): 1})
    with pytest.raises(ValueError):
        total_compose(g, {v: c + 4 for v, c in vc.items()}, ec)
