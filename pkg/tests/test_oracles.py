from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import small_graphs
from dischargekit.colorers.validate import Coloring, is_valid
from dischargekit.generators import (circular_clique, complete_graph, cycle_graph, example_Gt,
                                     heawood_minus_vertex, petersen)
from dischargekit.graph import Graph
from dischargekit.oracles import (OracleBudget, OracleRefusal, brute_chromatic_kind,
                                  brute_circular_chromatic, brute_homomorphism, brute_if,
                                  brute_improper, brute_list_color)


@pytest.mark.parametrize("g, value", [
    (cycle_graph(5), Fraction(5, 2)), (complete_graph(4), Fraction(4)), (example_Gt(2), Fraction(8, 3)),
    (cycle_graph(7), Fraction(7, 3)), (cycle_graph(6), Fraction(2)), (petersen(), Fraction(3)),
    (circular_clique(8, 3), Fraction(8, 3)), (Graph([0, 1]), Fraction(1)),
])
def test_circular_chromatic_numbers(g, value):
    assert brute_circular_chromatic(g) == value


def test_homomorphisms():
    c5, k2 = cycle_graph(5), complete_graph(2)
    f = brute_homomorphism(cycle_graph(10), c5)
    assert f is not None and all(c5.has_edge(f[u], f[v]) for u, v in cycle_graph(10).edges)
    assert brute_homomorphism(c5, k2) is None
    assert brute_homomorphism(complete_graph(3), c5) is None
    assert brute_homomorphism(example_Gt(2), circular_clique(8, 3)) is not None
    assert brute_homomorphism(example_Gt(2), circular_clique(5, 2)) is None


@pytest.mark.parametrize("kind, c5, pet", [
    ("proper", 3, 3), ("injective", 3, 5), ("acyclic", 3, 4), ("star", 4, 5), ("linear", 3, 4),
])
def test_chromatic_kind_anchors(kind, c5, pet):
    assert brute_chromatic_kind(cycle_graph(5), kind) == c5
    assert brute_chromatic_kind(petersen(), kind) == pet


KINDS = ["proper", "injective", "acyclic", "star", "linear"]


def _exhaustive_min(g, kind):
    for k in range(1, g.n + 1):
        for cols in product(range(k), repeat=g.n):
            if is_valid(g, Coloring(kind, dict(zip(g.vertices, cols)))):
                return k
    return g.n


@pytest.mark.parametrize("kind", KINDS)
@given(g=small_graphs(max_n=5))
def test_chromatic_kind_matches_validator_enumeration(kind, g):
    assert brute_chromatic_kind(g, kind) == _exhaustive_min(g, kind)


@pytest.mark.parametrize("kind", KINDS + ["improper"])
@given(g=small_graphs(max_n=6), data=st.data())
def test_list_oracle_agrees_with_validator(kind, g, data):
    lists = {v: data.draw(st.lists(st.integers(0, 3), min_size=1, max_size=3, unique=True))
             for v in g.vertices}
    res = brute_list_color(g, lists, kind, d=1)
    params = {"d": 1} if kind == "improper" else {}
    if res is not None:
        assert is_valid(g, Coloring(kind, res, params), lists)
    else:
        for cols in product(*(lists[v] for v in g.vertices)):
            assert not is_valid(g, Coloring(kind, dict(zip(g.vertices, cols)), params))


def test_injective_anchor_on_heawood_minus_vertex():
    g = heawood_minus_vertex()
    assert brute_list_color(g, {v: range(5) for v in g.vertices}, "injective") is None
    six = brute_list_color(g, {v: range(6) for v in g.vertices}, "injective")
    assert six is not None and is_valid(g, Coloring("injective", six))


def _improper_ok(g, parts, j, k):
    side = {v: i for i, part in enumerate(parts) for v in part}
    cap = (j, k)
    return all(sum(1 for u in g.incident(v) if side[u] == side[v]) <= cap[side[v]] for v in g.vertices)


@given(small_graphs(max_n=8), st.integers(0, 2), st.integers(0, 2))
def test_improper_oracle(g, j, k):
    res = brute_improper(g, j, k)
    if res is not None:
        assert _improper_ok(g, res, j, k)
    else:
        for bits in product((0, 1), repeat=g.n):
            parts = ([v for v, b in zip(g.vertices, bits) if b == 0],
                     [v for v, b in zip(g.vertices, bits) if b == 1])
            assert not _improper_ok(g, parts, j, k)


@given(small_graphs(max_n=8))
def test_if_oracle(g):
    res = brute_if(g)
    if res is not None:
        I, F = res
        lab = {**{v: "I" for v in I}, **{v: "F" for v in F}}
        assert is_valid(g, Coloring("if", lab))
    else:
        for bits in product("IF", repeat=g.n):
            assert not is_valid(g, Coloring("if", dict(zip(g.vertices, bits))))


def test_if_anchors():
    assert brute_if(complete_graph(4)) is None
    assert brute_if(petersen()) is None
    assert brute_if(cycle_graph(6)) is not None


def test_budget_refusal_is_not_infeasibility(monkeypatch):
    with pytest.raises(OracleRefusal):
        brute_if(cycle_graph(20), OracleBudget(max_vertices=10))
    monkeypatch.setenv("DCG_ORACLE_BUDGET", "4")
    with pytest.raises(OracleRefusal):
        brute_chromatic_kind(cycle_graph(5))
