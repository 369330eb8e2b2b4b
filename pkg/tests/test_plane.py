import math
import random

import pytest
from hypothesis import given

from conftest import seeds
from dischargekit.generators import cycle_graph, named_graph, wheel_graph
from dischargekit.graph import Graph, GraphError, ParseError
from dischargekit.plane import PlaneGraph, parse_embedding, rotation_from_coordinates, serialize_embedding
from dischargekit.sampling import random_plane_graph, random_triangulation


@pytest.mark.parametrize("name, census", [
    ("K4", {3: 4}), ("cube", {4: 6}), ("dodecahedron", {5: 12}), ("icosahedron", {3: 20}),
    ("W6", {3: 6, 6: 1}), ("C5", {5: 2}),
])
def test_named_embeddings(name, census):
    pg = named_graph(name, embedded=True)
    assert pg.face_census() == census
    assert pg.graph.n - pg.graph.m + len(pg.faces) == 2


def test_dart_face_lookup_is_consistent():
    pg = named_graph("cube", embedded=True)
    for f in pg.faces:
        for u, v in f.darts:
            assert pg.face_of_dart(u, v) is f
    for u, v in pg.graph.edges:
        a, b = pg.edge_faces(u, v)
        assert a.index != b.index
    assert sorted(f.length for f in pg.faces_at(0)) == [4, 4, 4]


def test_nonplanar_rotation_rejected():
    # K4 with one rotation flipped traces too few faces
    g = named_graph("K4")
    rot = {0: [1, 2, 3], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 1, 2]}
    with pytest.raises(GraphError):
        PlaneGraph(g, rot)


def test_rotation_must_list_neighbors():
    g = cycle_graph(3)
    with pytest.raises(GraphError):
        PlaneGraph(g, {0: [1], 1: [0, 2], 2: [0, 1]})
    with pytest.raises(GraphError):
        PlaneGraph(Graph([0, 1], [(0, 1), (0, 1)]), {0: [1, 1], 1: [0, 0]})


def test_embedding_parse_errors():
    g = cycle_graph(3)
    with pytest.raises(ParseError):
        parse_embedding("rot 0 1 2\n", g)
    with pytest.raises(ParseError):
        parse_embedding("rot 0: 1 2\nrot 0: 2 1\n", g)


def test_embedding_round_trip():
    pg = named_graph("icosahedron", embedded=True)
    again = parse_embedding(serialize_embedding(pg), pg.graph)
    assert again.rotation == pg.rotation


def test_rotation_from_coordinates_wheel():
    g = wheel_graph(5)  # hub 0, rim 1..5
    coords = {i: (math.cos(2 * math.pi * i / 5), math.sin(2 * math.pi * i / 5)) for i in range(1, 6)}
    coords[0] = (0.0, 0.0)
    pg = rotation_from_coordinates(g, coords)
    assert pg.face_census() == {3: 5, 5: 1}


@given(seeds)
def test_random_plane_graphs_satisfy_euler(seed):
    pg = random_plane_graph(random.Random(seed), 30)
    g = pg.graph
    assert g.is_connected() and g.simple
    assert g.n - g.m + len(pg.faces) == 2
    assert sum(f.length for f in pg.faces) == 2 * g.m


@given(seeds)
def test_random_triangulations(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 25)
    pg = random_triangulation(rng, n)
    assert pg.graph.m == 3 * n - 6
    assert set(pg.face_census()) == {3}


def test_plane_constructions():
    from dischargekit.sampling import dual, fatten, geodesic, kleetope, truncate
    ico = named_graph("icosahedron", embedded=True)
    assert dual(ico).face_census() == {5: 12}
    assert truncate(named_graph("dodecahedron", embedded=True)).face_census() == {3: 20, 10: 12}
    k = kleetope(ico)
    assert k.graph.n == 32 and set(k.face_census()) == {3}
    geo = geodesic(ico)
    assert (geo.graph.n, geo.graph.min_degree()) == (42, 5) and set(geo.face_census()) == {3}
    fat = fatten(random.Random(2), named_graph("K4", embedded=True), 2, 2)
    assert fat.graph.max_degree() >= 6 and fat.graph.n - fat.graph.m + len(fat.faces) == 2
