"""Constructors for sharpness families and named graphs.

Vertex ids are deterministic per family (documented on each function), so
tests can refer to specific vertices.
"""
from fractions import Fraction
from importlib import resources
import math
import re

from .graph import Graph, GraphError, parse_graph
from .plane import PlaneGraph, parse_embedding, rotation_from_coordinates


def circular_clique(p, q):
    """K_{p:q}: vertices 0..p-1, i ~ j when q <= |i-j| <= p-q."""
    if not (q >= 1 and p > 2 * q):
        raise GraphError(f"circular clique needs p > 2q >= 2, got p={p}, q={q}")
    return Graph(range(p), [(i, j) for i in range(p) for j in range(i + 1, p)
                            if q <= j - i <= p - q])


def example_Gt(t):
    """Two (2t+1)-cycles sharing edge 01, plus a (2t-2)-thread between the
    vertices opposite that edge.

    Ids: first cycle 0,1,2,...,2t; second cycle 0,1,2t+1,...,4t-1; the thread
    joins t+1 and 3t through 4t,...,6t-3. G_1 is K4.
    """
    if t < 1:
        raise GraphError("t must be >= 1")
    a = [0, 1] + list(range(2, 2 * t + 1))
    b = [0, 1] + list(range(2 * t + 1, 4 * t))
    edges = {tuple(sorted((a[i], a[(i + 1) % len(a)]))) for i in range(len(a))}
    edges |= {tuple(sorted((b[i], b[(i + 1) % len(b)]))) for i in range(len(b))}
    path = [t + 1] + list(range(4 * t, 6 * t - 2)) + [3 * t]
    edges |= {tuple(sorted(e)) for e in zip(path, path[1:])}
    g = Graph(range(6 * t - 2), sorted(edges))
    assert g.m == 6 * t and g.average_degree() == 2 + Fraction(2, 3 * t - 1)
    return g


def subdivide_edges(g, edges_to_split, pieces=2):
    """Replace each listed edge by a path of `pieces` edges; new ids follow max id."""
    nxt = max(g.vertices, default=-1) + 1
    split = {}
    for e in edges_to_split:
        split[tuple(sorted(e))] = split.get(tuple(sorted(e)), 0) + 1
    new_edges = []
    for u, v in g.edges:
        if split.get((u, v), 0) > 0:
            split[(u, v)] -= 1
            path = [u] + list(range(nxt, nxt + pieces - 1)) + [v]
            nxt += pieces - 1
            new_edges += list(zip(path, path[1:]))
        else:
            new_edges.append((u, v))
    first = max(g.vertices, default=-1) + 1
    return Graph(list(g.vertices) + list(range(first, nxt)), new_edges, allow_loops=g.has_loops)


def thread_replace(g, ell):
    """Replace every edge of a 3-regular graph by an (ell-1)-thread.

    Original ids are kept; thread vertices are numbered after max id in edge
    order. The result has average degree 2 + 2/(3 ell - 1).
    """
    if ell < 1:
        raise GraphError("ell must be >= 1")
    if any(g.degree(v) != 3 for v in g.vertices):
        raise GraphError("thread_replace needs a 3-regular graph")
    h = subdivide_edges(g, g.edges, ell)
    assert h.average_degree() == 2 + Fraction(2, 3 * ell - 1)
    return h


def subdivided_complete(n):
    """K_n with every edge subdivided once; branch vertices 0..n-1."""
    if n < 2:
        raise GraphError("n must be >= 2")
    k = complete_graph(n)
    return subdivide_edges(k, k.edges, 2)


def fat_triangle_subdivided(k):
    """Triangle with each edge of multiplicity k, every edge then subdivided once.

    Hubs 0, 1, 2; subdivision vertices 3.. in pair order (01, 02, 12).
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    edges, nxt = [], 3
    for u, v in ((0, 1), (0, 2), (1, 2)):
        for _ in range(k):
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
    return Graph(range(nxt), edges)


def book(r):
    """K_2 joined with r independent vertices; spine 0, 1; pages 2..r+1."""
    if r < 1:
        raise GraphError("r must be >= 1")
    return Graph(range(r + 2), [(0, 1)] + [(s, i) for i in range(2, r + 2) for s in (0, 1)])


def gadget_Fk(k):
    """k copies of B_{k+1} glued at one spine vertex each; the glued vertex is 0."""
    if k < 1:
        raise GraphError("k must be >= 1")
    edges, nxt = [], 1
    for _ in range(k):
        other = nxt
        pages = list(range(nxt + 1, nxt + k + 2))
        nxt += k + 2
        edges.append((0, other))
        for p in pages:
            edges += [(0, p), (other, p)]
    return Graph(range(nxt), edges)


def gadget_Gkn(k, n):
    """2n+1 copies of F_k plus a cycle through their glued vertices, with all
    but one cycle edge subdivided.

    Copy c occupies ids c*|F_k| .. ; its glued vertex is c*|F_k|. The
    unsubdivided cycle edge joins the last copy back to copy 0.
    """
    if k < 1 or n < 1:
        raise GraphError("k and n must be >= 1")
    f = gadget_Fk(k)
    size = f.n
    copies = 2 * n + 1
    edges = [(u + c * size, v + c * size) for c in range(copies) for u, v in f.edges]
    nxt = copies * size
    hubs = [c * size for c in range(copies)]
    for i in range(copies - 1):
        edges += [(hubs[i], nxt), (nxt, hubs[i + 1])]
        nxt += 1
    edges.append((hubs[-1], hubs[0]))
    g = Graph(range(nxt), edges)
    assert g.average_degree() == Fraction(2 * ((copies) * (4 * k * k + 6 * k + 4) - 2),
                                          2 * ((copies) * (k * k + 2 * k + 2) - 1))
    return g


def gadget_family(which, *params):
    fam = {"book": book, "Fk": gadget_Fk, "Gkn": gadget_Gkn}
    if which not in fam:
        raise GraphError(f"unknown gadget family {which!r}")
    return fam[which](*params)


def gkn_mad_formula(k, n):
    c = 2 * n + 1
    return Fraction(c * (4 * k * k + 6 * k + 4) - 2, c * (k * k + 2 * k + 2) - 1)


# ---------------------------------------------------------------- named graphs

def complete_graph(n):
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def star_graph(k):
    """K_{1,k} with center 0."""
    return Graph(range(k + 1), [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a, b):
    return Graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(n):
    """Hub 0 joined to the rim cycle 1..n."""
    if n < 3:
        raise GraphError("wheels need a rim of length >= 3")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(range(n + 1), rim + [(0, i) for i in range(1, n + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def heawood():
    """LCF [5,-5]^7 on 0..13."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(range(14), edges)


def heawood_minus_vertex():
    """Heawood graph with vertex 13 deleted (13 vertices, 18 edges)."""
    return heawood().delete_vertices([13])


def improper01_obstruction():
    """Hand-encoded graph expected to be not (0,1)-colorable (17 vertices, 21 edges).

    Two paths 0..5 and 6..11, each with two 2-vertices (12, 13 and 15, 16)
    closing triangles at its far end, joined by the edge 5-6 and the
    2-vertex 14.
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
             (2, 13), (13, 1), (1, 12), (12, 0), (5, 14),
             (11, 10), (10, 9), (9, 8), (8, 7), (7, 6),
             (9, 15), (15, 10), (10, 16), (16, 11), (6, 14), (5, 6)]
    return Graph(range(17), edges)


def improper11_obstruction():
    """Hand-encoded graph expected to be not (1,1)-colorable (17 vertices, 24 edges).

    Three copies of K4 minus an edge (top t, middle m, sides) at
    (0,1,2,3), (4,5,6,7), (8,9,10,11); middles joined by paths through 12, 13
    and through 14, 15, 16, plus the chord 1-15.
    """
    edges = []
    for base in (0, 4, 8):
        t, m, l, r = base, base + 1, base + 2, base + 3
        edges += [(t, m), (m, l), (l, t), (t, r), (r, m)]
    edges += [(1, 12), (12, 5), (5, 13), (13, 9)]
    edges += [(9, 14), (14, 15), (15, 16), (16, 1)]
    edges.append((1, 15))
    return Graph(range(17), edges)


def _data(name):
    return resources.files("dischargekit").joinpath("data").joinpath(name).read_text()


def _k4_plane():
    coords = {0: (0, 0), 1: (4, 0), 2: (2, 4), 3: (2, 1)}
    return rotation_from_coordinates(complete_graph(4), coords)


def _wheel_plane(n):
    coords = {0: (0.0, 0.0)}
    for i in range(1, n + 1):
        ang = 2 * math.pi * i / n
        coords[i] = (math.cos(ang), math.sin(ang))
    return rotation_from_coordinates(wheel_graph(n), coords)


def _cycle_plane(n):
    return PlaneGraph(cycle_graph(n), {i: [(i - 1) % n, (i + 1) % n] for i in range(n)})


def _from_data(name):
    g = parse_graph(_data(name + ".graph"))
    return parse_embedding(_data(name + ".emb"), g)


PLANE_CENSUS = {
    "dodecahedron": {5: 12},
    "icosahedron": {3: 20},
    "cube": {4: 6},
}


def named_graph(name, embedded=False):
    """Graph (or PlaneGraph when embedded=True) by name.

    Names: petersen, heawood, heawood_minus_vertex, dodecahedron, icosahedron,
    cube, K<n>, C<n>, W<n> (wheel with rim n), P<n>, improper01_obstruction, improper11_obstruction.
    K(n)/C(n)/W(n) spellings are accepted too. Embeddings exist for the
    dodecahedron, icosahedron, cube, K1..K4, cycles and wheels.
    """
    key = re.sub(r"[()\s]", "", name)
    m = re.fullmatch(r"([KCWP])(\d+)", key)
    pg = None
    if key in PLANE_CENSUS:
        pg = _from_data(key)
        assert pg.face_census() == PLANE_CENSUS[key], f"{key} embedding census mismatch"
        g = pg.graph
    elif m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "K":
            g = complete_graph(n)
            if embedded and n == 4:
                pg = _k4_plane()
            elif embedded and n <= 3:
                pg = _cycle_plane(3) if n == 3 else PlaneGraph(g, {v: [u for u in g.vertices if u != v] for v in g.vertices})
        elif kind == "C":
            g = cycle_graph(n)
            if embedded:
                pg = _cycle_plane(n)
        elif kind == "W":
            g = wheel_graph(n)
            if embedded:
                pg = _wheel_plane(n)
        else:
            g = path_graph(n)
            if embedded:
                pg = PlaneGraph(g, {v: list(g.neighbors(v)) for v in g.vertices})
    else:
        table = {
            "petersen": petersen,
            "heawood": heawood,
            "heawood_minus_vertex": heawood_minus_vertex,
            "improper01_obstruction": improper01_obstruction,
            "improper11_obstruction": improper11_obstruction,
        }
        if key not in table:
            raise GraphError(f"unknown graph name {name!r}")
        g = table[key]()
    if embedded:
        if pg is None:
            raise GraphError(f"no embedding available for {name!r}")
        return pg
    return g
