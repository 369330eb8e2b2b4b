"""Seeded random graphs and plane graphs for fuzzing.

Every sampler takes a random.Random instance so runs are reproducible.
"""
import random

from .graph import Graph
from .plane import PlaneGraph


def rng_from(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(rng, n, m):
    """Uniform simple graph on vertices 0..n-1 with min(m, n choose 2) edges."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(range(n), rng.sample(pairs, min(m, len(pairs))))


def random_subdivided(rng, base_n, base_m, max_sub, pendants=0, multigraph=False):
    """Random base graph whose edges are subdivided 0..max_sub times each,
    plus a few pendant vertices. Produces sparse graphs with long threads."""
    base_n = max(base_n, 1)
    if multigraph:
        edges = [tuple(sorted(rng.sample(range(base_n), 2))) for _ in range(base_m)] if base_n > 1 else []
    else:
        edges = random_graph(rng, base_n, base_m).edges
    nxt = base_n
    out = []
    for u, v in edges:
        k = rng.randint(0, max_sub)
        path = [u] + list(range(nxt, nxt + k)) + [v]
        nxt += k
        out.extend(zip(path, path[1:]))
    for _ in range(pendants):
        out.append((rng.randrange(nxt), nxt))
        nxt += 1
    return Graph(range(nxt), out)


def random_lists(rng, g, size, palette):
    """Lists of `size` colors drawn from range(palette) for each vertex."""
    return {v: sorted(rng.sample(range(palette), size)) for v in g.vertices}


# ---------------------------------------------------------------- plane graphs

class _Rot:
    """Mutable rotation system used while growing a plane graph."""

    def __init__(self, rot):
        self.rot = {v: list(r) for v, r in rot.items()}

    def next_dart(self, u, v):
        r = self.rot[v]
        return v, r[(r.index(u) + 1) % len(r)]

    def faces(self):
        seen, faces = set(), []
        for u in self.rot:
            for v in self.rot[u]:
                if (u, v) in seen:
                    continue
                walk, d = [], (u, v)
                while d not in seen:
                    seen.add(d)
                    walk.append(d)
                    d = self.next_dart(*d)
                faces.append(walk)
        return faces

    def new_vertex(self):
        return max(self.rot) + 1

    def pendant(self, rng):
        faces = self.faces()
        f = rng.choice(faces)
        x, a = rng.choice(f)  # corner at a between incoming dart (x, a) and the next dart
        w = self.new_vertex()
        r = self.rot[a]
        r.insert(r.index(x) + 1, w)
        self.rot[w] = [a]

    def subdivide(self, rng):
        u = rng.choice(sorted(self.rot))
        if not self.rot[u]:
            return
        v = rng.choice(self.rot[u])
        w = self.new_vertex()
        self.rot[u][self.rot[u].index(v)] = w
        self.rot[v][self.rot[v].index(u)] = w
        self.rot[w] = [u, v]

    def chord(self, rng, face=None):
        faces = [f for f in self.faces() if len(f) >= 4] if face is None else [face]
        if not faces:
            return False
        f = rng.choice(faces)
        corners = list(f)
        rng.shuffle(corners)
        for i, (x, a) in enumerate(corners):
            for (y, b) in corners[i + 1:]:
                if a == b or b in self.rot[a]:
                    continue
                ra, rb = self.rot[a], self.rot[b]
                ra.insert(ra.index(x) + 1, b)
                rb.insert(rb.index(y) + 1, a)
                return True
        return False

    def delete_edge(self, rng, min_degree=1):
        edges = [(u, v) for u in self.rot for v in self.rot[u] if u < v]
        rng.shuffle(edges)
        for u, v in edges:
            if len(self.rot[u]) <= min_degree or len(self.rot[v]) <= min_degree:
                continue
            self.rot[u].remove(v)
            self.rot[v].remove(u)
            if self._connected():
                return True
            # bridge: restore exactly
            self.rot[u].append(v)
            self.rot[v].append(u)
            return False
        return False

    def flip(self, rng):
        """Replace edge uv, shared by triangles uvx and vuy, with xy when allowed."""
        u = rng.choice(sorted(self.rot))
        v = rng.choice(self.rot[u])
        if len(self.rot[u]) <= 3 or len(self.rot[v]) <= 3:
            return False
        return _flip_edge(self, u, v)

    def _connected(self):
        start = next(iter(self.rot))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in self.rot[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.rot)

    def plane_graph(self):
        g = Graph(self.rot, [(u, v) for u in self.rot for v in self.rot[u] if u < v])
        return PlaneGraph(g, self.rot)


def random_plane_graph(rng, steps, weights=(3, 2, 4, 1), min_degree=1):
    """Grow a connected simple plane graph from a triangle.

    Each step is a pendant vertex, an edge subdivision, a chord inside a face
    or deleting a non-bridge edge, chosen with the given weights. Deletions
    never push a degree below min_degree; with a zero pendant weight the
    minimum degree stays at least 2.
    """
    st = _Rot({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    ops = ("pendant", "subdivide", "chord", "delete")
    for _ in range(steps):
        op = rng.choices(ops, weights=weights)[0]
        if op == "pendant":
            st.pendant(rng)
        elif op == "subdivide":
            st.subdivide(rng)
        elif op == "chord":
            st.chord(rng)
        else:
            # deletions that break the graph are undone by rebuilding the rotation
            saved = {v: list(r) for v, r in st.rot.items()}
            if not st.delete_edge(rng, min_degree):
                st.rot = saved
    return st.plane_graph()


def random_triangulation(rng, n, flips=None):
    """Simple plane triangulation on n >= 3 vertices.

    Vertices are stacked into random triangular faces, then random edge
    flips (default 2n) break up the stacked structure.
    """
    if n < 3:
        raise ValueError("a triangulation needs at least 3 vertices")
    st = _Rot({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    for w in range(3, n):
        (a, b), (_, c), _ = rng.choice(st.faces())
        # face walk a -> b -> c: put w inside, splitting it into three triangles
        st.rot[b].insert(st.rot[b].index(a) + 1, w)
        st.rot[c].insert(st.rot[c].index(b) + 1, w)
        st.rot[a].insert(st.rot[a].index(c) + 1, w)
        st.rot[w] = [a, c, b]
    for _ in range(2 * n if flips is None else flips):
        st.flip(rng)
    return st.plane_graph()


def thin_plane(rng, pg, deletions, min_degree=3):
    """Delete up to `deletions` random non-bridge edges keeping min_degree."""
    st = _Rot(pg.rotation)
    for _ in range(deletions):
        saved = {v: list(r) for v, r in st.rot.items()}
        if not st.delete_edge(rng, min_degree):
            st.rot = saved
    return st.plane_graph()


def subdivide_plane(rng, pg, lo=0, hi=2):
    """Subdivide every edge a random number of times in [lo, hi]."""
    st = _Rot(pg.rotation)
    for u, v in pg.graph.edges:
        a = u
        for _ in range(rng.randint(lo, hi)):
            w = st.new_vertex()
            st.rot[a][st.rot[a].index(v)] = w
            st.rot[v][st.rot[v].index(a)] = w
            st.rot[w] = [a, v]
            a = w
    return st.plane_graph()


# ---------------------------------------------------------------- plane constructions
# These produce instances where the cheapest configurations (light edges,
# short faces, low neighbors) are absent, so deeper items get exercised.

def kleetope(pg):
    """Add a vertex inside every face joined to the face's corners (faces must be triangles
    for the result to be simple)."""
    st = _Rot(pg.rotation)
    for f in pg.faces:
        w = st.new_vertex()
        # insert w into each corner: at a, between dart (x, a) and the next dart
        ring = []
        for (x, a) in f.darts:
            r = st.rot[a]
            r.insert(r.index(x) + 1, w)
            ring.append(a)
        st.rot[w] = list(reversed(ring))
    return st.plane_graph()


def truncate(pg):
    """Replace each vertex of degree d by a d-cycle; the result is cubic."""
    ids = {}
    for v in pg.graph.vertices:
        for u in pg.rotation[v]:
            ids[(v, u)] = len(ids)
    rot = {}
    for v in pg.graph.vertices:
        r = pg.rotation[v]
        d = len(r)
        for i, u in enumerate(r):
            rot[ids[(v, u)]] = [ids[(u, v)], ids[(v, r[(i + 1) % d])], ids[(v, r[(i - 1) % d])]]
    g = Graph(rot, [(a, b) for a in rot for b in rot[a] if a < b])
    return PlaneGraph(g, rot)


def dual(pg):
    """Plane dual; simple when the input is 3-edge-connected (e.g. a triangulation
    with minimum degree >= 3)."""
    rot = {f.index: [pg.face_of_dart(v, u).index for (u, v) in reversed(f.darts)] for f in pg.faces}
    g = Graph(rot, [(a, b) for a in rot for b in rot[a] if a < b])
    return PlaneGraph(g, rot)


def fatten(rng, pg, lo=1, hi=4):
    """Replace each edge by k parallel paths of length two (k in [lo, hi]),
    keeping the original edge with probability 1/2."""
    st = _Rot(pg.rotation)
    for u, v in pg.graph.edges:
        k = rng.randint(lo, hi)
        keep = rng.random() < 0.5 or k == 0
        mids = []
        for _ in range(k):
            w = st.new_vertex()
            st.rot[w] = [u, v]
            mids.append(w)
        ru, rv = st.rot[u], st.rot[v]
        iu, iv = ru.index(v), rv.index(u)
        ru[iu:iu + 1] = ([v] if keep else []) + mids
        rv[iv:iv + 1] = list(reversed(mids)) + ([u] if keep else [])
    return st.plane_graph()


def flip_to_min_degree(rng, pg, min_degree, flips):
    """Random edge flips on a triangulation that keep every degree >= min_degree."""
    st = _Rot(pg.rotation)
    for _ in range(flips):
        u = rng.choice(sorted(st.rot))
        v = rng.choice(st.rot[u])
        if len(st.rot[u]) <= min_degree or len(st.rot[v]) <= min_degree:
            continue
        _flip_edge(st, u, v)
    return st.plane_graph()


def geodesic(pg):
    """Split every triangle into four by joining edge midpoints."""
    st = _Rot(subdivide_plane(random.Random(0), pg, 1, 1).rotation)
    old = set(pg.graph.vertices)
    for face in st.faces():
        mids = [(x, a) for (x, a) in face if a not in old]
        k = len(mids)
        for i in range(k):
            a, b = mids[i][1], mids[(i + 1) % k][1]
            # incoming dart at a: the previous chord once one was added
            xa = mids[i][0] if i == 0 else mids[i - 1][1]
            yb = mids[(i + 1) % k][0]
            ra, rb = st.rot[a], st.rot[b]
            ra.insert(ra.index(xa) + 1, b)
            rb.insert(rb.index(yb) + 1, a)
    return st.plane_graph()


def _flip_edge(st, u, v):
    _, x = st.next_dart(u, v)
    _, y = st.next_dart(v, u)
    if x == y or y in st.rot[x] or st.next_dart(v, x) != (x, u) or st.next_dart(u, y) != (y, v):
        return False
    st.rot[u].remove(v)
    st.rot[v].remove(u)
    st.rot[x].insert(st.rot[x].index(v) + 1, y)
    st.rot[y].insert(st.rot[y].index(u) + 1, x)
    return True
