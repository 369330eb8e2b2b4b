"""Graphs, threads and local structure queries.

Vertex ids are arbitrary nonnegative integers. Graph objects are immutable;
algorithms that delete vertices work on `adjacency_sets()` copies.
"""
from collections import Counter, deque
from dataclasses import dataclass
import math

INF = math.inf


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        super().__init__(msg)


class Graph:
    """Finite graph or multigraph with integer vertex ids.

    Edges are stored as a sorted tuple of (u, v) pairs with u <= v; parallel
    edges appear repeatedly. Loops are only accepted with allow_loops=True.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_mult")

    def __init__(self, vertices=(), edges=(), allow_loops=False):
        vs = set()
        for v in vertices:
            _check_id(v)
            vs.add(v)
        es = []
        for u, v in edges:
            _check_id(u)
            _check_id(v)
            if u == v and not allow_loops:
                raise GraphError(f"loop at vertex {u} not allowed in simple mode")
            vs.add(u)
            vs.add(v)
            es.append((u, v) if u <= v else (v, u))
        es.sort()
        self._vertices = tuple(sorted(vs))
        self._edges = tuple(es)
        adj = {v: [] for v in self._vertices}
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._mult = Counter(es)

    # basic accessors
    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def n(self):
        return len(self._vertices)

    @property
    def m(self):
        return len(self._edges)

    @property
    def simple(self):
        return all(c == 1 for c in self._mult.values()) and not self.has_loops

    @property
    def has_loops(self):
        return any(u == v for u, v in self._mult)

    def __contains__(self, v):
        return v in self._adj

    def degree(self, v):
        return len(self._adj[v])

    def neighbors(self, v):
        """Distinct neighbors, sorted."""
        return tuple(sorted(set(self._adj[v])))

    def incident(self, v):
        """Neighbor list with multiplicity (a loop contributes v twice)."""
        return self._adj[v]

    def multiplicity(self, u, v):
        return self._mult.get((u, v) if u <= v else (v, u), 0)

    def has_edge(self, u, v):
        return self.multiplicity(u, v) > 0

    def degrees(self):
        return {v: len(ns) for v, ns in self._adj.items()}

    def max_degree(self):
        return max((len(ns) for ns in self._adj.values()), default=0)

    def min_degree(self):
        return min((len(ns) for ns in self._adj.values()), default=0)

    def average_degree(self):
        from fractions import Fraction
        if not self.n:
            raise GraphError("average degree of the empty graph")
        return Fraction(2 * self.m, self.n)

    def distinct_edges(self):
        return tuple(sorted(self._mult))

    def adjacency_sets(self):
        """Mutable dict v -> set of distinct neighbors (simple view)."""
        return {v: set(ns) - {v} for v, ns in self._adj.items()}

    # derived graphs
    def subgraph(self, vs):
        vs = set(vs)
        return Graph(vs, [e for e in self._edges if e[0] in vs and e[1] in vs],
                     allow_loops=True)

    def delete_vertices(self, vs):
        vs = set(vs)
        return self.subgraph(v for v in self._vertices if v not in vs)

    def add_edges(self, edges, vertices=()):
        return Graph(self._vertices + tuple(vertices), self._edges + tuple(edges),
                     allow_loops=True)

    def relabel(self, mapping):
        return Graph([mapping[v] for v in self._vertices],
                     [(mapping[u], mapping[v]) for u, v in self._edges],
                     allow_loops=self.has_loops)

    def components(self):
        seen = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = []
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return self.n > 0 and len(self.components()) == 1

    def __eq__(self, other):
        return isinstance(other, Graph) and (self._vertices, self._edges) == (other._vertices, other._edges)

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _check_id(v):
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise GraphError(f"vertex ids must be nonnegative integers, got {v!r}")


# ---------------------------------------------------------------- file format

def parse_graph(text, multigraph=False):
    """Parse `e u v` / `v u` lines; `#` starts a comment.

    Parallel edges are always kept (the result is then not simple). Loops are
    accepted only when multigraph=True.
    """
    vertices, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise ParseError(f"non-integer vertex id in {raw.strip()!r}", lineno) from None
        if any(x < 0 for x in nums):
            raise ParseError("negative vertex id", lineno)
        if parts[0] == "e" and len(nums) == 2:
            if nums[0] == nums[1] and not multigraph:
                raise ParseError(f"loop at {nums[0]} (only allowed in multigraph mode)", lineno)
            edges.append(tuple(nums))
        elif parts[0] == "v" and len(nums) == 1:
            vertices.append(nums[0])
        else:
            raise ParseError(f"malformed record {raw.strip()!r}", lineno)
    return Graph(vertices, edges, allow_loops=multigraph)


def serialize_graph(g):
    """Canonical text: isolated vertices first, then sorted edges."""
    lines = [f"v {v}" for v in g.vertices if g.degree(v) == 0]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------- threads

@dataclass(frozen=True)
class Thread:
    """Maximal run of 2-vertices between two endpoints of degree != 2.

    `interior` is ordered from endpoints[0] to endpoints[1]. Both endpoints can
    coincide when the thread closes a cycle through a single branch vertex.
    """
    endpoints: tuple
    interior: tuple

    @property
    def length(self):
        return len(self.interior)

    def path(self):
        return (self.endpoints[0],) + self.interior + (self.endpoints[1],)


def cycle_components(g):
    """Components that are 2-regular (cycles), as sorted vertex lists."""
    return [c for c in g.components() if all(g.degree(v) == 2 for v in c)]


def _walk(g, prev, cur):
    """Follow 2-vertices from edge prev->cur; return (interior, end)."""
    interior = []
    start = prev
    while g.degree(cur) == 2:
        interior.append(cur)
        a, b = g.incident(cur)
        nxt = b if a == prev else a
        if a == b:  # parallel pair
            nxt = a
        prev, cur = cur, nxt
        if cur == start and g.degree(cur) == 2:
            break
    return interior, cur


def incident_threads(g, v):
    """For each edge-end at v, the thread leaving v along it: (interior, far end).

    Edges to non-2-vertices give an empty interior.
    """
    out = []
    for u in g.incident(v):
        interior, end = _walk(g, v, u)
        out.append((tuple(interior), end))
    return out


def find_threads(g, ell=1):
    """Maximal threads with at least `ell` interior vertices.

    Cycle components contain no thread (see cycle_components).
    """
    cyc = {v for c in cycle_components(g) for v in c}
    seen = set()
    found = []
    for v in g.vertices:
        if g.degree(v) != 2 or v in seen or v in cyc:
            continue
        a, b = g.incident(v)
        left, ea = _walk(g, v, a)
        right, eb = _walk(g, v, b)
        interior = list(reversed(left)) + [v] + right
        seen.update(interior)
        ends = (ea, eb)
        if (ea, interior[0]) > (eb, interior[-1]):
            ends = (eb, ea)
            interior.reverse()
        if len(interior) >= ell:
            found.append(Thread(ends, tuple(interior)))
    found.sort(key=lambda t: (t.endpoints, t.interior))
    return found


def thread_of(g, v):
    """The maximal thread through 2-vertex v, or None on a cycle component."""
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, not 2")
    for t in find_threads(g, 1):
        if v in t.interior:
            return t
    return None


def weak_two_neighbors(g, v):
    """All 2-vertices on threads incident to v (v must have degree >= 3)."""
    if g.degree(v) <= 2:
        raise GraphError(f"weak 2-neighbors need degree >= 3; vertex {v} has degree {g.degree(v)}")
    ws = set()
    for interior, _ in incident_threads(g, v):
        ws.update(interior)
    return sorted(ws)


# ---------------------------------------------------------------- distances

def bfs_distances(g, s, limit=None):
    dist = {s: 0}
    q = deque([s])
    while q:
        x = q.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in g.incident(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def girth(g):
    """Length of a shortest cycle; loops give 1, parallel edges 2; INF for forests."""
    if g.has_loops:
        return 1
    if not g.simple:
        return 2
    best = INF
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        q = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.incident(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def odd_girth(g):
    """Length of a shortest odd cycle (INF when bipartite).

    A shortest odd closed walk through s is found by BFS in the bipartite
    double cover; its length equals the shortest odd cycle length overall.
    """
    best = INF
    for s in g.vertices:
        dist = {(s, 0): 0}
        q = deque([(s, 0)])
        while q:
            x, side = q.popleft()
            d = dist[(x, side)]
            if d + 1 >= best:
                break
            for y in g.incident(x):
                key = (y, 1 - side)
                if key not in dist:
                    dist[key] = d + 1
                    q.append(key)
        if (s, 1) in dist:
            best = min(best, dist[(s, 1)])
    return best


def square(g):
    """G^2: join vertices at distance at most 2."""
    adj = g.adjacency_sets()
    edges = set()
    for v in g.vertices:
        near = set(adj[v])
        for u in adj[v]:
            near |= adj[u]
        near.discard(v)
        edges.update((v, u) for u in near if v < u)
    return Graph(g.vertices, sorted(edges))


def induced_degrees(adj, vs):
    return {v: len(adj[v] & vs) for v in vs}
