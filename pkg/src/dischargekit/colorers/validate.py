"""Colorings and their validity predicates.

A Coloring maps entities to colors. Vertices are ints; for total colorings
edges are (u, v) tuples with u < v; I,F-partitions use the labels "I"/"F".
"""
from dataclasses import dataclass, field
from itertools import combinations

KINDS = ("proper", "circular", "injective", "acyclic", "star", "linear",
         "improper", "total", "if")


@dataclass
class Coloring:
    kind: str
    colors: dict
    params: dict = field(default_factory=dict)

    def num_colors(self):
        return len(set(self.colors.values()))

    def vertex_colors(self):
        return {k: c for k, c in self.colors.items() if isinstance(k, int)}


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    message: str

    def __str__(self):
        return f"{self.kind}: {self.message} at {self.witness}"


def validate(g, c, lists=None):
    """Return None when c is a valid coloring of its kind, else a Violation."""
    if c.kind not in KINDS:
        raise ValueError(f"unknown coloring kind {c.kind!r}")
    col = c.colors
    for v in g.vertices:
        if v not in col:
            return Violation(c.kind, (v,), "uncolored vertex")
    if lists is not None:
        for k, L in lists.items():
            if k in col and col[k] not in L:
                return Violation(c.kind, (k,) if isinstance(k, int) else tuple(k), "color not in list")
    return _CHECKS[c.kind](g, col, c.params)


def is_valid(g, c, lists=None):
    return validate(g, c, lists) is None


def _proper(g, col, params):
    for u, v in g.edges:
        if col[u] == col[v]:
            return Violation("proper", (u, v), "monochromatic edge")
    return None


def _circular(g, col, params):
    p, q = params["p"], params["q"]
    for v in g.vertices:
        if not (isinstance(col[v], int) and 0 <= col[v] < p):
            return Violation("circular", (v,), f"color outside Z_{p}")
    for u, v in g.edges:
        d = (col[u] - col[v]) % p
        if not (q <= d <= p - q):
            return Violation("circular", (u, v), f"residues differ by {d} mod {p}")
    return None


def _injective(g, col, params):
    for w in g.vertices:
        seen = {}
        for u in g.neighbors(w):
            if col[u] in seen:
                return Violation("injective", (seen[col[u]], w, u), "two neighbors of a vertex share a color")
            seen[col[u]] = u
    return None


def _bicolored_components(g, col):
    """Yield (pair, component vertex list, adjacency) for each 2-colored component."""
    palette = sorted(set(col[v] for v in g.vertices), key=repr)
    for a, b in combinations(palette, 2):
        vs = [v for v in g.vertices if col[v] in (a, b)]
        vset = set(vs)
        adj = {v: [u for u in g.neighbors(v) if u in vset and col[u] != col[v]] for v in vs}
        seen = set()
        for s in vs:
            if s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            yield (a, b), comp, adj


def _find_cycle(comp, adj):
    parent = {comp[0]: None}
    stack = [comp[0]]
    order = []
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adj[x]:
            if y == parent[x]:
                continue
            if y in parent:
                # x..y closes a cycle: walk both up to the common ancestor
                px, py = [x], [y]
                anc_x = {x}
                z = x
                while parent[z] is not None:
                    z = parent[z]
                    px.append(z)
                    anc_x.add(z)
                z = y
                while z not in anc_x:
                    z = parent[z]
                    py.append(z)
                top = py[-1]
                cyc = px[:px.index(top) + 1] + list(reversed(py[:-1]))
                return tuple(cyc)
            parent[y] = x
            stack.append(y)
    return None


def _acyclic(g, col, params, kind="acyclic"):
    bad = _proper(g, col, params)
    if bad:
        return Violation(kind, bad.witness, bad.message)
    for pair, comp, adj in _bicolored_components(g, col):
        edges2 = sum(len(adj[v]) for v in comp) // 2
        if edges2 >= len(comp):
            return Violation(kind, _find_cycle(comp, adj), f"cycle 2-colored by {pair}")
    return None


def _star(g, col, params):
    bad = _proper(g, col, params)
    if bad:
        return Violation("star", bad.witness, bad.message)
    # a 2-colored P4 exists iff some 2-colored edge has both ends of bicolored degree >= 2
    for u, v in g.edges:
        nu = [x for x in g.neighbors(u) if x != v and col[x] == col[v]]
        nv = [y for y in g.neighbors(v) if y != u and col[y] == col[u]]
        for x in nu:
            for y in nv:
                if x != y:
                    return Violation("star", (x, u, v, y), "2-colored path on 4 vertices")
    return None


def _linear(g, col, params):
    bad = _acyclic(g, col, params, kind="linear")
    if bad:
        return bad
    for pair, comp, adj in _bicolored_components(g, col):
        for v in comp:
            if len(adj[v]) > 2:
                return Violation("linear", (v,) + tuple(adj[v][:3]), f"bicolored degree > 2 in {pair}")
    return None


def _improper(g, col, params):
    d = params.get("d", 1)
    for v in g.vertices:
        same = [u for u in g.incident(v) if u != v and col[u] == col[v]]
        if len(same) > d:
            return Violation("improper", (v,) + tuple(same), f"more than {d} same-colored neighbors")
    return None


def _total(g, col, params):
    bad = _proper(g, col, params)
    if bad:
        return Violation("total", bad.witness, bad.message)
    for u, v in g.edges:
        e = (min(u, v), max(u, v))
        if e not in col:
            return Violation("total", e, "uncolored edge")
        if col[e] in (col[u], col[v]):
            return Violation("total", e, "edge color equals an endpoint color")
    for v in g.vertices:
        seen = {}
        for u in g.neighbors(v):
            e = (min(u, v), max(u, v))
            if col[e] in seen:
                return Violation("total", (seen[col[e]], e), "incident edges share a color")
            seen[col[e]] = e
    return None


def _if(g, col, params):
    for v in g.vertices:
        if col[v] not in ("I", "F"):
            return Violation("if", (v,), "label must be I or F")
    I = {v for v in g.vertices if col[v] == "I"}
    for v in g.vertices:
        near = [u for u in g.neighbors(v) if u in I]
        if v in I and near:
            return Violation("if", (v, near[0]), "adjacent vertices of I")
        if len(near) >= 2:
            return Violation("if", (near[0], v, near[1]), "vertices of I at distance 2")
    F = g.subgraph(v for v in g.vertices if col[v] == "F")
    adj = {v: list(F.incident(v)) for v in F.vertices}
    for comp in F.components():
        if sum(len(adj[v]) for v in comp) // 2 >= len(comp):
            return Violation("if", tuple(comp), "F induces a cycle")
    return None


_CHECKS = {
    "proper": _proper,
    "circular": _circular,
    "injective": _injective,
    "acyclic": _acyclic,
    "star": _star,
    "linear": _linear,
    "improper": _improper,
    "total": _total,
    "if": _if,
}
