"""Square coloring of planar graphs and total colorings composed from vertex and
edge colorings."""
from ..errors import HypothesisError, InvariantViolation
from ..graph import GraphError
from .lists import color_sequence
from .validate import Coloring, validate


def square_bound(delta):
    return delta * delta + 1 if delta <= 5 else 7 * delta - 7


def _next_vertex(deg, adj):
    low = min(deg, key=lambda v: (deg[v], v))
    if deg[low] <= 3:
        return low
    for v in sorted(deg):
        if deg[v] == 4 and any(deg[u] <= 7 for u in adj[v]):
            return v
        if deg[v] == 5 and sum(1 for u in adj[v] if deg[u] <= 6) >= 2:
            return v
    return None


def square_color_planar(g):
    """Proper coloring of G² with at most max(Δ²+1, 7Δ-7) colors (planar input assumed).

    The elimination order repeatedly takes a minimum-degree vertex while the
    minimum degree is at most 3, and otherwise a 4-vertex with a 7⁻-neighbor
    or a 5-vertex with two 6⁻-neighbors. Colors are then assigned first-fit
    in reverse elimination order.
    """
    if not g.simple:
        raise GraphError("square coloring needs a simple graph")
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    deg = {v: len(adj[v]) for v in g.vertices}
    removed = []
    while deg:
        v = _next_vertex(deg, adj)
        if v is None:
            raise HypothesisError(
                "no 4-vertex with a 7⁻-neighbor and no 5-vertex with two 6⁻-neighbors "
                "although the minimum degree is at least 4: the input is not planar")
        removed.append(v)
        for u in adj[v]:
            adj[u].discard(v)
            deg[u] -= 1
        del deg[v]
    col = {}
    for v in reversed(removed):
        near = set(g.neighbors(v))
        for u in list(near):
            near.update(g.neighbors(u))
        near.discard(v)
        used = {col[u] for u in near if u in col}
        col[v] = next(c for c in range(len(used) + 1) if c not in used)
    k = len(set(col.values()))
    if g.n and k > square_bound(g.max_degree()):
        raise InvariantViolation(f"{k} colors exceed the bound {square_bound(g.max_degree())}")
    return Coloring("proper", col, {"graph": "square"})


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def _edge_coloring_violation(g, ec):
    for u, v in g.edges:
        if _edge(u, v) not in ec:
            return (u, v), "uncolored edge"
    for v in g.vertices:
        seen = {}
        for u in g.neighbors(v):
            c = ec[_edge(u, v)]
            if c in seen:
                return (seen[c], _edge(u, v)), "incident edges share a color"
            seen[c] = _edge(u, v)
    return None


def total_compose(g, vc, ec):
    """Total coloring with colors 1..Δ+2 from a proper vertex coloring in
    {1,2,3,4} and a proper edge coloring with Δ colors.

    Edge classes are renamed 3..Δ+2 (ordered by their smallest edge). Edges
    renamed 3 or 4 are uncolored; they form paths and even cycles, which are
    recolored from the colors of {1,2,3,4} missing at their endpoints.
    """
    if not g.simple:
        raise GraphError("total coloring needs a simple graph")
    bad = validate(g, Coloring("proper", dict(vc)))
    if bad is not None:
        raise ValueError(f"vertex coloring invalid: {bad}")
    if not set(vc[v] for v in g.vertices) <= {1, 2, 3, 4}:
        raise ValueError("vertex colors must lie in {1, 2, 3, 4}")
    ec = {_edge(*e): c for e, c in ec.items()}
    bad = _edge_coloring_violation(g, ec)
    if bad is not None:
        raise ValueError(f"edge coloring invalid: {bad[1]} at {bad[0]}")
    delta = g.max_degree()
    classes = {}
    for e in sorted({_edge(u, v) for u, v in g.edges}):
        classes.setdefault(ec[e], e)
    if len(classes) > delta:
        raise ValueError(f"edge coloring uses {len(classes)} colors, more than Δ = {delta}")
    rename = {c: 3 + i for i, c in enumerate(sorted(classes, key=lambda c: classes[c]))}
    col = {v: vc[v] for v in g.vertices}
    loose = []
    for u, v in g.edges:
        e = _edge(u, v)
        c = rename[ec[e]]
        if c in (3, 4):
            loose.append(e)
        else:
            col[e] = c
    lists = {e: [c for c in (1, 2, 3, 4) if c not in (vc[e[0]], vc[e[1]])] for e in loose}
    for seq, closed in _edge_runs(loose):
        col.update(color_sequence(seq, lists, closed=closed))
    return Coloring("total", col)


def _edge_runs(edges):
    """Split edges of a graph with maximum degree 2 into ordered paths and cycles."""
    inc = {}
    for e in edges:
        for x in e:
            inc.setdefault(x, []).append(e)
    done, runs = set(), []
    ends = sorted(x for x in inc if len(inc[x]) == 1)
    starts = [(x, False) for x in ends] + [(e[0], True) for e in sorted(edges)]
    for x, closed in starts:
        first = inc[x][0]
        if first in done:
            continue
        seq, cur, e = [], x, first
        while e is not None and e not in done:
            done.add(e)
            seq.append(e)
            cur = e[1] if e[0] == cur else e[0]
            e = next((f for f in inc[cur] if f not in done), None)
        runs.append((seq, closed and len(seq) > 1))
    return runs
