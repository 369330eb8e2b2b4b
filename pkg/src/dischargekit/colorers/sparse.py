"""Colorers for sparse graphs, each built as a reduction stack.

A reduction deletes a small vertex set from the current graph; colors are
restored in reverse order, so each extension only has to respect vertices
that were still present when its set was removed.
"""
from collections import deque
from fractions import Fraction
from itertools import product

from ..density import mad
from ..errors import HypothesisError, InvariantViolation
from ..graph import cycle_components, find_threads, incident_threads
from ..rational import fmt
from .validate import Coloring, is_valid


def _require_mad(g, bound):
    if g.has_loops:
        raise HypothesisError("loops are not allowed")
    if g.n == 0:
        return
    m = mad(g).value
    if m >= bound:
        raise HypothesisError(f"mad {fmt(m)} is not < {fmt(bound)}")


def _backtrack(order, domains, ok):
    """First assignment (in domain order) with ok(assign, v) after each step."""
    n = len(order)
    assign, idx, i = {}, [0] * n, 0
    while 0 <= i < n:
        v = order[i]
        dom = domains[v]
        assign.pop(v, None)
        while idx[i] < len(dom):
            assign[v] = dom[idx[i]]
            idx[i] += 1
            if ok(assign, v):
                break
            del assign[v]
        else:
            idx[i] = 0
            i -= 1
            continue
        i += 1
    return assign if i == n else None


def _bfs_order(g, vs):
    vs = set(vs)
    order, seen = [], set()
    for s in sorted(vs):
        if s in seen:
            continue
        seen.add(s)
        q = deque([s])
        while q:
            x = q.popleft()
            order.append(x)
            for y in g.neighbors(x):
                if y in vs and y not in seen:
                    seen.add(y)
                    q.append(y)
    return order


# ---------------------------------------------------------------- I,F-partitions

def _if_valid(g, lab):
    sub = g.subgraph(lab)
    return is_valid(sub, Coloring("if", {v: lab[v] for v in sub.vertices}))


def _hub_layout(h, u):
    """Pick a 2-thread <u,x,y,z> and 1-threads <u,v,w>, <u,v',w'> on distinct edge-ends."""
    its = incident_threads(h, u)
    two = next((k for k, (it, _) in enumerate(its) if len(it) == 2), None)
    if two is None:
        return None
    (x, y), z = its[two]
    others = [its[k] for k in range(len(its)) if k != two]
    if len(others) != 2 or any(not it for it, _ in others):
        return None
    (it1, e1), (it2, e2) = others
    v, w = it1[0], (it1[1] if len(it1) > 1 else e1)
    v2, w2 = it2[0], (it2[1] if len(it2) > 1 else e2)
    S = [u, x, y, v, v2]
    if len(set(S)) != 5 or {z, w, w2} & set(S):
        return None
    return {"u": u, "x": x, "y": y, "z": z, "v": v, "w": w, "v2": v2, "w2": w2, "S": S}


def if_partition(g):
    """Split V into a 2-independent set I and a set F inducing a forest.

    Returns (I, F) as sorted tuples.
    """
    _require_mad(g, Fraction(7, 3))
    stack = []
    h = g
    while h.n:
        cyc = cycle_components(h)
        if cyc:
            for comp in cyc:
                stack.append(("set", comp, [{comp[0]: "I", **{x: "F" for x in comp[1:]}}]))
            h = h.delete_vertices([v for c in cyc for v in c])
            continue
        low = next((v for v in h.vertices if h.degree(v) <= 1), None)
        if low is not None:
            stack.append(("set", [low], [{low: "F"}]))
            h = h.delete_vertices([low])
            continue
        threads = find_threads(h, 3)
        if threads:
            th = threads[0]
            w, x, y = th.interior[:3]
            v = th.endpoints[0]
            z = th.interior[3] if th.length > 3 else th.endpoints[1]
            stack.append(("thread", (v, w, x, y, z)))
            h = h.delete_vertices([w, x, y])
            continue
        hub = None
        for u in h.vertices:
            if h.degree(u) == 3:
                weak = {a for it, _ in incident_threads(h, u) for a in it}
                if len(weak) >= 5:
                    hub = (u, weak)
                    break
        if hub is None:
            raise InvariantViolation(f"no reducible configuration in a {h.n}-vertex remainder")
        u, weak = hub
        lay = _hub_layout(h, u)
        if lay is not None:
            stack.append(("hub", lay))
            h = h.delete_vertices(lay["S"])
        else:
            S = [u] + sorted(weak)
            stack.append(("set", S, []))
            h = h.delete_vertices(S)

    lab = {}
    for item in reversed(stack):
        if item[0] == "thread":
            v, w, x, y, z = item[1]
            if lab.get(v) == "I" or lab.get(z) == "I":
                pref = {w: "F", x: "F", y: "F"}
            else:
                pref = {w: "F", x: "I", y: "F"}
            S, prefs = [w, x, y], [pref]
        elif item[0] == "hub":
            lay = item[1]
            S = lay["S"]
            rest = {a: "F" for a in S}
            if lab.get(lay["w"]) != "I" and lab.get(lay["w2"]) != "I":
                prefs = [{**rest, lay["u"]: "I"}]
            elif lab.get(lay["z"]) != "I":
                prefs = [{**rest, lay["x"]: "I"}]
            else:
                prefs = [rest]
        else:
            _, S, prefs = item
        _extend_if(g, lab, S, prefs)
    I = tuple(sorted(v for v in lab if lab[v] == "I"))
    F = tuple(sorted(v for v in lab if lab[v] == "F"))
    return I, F


def _extend_if(g, lab, S, prefs):
    tried = list(prefs) + [dict(zip(S, bits)) for bits in product("FI", repeat=len(S))]
    for cand in tried:
        lab.update(cand)
        if _if_valid(g, lab):
            return
        for a in S:
            lab.pop(a, None)
    raise InvariantViolation(f"no I,F extension over {sorted(S)}")


def star_color4(g):
    """Star coloring with colors 0..3: depth mod 3 on the forest F, color 3 on I."""
    I, F = if_partition(g)
    col = {v: 3 for v in I}
    fs = set(F)
    for s in sorted(F):
        if s in col:
            continue
        col[s] = 0
        depth = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.neighbors(x):
                if y in fs and y not in depth:
                    depth[y] = depth[x] + 1
                    col[y] = depth[y] % 3
                    q.append(y)
    return Coloring("star", col)


# ---------------------------------------------------------------- 2|1 list colorings

def _improper_ok(g, col, d=1):
    def ok(assign, v):
        c = assign[v]
        get = lambda x: assign.get(x, col.get(x))
        same = [u for u in g.incident(v) if get(u) == c]
        if len(same) > d:
            return False
        return all(sum(1 for w in g.incident(u) if get(w) == c) <= d for u in same)
    return ok


def improper_2list(g, lists):
    """1-improper coloring from lists of size >= 2 (each vertex has at most one
    neighbor of its own color)."""
    _require_mad(g, Fraction(8, 3))
    for v in g.vertices:
        if len(set(lists[v])) < 2:
            raise HypothesisError(f"list of vertex {v} has fewer than two colors")
    L = {v: sorted(set(lists[v]), key=repr) for v in g.vertices}
    stack = []
    h = g
    while h.n:
        cyc = cycle_components(h)
        if cyc:
            for comp in cyc:
                stack.append(("search", list(comp)))
            h = h.delete_vertices([v for c in cyc for v in c])
            continue
        low = next((v for v in h.vertices if h.degree(v) <= 1), None)
        if low is not None:
            stack.append(("avoid", low, tuple(h.neighbors(low))))
            h = h.delete_vertices([low])
            continue
        pair = next(((a, b) for a, b in h.distinct_edges() if h.degree(a) == 2 and h.degree(b) == 2), None)
        if pair is not None:
            a, b = pair
            a_out = [x for x in h.incident(a) if x != b][0]
            b_out = [x for x in h.incident(b) if x != a][0]
            stack.append(("avoid", a, (a_out,)))
            stack.append(("avoid", b, (b_out,)))
            h = h.delete_vertices([a, b])
            continue
        tree = _tree_of_threes(h)
        if tree is None:
            raise InvariantViolation(f"no reducible configuration in a {h.n}-vertex remainder")
        outside = {x for v in tree for x in h.neighbors(v) if x not in tree}
        S = list(tree) + sorted(outside)
        stack.append(("search", S))
        h = h.delete_vertices(S)

    col = {}
    for item in reversed(stack):
        if item[0] == "avoid":
            _, v, nb = item
            bad = {col[u] for u in nb}
            col[v] = next(c for c in L[v] if c not in bad)
        else:
            S = item[1]
            res = _backtrack(_bfs_order(g, S), L, _improper_ok(g, col))
            if res is None:
                raise InvariantViolation(f"no 1-improper extension over {sorted(S)}")
            col.update(res)
    return Coloring("improper", col, {"d": 1})


def _tree_of_threes(h):
    """A tree component of h[3-vertices] whose leaving edges all end at 2-vertices."""
    threes = [v for v in h.vertices if h.degree(v) == 3]
    sub = h.subgraph(threes)
    for comp in sub.components():
        cs = set(comp)
        if sum(1 for a, b in sub.edges if a in cs) != len(comp) - 1:
            continue
        if all(h.degree(x) == 2 for v in comp for x in h.incident(v) if x not in cs):
            return comp
    return None


# ---------------------------------------------------------------- acyclic list colorings

def acyclic_6list(g, lists):
    """Acyclic coloring from lists of size >= 6 when mad < 3.

    Peels 1⁻-vertices and 2-vertices with a 5⁻-neighbor.
    """
    _require_mad(g, Fraction(3))
    if not g.simple:
        raise HypothesisError("parallel edges always form a 2-colored cycle")
    for v in g.vertices:
        if len(set(lists[v])) < 6:
            raise HypothesisError(f"list of vertex {v} has fewer than six colors")
    L = {v: sorted(set(lists[v]), key=repr) for v in g.vertices}
    stack = []
    h = g
    while h.n:
        low = next((v for v in h.vertices if h.degree(v) <= 1), None)
        if low is not None:
            stack.append((low, tuple(h.neighbors(low)), ()))
            h = h.delete_vertices([low])
            continue
        found = None
        for v in h.vertices:
            if h.degree(v) == 2:
                small = [u for u in h.neighbors(v) if h.degree(u) <= 5]
                if small:
                    found = (v, small[0])
                    break
        if found is None:
            raise InvariantViolation(f"no 1⁻-vertex or 2-vertex with a 5⁻-neighbor in a {h.n}-vertex remainder")
        v, u = found
        second = tuple(x for x in h.neighbors(u) if x != v)
        stack.append((v, tuple(h.neighbors(v)), second))
        h = h.delete_vertices([v])

    col = {}
    for v, nb, second in reversed(stack):
        bad = {col[x] for x in nb}
        if len(nb) == 2 and len(bad) == 1:
            bad |= {col[x] for x in second}
        col[v] = next(c for c in L[v] if c not in bad)
    return Coloring("acyclic", col)
