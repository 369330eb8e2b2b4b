"""Exponential-time exact solvers for small graphs.

These are deliberately plain: subset enumeration and backtracking with
incremental constraint checks. They refuse inputs above the vertex budget
(OracleRefusal) instead of running unboundedly; refusal is never reported
as infeasibility.
"""
import os
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph


class OracleRefusal(Exception):
    pass


def _default_max_vertices():
    env = os.environ.get("DCG_ORACLE_BUDGET")
    return int(env) if env else 14


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = None
    max_edges: int = None

    def check(self, g):
        mv = self.max_vertices if self.max_vertices is not None else _default_max_vertices()
        if g.n > mv:
            raise OracleRefusal(f"{g.n} vertices exceeds oracle budget of {mv}")
        if self.max_edges is not None and g.m > self.max_edges:
            raise OracleRefusal(f"{g.m} edges exceeds oracle budget of {self.max_edges}")


def _budget(budget):
    return budget if budget is not None else OracleBudget()


# ---------------------------------------------------------------- densities

def brute_mad(g, budget=None):
    """max over nonempty vertex subsets of 2||A||/|A| by enumeration."""
    _budget(budget).check(g)
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    emasks = [(1 << idx[u]) | (1 << idx[v]) for u, v in g.edges]
    best = Fraction(0)
    for mask in range(1, 1 << len(vs)):
        e = sum(1 for em in emasks if em & mask == em)
        size = bin(mask).count("1")
        if Fraction(2 * e, size) > best:
            best = Fraction(2 * e, size)
    return best


def brute_potential_min(g, a, b, budget=None):
    _budget(budget).check(g)
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    emasks = [(1 << idx[u]) | (1 << idx[v]) for u, v in g.edges]
    a, b = Fraction(a), Fraction(b)
    best = None
    for mask in range(1, 1 << len(vs)):
        e = sum(1 for em in emasks if em & mask == em)
        val = a * bin(mask).count("1") - b * e
        if best is None or val < best:
            best = val
    return best


def brute_arboricity(g, budget=None):
    _budget(budget).check(g)
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    emasks = [(1 << idx[u]) | (1 << idx[v]) for u, v in g.edges]
    best = Fraction(0)
    for mask in range(1, 1 << len(vs)):
        size = bin(mask).count("1")
        if size < 2:
            continue
        e = sum(1 for em in emasks if em & mask == em)
        best = max(best, Fraction(e, size - 1))
    return best


# ---------------------------------------------------------------- search core

def _order(g):
    """BFS order from high-degree vertices: neighbors get assigned early."""
    order, seen = [], set()
    for s in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(g.neighbors(x), key=lambda v: (-g.degree(v), v)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def _search(order, domains, ok):
    """Backtracking: assign order[i] a value from domains[v] so ok(assign, v) holds."""
    assign = {}

    def rec(i):
        if i == len(order):
            return True
        v = order[i]
        for c in domains[v]:
            assign[v] = c
            if ok(assign, v) and rec(i + 1):
                return True
            del assign[v]
        return False

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * len(order) + 100))
    try:
        return dict(assign) if rec(0) else None
    finally:
        sys.setrecursionlimit(old)


# ---------------------------------------------------------------- homomorphisms

def brute_homomorphism(g, h, budget=None):
    """Edge-preserving map V(g) -> V(h), or None."""
    _budget(budget).check(g)
    if g.has_loops and not h.has_loops:
        return None
    hadj = {x: set(h.incident(x)) for x in h.vertices}
    gadj = {v: set(g.incident(v)) for v in g.vertices}
    order = _order(g)
    domains = {v: list(h.vertices) for v in g.vertices}

    def ok(assign, v):
        x = assign[v]
        for u in gadj[v]:
            if u in assign and assign[u] not in hadj[x]:
                return False
        return True

    return _search(order, domains, ok)


def circular_clique_graph(p, q):
    return Graph(range(p), [(i, j) for i in range(p) for j in range(i + 1, p)
                            if q <= (j - i) <= p - q])


def _circular_map(g, p, q, budget):
    """Direct (p,q)-coloring search with vertex order pinning."""
    gadj = {v: set(g.incident(v)) for v in g.vertices}
    order = _order(g)
    domains = {v: list(range(p)) for v in g.vertices}
    # the circular clique is vertex-transitive: pin the first vertex of each component
    seen = set()
    for comp in g.components():
        first = next(v for v in order if v in set(comp))
        domains[first] = [0]
        seen.update(comp)

    def ok(assign, v):
        x = assign[v]
        for u in gadj[v]:
            if u in assign:
                d = (x - assign[u]) % p
                if not (q <= d <= p - q):
                    return False
        return True

    return _search(order, domains, ok)


def brute_circular_chromatic(g, budget=None):
    """min p/q over q <= |V| such that g maps to K_{p:q}."""
    _budget(budget).check(g)
    if g.has_loops:
        raise ValueError("graphs with loops have no circular coloring")
    if g.m == 0:
        return Fraction(1)
    chi = brute_chromatic_kind(g, "proper", budget)
    cands = sorted({Fraction(p, q) for q in range(1, g.n + 1)
                    for p in range(2 * q, chi * q + 1)})
    for r in cands:
        if _circular_map(g, r.numerator, r.denominator, budget) is not None:
            return r
    return Fraction(chi)


# ---------------------------------------------------------------- list colorings

def _kind_ok(g, kind, d=1):
    """Incremental checker for a partial assignment after coloring v."""
    adj = {v: [u for u in g.neighbors(v)] for v in g.vertices}

    def proper(assign, v):
        return all(assign.get(u) != assign[v] for u in adj[v])

    def improper(assign, v):
        c = assign[v]
        same = [u for u in adj[v] if assign.get(u) == c]
        if len(same) > d:
            return False
        for u in same:
            if sum(1 for w in adj[u] if assign.get(w) == c) > d:
                return False
        return True

    def injective(assign, v):
        c = assign[v]
        for w in adj[v]:
            if sum(1 for u in adj[w] if assign.get(u) == c) > 1:
                return False
        return True

    def bicolored_ok(assign, v, linear=False, star=False):
        if not proper(assign, v):
            return False
        c = assign[v]
        for a in set(assign[u] for u in adj[v] if u in assign):
            # component of v in the {a, c}-colored subgraph among colored vertices
            comp, stack = {v}, [v]
            edges = 0
            while stack:
                x = stack.pop()
                nb = [y for y in adj[x] if y in assign and assign[y] in (a, c) and assign[y] != assign[x]]
                if linear and len(nb) > 2:
                    return False
                edges += len(nb)
                for y in nb:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            if edges // 2 >= len(comp):
                return False
            if star:
                # a bicolored tree is a star iff it has at most one vertex of degree >= 2
                hubs = sum(1 for x in comp
                           if sum(1 for y in adj[x] if y in comp and assign[y] != assign[x]) >= 2)
                if hubs > 1:
                    return False
        return True

    if kind == "proper":
        return proper
    if kind == "improper":
        return improper
    if kind == "injective":
        return injective
    if kind == "acyclic":
        return bicolored_ok
    if kind == "linear":
        return lambda a, v: bicolored_ok(a, v, linear=True)
    if kind == "star":
        return lambda a, v: bicolored_ok(a, v, star=True)
    raise ValueError(f"unknown list-coloring kind {kind!r}")


def brute_list_color(g, lists, kind="proper", d=1, budget=None):
    """A coloring from the lists satisfying `kind`, or None when infeasible."""
    _budget(budget).check(g)
    domains = {v: sorted(lists[v], key=repr) for v in g.vertices}
    return _search(_order(g), domains, _kind_ok(g, kind, d))


def brute_chromatic_kind(g, kind="proper", budget=None):
    """Least k such that a coloring of `kind` with colors 0..k-1 exists."""
    _budget(budget).check(g)
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if brute_list_color(g, {v: range(k) for v in g.vertices}, kind, budget=budget) is not None:
            return k
    return g.n


def brute_improper(g, j, k, budget=None):
    """2-coloring where color-0 vertices have <= j same neighbors, color-1 <= k.

    Returns (part0, part1) or None.
    """
    _budget(budget).check(g)
    adj = {v: list(g.incident(v)) for v in g.vertices}
    cap = (j, k)

    def ok(assign, v):
        c = assign[v]
        same = [u for u in adj[v] if assign.get(u) == c]
        if len(same) > cap[c]:
            return False
        for u in same:
            if sum(1 for w in adj[u] if assign.get(w) == c) > cap[c]:
                return False
        return True

    res = _search(_order(g), {v: [0, 1] for v in g.vertices}, ok)
    if res is None:
        return None
    return (tuple(v for v in g.vertices if res[v] == 0), tuple(v for v in g.vertices if res[v] == 1))


def brute_if(g, budget=None):
    """An I,F-partition (I 2-independent, G[F] a forest) or None."""
    _budget(budget).check(g)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    vs = list(g.vertices)

    def forest(F):
        parent = {v: v for v in F}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x
        for u, v in g.edges:
            if u in F and v in F:
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
        return True

    def rec(i, I, blocked):
        F = set(vs) - I
        if forest(F):
            return set(I)
        if i == len(vs):
            return None
        for idx in range(i, len(vs)):
            v = vs[idx]
            if v in blocked:
                continue
            near = adj[v] | {w for u in adj[v] for w in adj[u]}
            res = rec(idx + 1, I | {v}, blocked | near | {v})
            if res is not None:
                return res
        return None

    I = rec(0, frozenset(), frozenset())
    if I is None:
        return None
    return tuple(sorted(I)), tuple(v for v in vs if v not in I)


# ---------------------------------------------------------------- walks in circular cliques

def brute_thread_reach(p, q, ell, start=0):
    """Colors reachable at each vertex of a path u_0..u_{ell+1} with u_0 = start,
    found by breadth-first search in K_{p:q}. Entry i is a frozenset."""
    if q < 1 or p < 2 * q:
        raise ValueError(f"need p >= 2q >= 2, got p={p}, q={q}")
    nbrs = {a: [b for b in range(p) if q <= (a - b) % p <= p - q] for a in range(p)}
    layers = [frozenset({start % p})]
    for _ in range(ell + 1):
        layers.append(frozenset(b for a in layers[-1] for b in nbrs[a]))
    return layers
