"""Exact density invariants: mad, fractional arboricity, potential minimum, degeneracy.

All three extremal quantities reduce to one selection problem: maximize
b·||A|| − a·|A| over vertex sets A, solved as a max-closure min-cut with
integer capacities. mad and arboricity then search the Stern-Brocot tree for
the exact optimum, which is a fraction with denominator at most |V|.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .graph import GraphError


@dataclass(frozen=True)
class DensityWitness:
    value: Fraction
    witness_set: tuple

    def __iter__(self):
        return iter((self.value, self.witness_set))


class _Dinic:
    def __init__(self, n):
        self.adj = [[] for _ in range(n)]

    def add(self, u, v, cap):
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def _bfs(self, s, t):
        level = [-1] * len(self.adj)
        level[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y, cap, _ in self.adj[x]:
                if cap > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    q.append(y)
        return level if level[t] >= 0 else None

    def _dfs(self, x, t, f, level, it):
        if x == t:
            return f
        edges = self.adj[x]
        while it[x] < len(edges):
            e = edges[it[x]]
            y, cap, rev = e
            if cap > 0 and level[y] == level[x] + 1:
                pushed = self._dfs(y, t, min(f, cap), level, it)
                if pushed:
                    e[1] -= pushed
                    self.adj[y][rev][1] += pushed
                    return pushed
            it[x] += 1
        return 0

    def maxflow(self, s, t, big):
        flow = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return flow
            it = [0] * len(self.adj)
            while True:
                f = self._dfs(s, t, big, level, it)
                if not f:
                    break
                flow += f

    def reachable(self, s):
        seen = {s}
        q = deque([s])
        while q:
            x = q.popleft()
            for y, cap, _ in self.adj[x]:
                if cap > 0 and y not in seen:
                    seen.add(y)
                    q.append(y)
        return seen


def _check(g):
    if g.n == 0:
        raise GraphError("density of the empty graph is undefined")
    if g.has_loops:
        raise GraphError("loops are not allowed in density computations")


def max_closure(g, a, b, forced=()):
    """max over A ⊇ forced of b·||A|| − a·|A| (integers a, b >= 0).

    Returns (value, A) with A the inclusion-minimal maximizer.
    """
    verts = g.vertices
    idx = {v: i for i, v in enumerate(verts)}
    mult = {}
    for e in g.edges:
        mult[e] = mult.get(e, 0) + 1
    es = sorted(mult)
    n, k = len(verts), len(es)
    s, t = n + k, n + k + 1
    net = _Dinic(n + k + 2)
    big = b * g.m + a * n + 1
    for j, (u, v) in enumerate(es):
        if b:
            net.add(s, n + j, b * mult[(u, v)])
        net.add(n + j, idx[u], big)
        net.add(n + j, idx[v], big)
    for i in range(n):
        if a:
            net.add(i, t, a)
    for v in forced:
        net.add(s, idx[v], big)
    cut = net.maxflow(s, t, big)
    side = net.reachable(s)
    A = tuple(v for v in verts if idx[v] in side)
    return b * g.m - cut, A


def _scale(a, b):
    a, b = Fraction(a), Fraction(b)
    d = lcm(a.denominator, b.denominator)
    return int(a * d), int(b * d), d


def potential_min(g, a, b):
    """min over nonempty A of a|A| − b·||A||, exact."""
    _check(g)
    if Fraction(a) < 0 or Fraction(b) < 0:
        raise ValueError("potential coefficients must be nonnegative")
    ai, bi, d = _scale(a, b)
    val, A = max_closure(g, ai, bi)
    if val <= 0 or not A:
        val, A = None, None
        for v in g.vertices:
            fv, Av = max_closure(g, ai, bi, forced=(v,))
            if val is None or fv > val:
                val, A = fv, Av
    return DensityWitness(Fraction(-val, d), A)


def _gallop(ok, limit):
    """Largest k in [0, limit] with ok(k), for ok True then False in k >= 1."""
    lo, hi = 0, 1
    while hi <= limit and ok(hi):
        lo, hi = hi, hi * 2
    hi = min(hi, limit + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _stern_brocot(pred, max_den):
    """Smallest fraction x > 0 with denominator <= max_den and pred(x) False.

    pred must be True exactly on [0, x*) where x* > 0 has denominator at
    most max_den; the descent then returns x* itself. Runs of equal moves
    are galloped, so the number of pred calls is polylogarithmic.
    """
    L, R = (0, 1), (1, 0)
    while L[1] + R[1] <= max_den:
        if R[1] == 0:
            lim = 1 << 62
        else:
            lim = (max_den - L[1]) // R[1]
        k = _gallop(lambda k: pred(Fraction(L[0] + k * R[0], L[1] + k * R[1])), lim)
        if k:
            nl = (L[0] + k * R[0], L[1] + k * R[1])
            if k < lim:
                R = (nl[0] + R[0], nl[1] + R[1])
            L = nl
            continue
        lim = (max_den - R[1]) // L[1]
        k = _gallop(lambda k: not pred(Fraction(k * L[0] + R[0], k * L[1] + R[1])), lim)
        nr = (k * L[0] + R[0], k * L[1] + R[1])
        if k < lim:
            L = (nr[0] + L[0], nr[1] + L[1])
        R = nr
    return Fraction(R[0], R[1])


def _eps_below(x, n):
    # distinct fractions with denominators <= n differ by more than 1/(2n^2)
    return x - Fraction(1, 2 * n * n)


def mad(g):
    """Maximum average degree with a densest vertex set as witness."""
    _check(g)
    if g.m == 0:
        return DensityWitness(Fraction(0), (g.vertices[0],))

    def denser_than(x):
        val, _ = max_closure(g, x.numerator, x.denominator)
        return val > 0

    rho = _stern_brocot(denser_than, g.n)
    lam = _eps_below(rho, g.n)
    val, A = max_closure(g, lam.numerator, lam.denominator)
    assert val > 0 and A
    w = DensityWitness(2 * rho, A)
    assert _avg_degree(g, A) == w.value, "witness does not reproduce mad"
    return w


def _best_nonempty(g, a, b):
    val, A = max_closure(g, a, b)
    if val > 0 and A:
        return val, A
    best = None
    for v in g.vertices:
        fv, Av = max_closure(g, a, b, forced=(v,))
        if best is None or fv > best[0]:
            best = (fv, Av)
    return best


def fractional_arboricity(g):
    """max over subgraphs H with >= 2 vertices of ||H|| / (|H| - 1).

    Edgeless graphs get value 0 and an empty witness by convention.
    """
    _check(g)
    if g.m == 0:
        return DensityWitness(Fraction(0), ())

    def pred(x):
        val, _ = _best_nonempty(g, x.numerator, x.denominator)
        return val > -x.numerator

    ups = _stern_brocot(pred, max(1, g.n - 1))
    lam = _eps_below(ups, g.n)
    val, A = _best_nonempty(g, lam.numerator, lam.denominator)
    assert len(A) >= 2
    w = DensityWitness(ups, A)
    assert edge_count(g, A) == ups * (len(A) - 1), "witness does not reproduce arboricity"
    return w


def edge_count(g, A):
    A = set(A)
    return sum(1 for u, v in g.edges if u in A and v in A)


def _avg_degree(g, A):
    return Fraction(2 * edge_count(g, A), len(A))


def potential(g, A, a, b):
    return Fraction(a) * len(A) - Fraction(b) * edge_count(g, A)


def degeneracy(g):
    """(d, order): repeatedly delete a minimum-degree vertex (smallest id on ties)."""
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.discard(v)
        for u in g.incident(v):
            if u in alive:
                deg[u] -= 1
    return d, order
