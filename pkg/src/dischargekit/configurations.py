"""Detectors for reducible configurations and lemma-level unavoidability reports.

Every detector returns a Configuration or None. Supports list vertex ids
(faces appear in `faces`). Ties are broken by the smallest sorted support,
except for cycles, which are reported as the first cycle closed by scanning
edges in sorted order.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .density import mad
from .errors import HypothesisError
from .graph import (GraphError, cycle_components, find_threads, girth,
                    incident_threads, weak_two_neighbors)
from .plane import PlaneGraph
from .rational import fmt

LOW_VERTEX = "LowVertex"
THREAD = "Thread"
WEAK_HUB = "WeakNeighborHub"
LIGHT_EDGE = "LightEdge"
TWO_ALT_CYCLE = "TwoAlternatingCycle"
I_ALT = "IAlternatingSubgraph"
KOTZIG_EDGE = "KotzigEdge"
KOTZIG_CYCLE = "KotzigFourCycle"
TREE_COMPONENT = "TreeComponent"
ADJACENT_TWOS = "AdjacentTwos"
GIRTH_SEVEN_PAIR = "GirthSevenPair"
LOW_NEIGHBOR_TWO = "LowNeighborTwo"
FIVE_FACE = "FiveFaceConfig"
THREE_TWO_TWOS = "ThreeWithTwoTwos"
ADJ_THREES_WITH_TWOS = "AdjacentThreesWithTwos"
ADJ_TRIANGLES = "AdjacentTriangles"
SHORT_FACE = "ShortFace"
TEN_FACE = "TenFaceConfig"
LIGHT_NEIGHBOR = "LightNeighbor"
FEW_HEAVY = "FewHeavyNeighbors"


@dataclass(frozen=True)
class Configuration:
    kind: str
    support: tuple
    faces: tuple = ()
    detail: dict = field(default_factory=dict, compare=False, hash=False)

    def __str__(self):
        ids = [f"f{i}" for i in self.faces] + [str(v) for v in self.support]
        return f"{self.kind}: {' '.join(ids)}"


def _graph(x):
    return x.graph if isinstance(x, PlaneGraph) else x


# ---------------------------------------------------------------- simple detectors

def find_low_vertex(g, j):
    g = _graph(g)
    for v in g.vertices:
        if g.degree(v) <= j:
            return Configuration(LOW_VERTEX, (v,), detail={"j": j})
    return None


def find_light_edge(g, w, kind=LIGHT_EDGE):
    g = _graph(g)
    for u, v in g.distinct_edges():
        if u != v and g.degree(u) + g.degree(v) <= w:
            return Configuration(kind, (u, v), detail={"w": w})
    return None


def find_long_thread(g, ell):
    """A maximal thread with at least ell interior vertices (smallest path first)."""
    g = _graph(g)
    best = None
    for t in find_threads(g, ell):
        key = tuple(sorted(t.path()))
        if best is None or key < best[0]:
            best = (key, t)
    if best is None:
        return None
    t = best[1]
    return Configuration(THREAD, t.path(), detail={"ell": ell, "length": t.length})


def _reject_cycle_components(g):
    comps = cycle_components(g)
    if comps:
        raise GraphError(f"graph has a 2-regular component {comps[0]}")


def find_weak_hub(g, t):
    """A 3-vertex with >= 4t-3 weak 2-neighbors, or a 4+-vertex incident to a (2t-1)-thread."""
    g = _graph(g)
    _reject_cycle_components(g)
    for v in g.vertices:
        d = g.degree(v)
        if d == 3:
            weak = weak_two_neighbors(g, v)
            if len(weak) >= 4 * t - 3:
                return Configuration(WEAK_HUB, (v,) + tuple(weak), detail={"t": t, "item": "weak"})
        elif d >= 4:
            for interior, end in sorted(incident_threads(g, v)):
                if len(interior) >= 2 * t - 1:
                    return Configuration(WEAK_HUB, (v,) + interior + (end,),
                                         detail={"t": t, "item": "thread"})
    return None


def find_two_alternating_cycle(g):
    """Cycle alternating 2-vertices and 3+-vertices (edges scanned in sorted order)."""
    g = _graph(g)
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj = {}
    for u, v in g.distinct_edges():
        if u == v:
            continue
        du, dv = g.degree(u), g.degree(v)
        if not ((du == 2 and dv >= 3) or (dv == 2 and du >= 3)):
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            path = _forest_path(adj, u, v)
            return Configuration(TWO_ALT_CYCLE, tuple(path))
        parent[ru] = rv
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return None


def _forest_path(adj, s, t):
    prev = {s: None}
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            break
        for y in adj.get(x, ()):
            if y not in prev:
                prev[y] = x
                q.append(y)
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def find_i_alternating_subgraph(g, i):
    """Peeling detection of an i-alternating subgraph.

    U starts as all i⁻-vertices of positive degree, W = N(U). Each round
    deletes every w with d_F(w) <= d_G(w) + i - Δ - 1 together with its
    U-neighbors. A nonempty fixpoint is returned as (U, W). When two
    i⁻-vertices are adjacent, that light edge is returned instead.
    """
    g = _graph(g)
    delta = g.max_degree()
    if not (1 <= i <= delta):
        raise GraphError(f"i must satisfy 1 <= i <= Δ = {delta}, got {i}")
    U = {v for v in g.vertices if 0 < g.degree(v) <= i}
    for u, v in g.distinct_edges():
        if u in U and v in U:
            return Configuration(LIGHT_EDGE, (u, v), detail={"w": 2 * i})
    U, W, _ = _peel(g, i, U)
    if not U:
        return None
    return Configuration(I_ALT, tuple(sorted(U)) + tuple(sorted(W)),
                         detail={"i": i, "U": tuple(sorted(U)), "W": tuple(sorted(W))})


def _peel(g, i, U, one_at_a_time=False):
    """Return (U, W, donors) where donors lists deletion rounds [(w, U-nbrs), ...]."""
    delta = g.max_degree()
    U = set(U)
    rounds = []
    while U:
        dF = {}
        for u in U:
            for w in g.incident(u):
                dF[w] = dF.get(w, 0) + 1
        bad = sorted(w for w in dF if dF[w] <= g.degree(w) + i - delta - 1)
        if not bad:
            return U, set(dF), rounds
        if one_at_a_time:
            bad = bad[:1]
        step = []
        for w in bad:
            nb = sorted(u for u in set(g.incident(w)) if u in U)
            step.append((w, nb))
        for w, nb in step:
            U.difference_update(nb)
        rounds.append(step)
    return set(), set(), rounds


def find_tree_component_config(g):
    """Adjacent 2-vertices, or a tree component of G[3-vertices] all of whose
    leaving edges end at 2-vertices."""
    g = _graph(g)
    if g.min_degree() < 2:
        raise GraphError(f"minimum degree {g.min_degree()} < 2; peel low vertices first")
    for u, v in g.distinct_edges():
        if g.degree(u) == 2 and g.degree(v) == 2:
            return Configuration(ADJACENT_TWOS, (u, v))
    threes = [v for v in g.vertices if g.degree(v) == 3]
    h = g.subgraph(threes)
    for comp in h.components():
        cset = set(comp)
        inner = sum(1 for u, v in h.edges if u in cset)
        if inner != len(comp) - 1:
            continue
        ok = all(g.degree(x) == 2 for v in comp for x in g.incident(v) if x not in cset)
        if ok:
            return Configuration(TREE_COMPONENT, tuple(comp))
    return None


def find_kotzig_config(pg):
    """Edge of weight <= 11, or a 4-cycle x-a-y-b with d(x)=d(y)=3 and d(a) <= 10."""
    if not isinstance(pg, PlaneGraph):
        raise GraphError("this detector needs an embedded (PlaneGraph) input")
    pg.check_normal()
    g = pg.graph
    conf = find_light_edge(g, 11, KOTZIG_EDGE)
    if conf:
        return conf
    return _kotzig_cycle(g)


def _kotzig_cycle(g):
    best = None
    threes = [v for v in g.vertices if g.degree(v) == 3]
    for x in threes:
        for y in threes:
            if y <= x:
                continue
            common = sorted(set(g.neighbors(x)) & set(g.neighbors(y)))
            if len(common) < 2:
                continue
            for a in common:
                if g.degree(a) > 10:
                    continue
                for b in common:
                    if b != a:
                        cand = (x, a, y, b)
                        if best is None or sorted(cand) < sorted(best):
                            best = cand
    if best is None:
        return None
    return Configuration(KOTZIG_CYCLE, best)


def find_low_neighbor_two(g, k, kind=LOW_NEIGHBOR_TWO):
    """A 2-vertex with a k⁻-neighbor."""
    g = _graph(g)
    for v in g.vertices:
        if g.degree(v) == 2:
            for u in g.neighbors(v):
                if g.degree(u) <= k:
                    return Configuration(kind, (v, u), detail={"k": k})
    return None


def find_subcubic_config(g):
    """1⁻-vertex, adjacent 2-vertices, 3-vertex with two 2-neighbors, or adjacent
    3-vertices each having a 2-neighbor."""
    g = _graph(g)
    c = find_low_vertex(g, 1)
    if c:
        return c
    for u, v in g.distinct_edges():
        if g.degree(u) == 2 and g.degree(v) == 2:
            return Configuration(ADJACENT_TWOS, (u, v))
    for v in g.vertices:
        if g.degree(v) == 3:
            twos = [u for u in g.neighbors(v) if g.degree(u) == 2]
            if len(twos) >= 2:
                return Configuration(THREE_TWO_TWOS, (v,) + tuple(twos[:2]))
    for u, v in g.distinct_edges():
        if g.degree(u) == 3 and g.degree(v) == 3:
            tu = [x for x in g.neighbors(u) if g.degree(x) == 2]
            tv = [x for x in g.neighbors(v) if g.degree(x) == 2]
            if tu and tv:
                return Configuration(ADJ_THREES_WITH_TWOS, (u, v, tu[0], tv[0]))
    return None


def find_ten_face_config(pg):
    """Two 3-faces sharing an edge, a j-face with 4 <= j <= 9, or a 10-face on 3-vertices."""
    g = pg.graph
    for f in pg.faces:
        if 4 <= f.length <= 9:
            return Configuration(SHORT_FACE, f.vertices, (f.index,), {"length": f.length})
    for u, v in g.edges:
        f1, f2 = pg.edge_faces(u, v)
        if f1.index != f2.index and f1.length == 3 and f2.length == 3:
            return Configuration(ADJ_TRIANGLES, (u, v), (f1.index, f2.index))
    for f in pg.faces:
        if f.length == 10 and all(g.degree(v) == 3 for v in f.walk):
            return Configuration(TEN_FACE, f.vertices, (f.index,))
    return None


def find_five_face_config(pg):
    """A 5-face on five distinct vertices: four 3-vertices and one 5⁻-vertex."""
    g = pg.graph
    for f in pg.faces:
        walk = f.walk
        if f.length != 5 or len(set(walk)) != 5:
            continue
        degs = sorted(g.degree(v) for v in walk)
        if degs[:4] == [3, 3, 3, 3] and degs[4] <= 5:
            return Configuration(FIVE_FACE, f.vertices, (f.index,))
    return None


def find_light_neighbor(g):
    """3-vertex with a 10⁻-neighbor, 4-vertex with a 7⁻-neighbor, or 5-vertex
    with two 6⁻-neighbors."""
    g = _graph(g)
    for v in g.vertices:
        d = g.degree(v)
        nbrs = g.neighbors(v)
        if d == 3:
            low = [u for u in nbrs if g.degree(u) <= 10]
            if low:
                return Configuration(LIGHT_NEIGHBOR, (v, low[0]), detail={"item": 3})
        elif d == 4:
            low = [u for u in nbrs if g.degree(u) <= 7]
            if low:
                return Configuration(LIGHT_NEIGHBOR, (v, low[0]), detail={"item": 4})
        elif d == 5:
            low = [u for u in nbrs if g.degree(u) <= 6]
            if len(low) >= 2:
                return Configuration(LIGHT_NEIGHBOR, (v,) + tuple(low[:2]), detail={"item": 5})
    return None


def find_few_heavy(g):
    """A 5⁻-vertex with at most two 12⁺-neighbors."""
    g = _graph(g)
    for v in g.vertices:
        if g.degree(v) <= 5:
            heavy = [u for u in g.neighbors(v) if g.degree(u) >= 12]
            if len(heavy) <= 2:
                return Configuration(FEW_HEAVY, (v,) + tuple(heavy))
    return None


# ---------------------------------------------------------------- soundness

def validate_configuration(x, conf):
    """Re-check the defining predicate of conf on x (Graph or PlaneGraph)."""
    g = _graph(x)
    s = conf.support
    d = g.degree
    k = conf.kind
    if not all(v in g for v in s):
        return False
    if k == LOW_VERTEX:
        return d(s[0]) <= conf.detail.get("j", 1)
    if k in (LIGHT_EDGE, KOTZIG_EDGE):
        u, v = s
        return g.has_edge(u, v) and d(u) + d(v) <= conf.detail.get("w", 11)
    if k == THREAD:
        path = s
        ok = all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
        return ok and all(d(v) == 2 for v in path[1:-1]) and len(path) - 2 >= conf.detail["ell"]
    if k == WEAK_HUB:
        v, t = s[0], conf.detail["t"]
        if conf.detail["item"] == "weak":
            return d(v) == 3 and len(weak_two_neighbors(g, v)) >= 4 * t - 3
        path = s
        return (d(v) >= 4 and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
                and all(d(w) == 2 for w in path[1:-1]) and len(path) - 2 >= 2 * t - 1)
    if k == TWO_ALT_CYCLE:
        cyc = list(s)
        n = len(cyc)
        if n < 4 or n % 2 or len(set(cyc)) != n:
            return False
        if not all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n)):
            return False
        return all((d(cyc[i]) == 2) != (d(cyc[(i + 1) % n]) == 2) and
                   max(d(cyc[i]), d(cyc[(i + 1) % n])) >= 3 for i in range(n))
    if k == I_ALT:
        return is_i_alternating(g, conf.detail["i"], conf.detail["U"], conf.detail["W"])
    if k == KOTZIG_CYCLE:
        x_, a, y, b = s
        return (d(x_) == 3 and d(y) == 3 and d(a) <= 10 and len(set(s)) == 4 and
                all(g.has_edge(p, q) for p, q in ((x_, a), (a, y), (y, b), (b, x_))))
    if k == TREE_COMPONENT:
        comp = set(s)
        if not all(d(v) == 3 for v in comp):
            return False
        h = g.subgraph(comp)
        if len(h.components()) != 1 or h.m != len(comp) - 1:
            return False
        for v in comp:
            for u in g.incident(v):
                if u not in comp and d(u) == 3:
                    return False  # not a whole component
                if u not in comp and d(u) != 2:
                    return False
        return True
    if k == ADJACENT_TWOS:
        return g.has_edge(*s) and d(s[0]) == 2 and d(s[1]) == 2
    if k in (GIRTH_SEVEN_PAIR, LOW_NEIGHBOR_TWO):
        v, u = s
        return d(v) == 2 and g.has_edge(v, u) and d(u) <= conf.detail["k"]
    if k == THREE_TWO_TWOS:
        v, a, b = s
        return d(v) == 3 and all(g.has_edge(v, w) and d(w) == 2 for w in (a, b)) and a != b
    if k == ADJ_THREES_WITH_TWOS:
        u, v, a, b = s
        return (g.has_edge(u, v) and d(u) == 3 and d(v) == 3 and g.has_edge(u, a)
                and g.has_edge(v, b) and d(a) == 2 and d(b) == 2)
    if k == LIGHT_NEIGHBOR:
        v = s[0]
        item = conf.detail["item"]
        lim = {3: 10, 4: 7, 5: 6}[item]
        need = 2 if item == 5 else 1
        low = [u for u in s[1:] if g.has_edge(v, u) and d(u) <= lim]
        return d(v) == item and len(set(low)) >= need
    if k == FEW_HEAVY:
        v = s[0]
        return d(v) <= 5 and sum(1 for u in g.neighbors(v) if d(u) >= 12) <= 2
    if k in (SHORT_FACE, ADJ_TRIANGLES, TEN_FACE, FIVE_FACE):
        if not isinstance(x, PlaneGraph):
            return False
        fs = [x.faces[i] for i in conf.faces]
        if k == SHORT_FACE:
            return 4 <= fs[0].length <= 9
        if k == ADJ_TRIANGLES:
            u, v = s
            f1, f2 = x.edge_faces(u, v)
            return {f1.index, f2.index} == set(conf.faces) and f1.length == f2.length == 3
        if k == TEN_FACE:
            return fs[0].length == 10 and all(d(v) == 3 for v in fs[0].walk)
        walk = fs[0].walk
        degs = sorted(d(v) for v in walk)
        return len(set(walk)) == 5 and degs[:4] == [3, 3, 3, 3] and degs[4] <= 5
    raise ValueError(f"unknown configuration kind {k!r}")


def is_i_alternating(g, i, U, W):
    """Check the definition directly.

    U is a set of i⁻-vertices whose edges all go to W, and every w in W has
    at most Δ - i edges that do not lead into U: d_G(w) - d_F(w) <= Δ - i.
    """
    U, W = set(U), set(W)
    if not U or U & W:
        return False
    delta = g.max_degree()
    dF = {}
    for u in U:
        if not (0 < g.degree(u) <= i):
            return False
        for w in g.incident(u):
            if w not in W:
                return False
            dF[w] = dF.get(w, 0) + 1
    return all(w in dF and g.degree(w) - dF[w] <= delta - i for w in W)


# ---------------------------------------------------------------- lemma reports

def _avg(g):
    return g.average_degree()


def _need(cond, msg):
    if not cond:
        raise HypothesisError(msg)


def _plane(x, lemma):
    if not isinstance(x, PlaneGraph):
        raise HypothesisError(f"lemma {lemma!r} needs an embedded (PlaneGraph) input")
    return x.graph


def _no_cycle_components(g):
    comps = cycle_components(g)
    _need(not comps, f"graph has a 2-regular component {comps[0] if comps else ''}")


def _rep_long_thread(x, t=1, **_):
    g = _graph(x)
    bound = 2 + Fraction(1, 3 * t - 2)
    _need(g.n > 0 and _avg(g) < bound, f"average degree {fmt(_avg(g)) if g.n else '-'} is not < {fmt(bound)}")
    _no_cycle_components(g)
    return find_low_vertex(g, 1) or find_long_thread(g, 2 * t - 1)


def _rep_weak_hub(x, t=1, any_thread=False, **_):
    g = _graph(x)
    bound = 2 + Fraction(1, 2 * t - 1)
    _need(g.n > 0 and _avg(g) < bound, f"average degree {fmt(_avg(g)) if g.n else '-'} is not < {fmt(bound)}")
    _no_cycle_components(g)
    c = find_low_vertex(g, 1)
    if c:
        return c
    if any_thread:
        c = find_long_thread(g, 2 * t - 1)
        if c:
            return c
    return find_weak_hub(g, t)


def _rep_subcubic(x, **_):
    g = _graph(x)
    _need(g.n > 0 and g.max_degree() <= 3, f"maximum degree {g.max_degree()} is not <= 3")
    b = Fraction(36, 13)
    _need(_avg(g) < b, f"average degree {fmt(_avg(g))} is not < 36/13")
    return find_subcubic_config(g)


def _rep_alt_cycle(x, **_):
    g = _plane(x, "alternating-cycle")
    _need(g.min_degree() >= 2, f"minimum degree {g.min_degree()} is not >= 2")
    return find_light_edge(g, 15) or find_two_alternating_cycle(g)


def _rep_ten_face(x, **_):
    g = _plane(x, "ten-face")
    _need(g.min_degree() >= 3, f"minimum degree {g.min_degree()} is not >= 3")
    return find_ten_face_config(x)


def _rep_kotzig(x, **_):
    _plane(x, "kotzig")
    try:
        x.check_normal()
    except GraphError as exc:
        raise HypothesisError(str(exc)) from None
    return find_kotzig_config(x)


def _rep_light_neighbor(x, **_):
    _plane(x, "light-neighbor")
    try:
        x.check_normal()
    except GraphError as exc:
        raise HypothesisError(str(exc)) from None
    return find_light_neighbor(x)


def _rep_few_heavy(x, **_):
    _plane(x, "few-heavy-neighbors")
    return find_few_heavy(x)


def _rep_girth7(x, **_):
    g = _plane(x, "girth7")
    _need(girth(g) >= 7, f"girth {girth(g)} is not >= 7")
    _need(g.min_degree() >= 2, f"minimum degree {g.min_degree()} is not >= 2")
    return find_low_neighbor_two(g, 3, GIRTH_SEVEN_PAIR)


def _rep_girth5(x, **_):
    g = _plane(x, "girth5")
    _need(girth(g) >= 5, f"girth {girth(g)} is not >= 5")
    _need(g.min_degree() >= 2, f"minimum degree {g.min_degree()} is not >= 2")
    return find_low_neighbor_two(g, 5) or find_five_face_config(x)


def _rep_tree_component(x, **_):
    g = _graph(x)
    _need(g.n > 0 and g.min_degree() == 2, f"minimum degree {g.min_degree() if g.n else '-'} is not 2")
    _need(_avg(g) < Fraction(8, 3), f"average degree {fmt(_avg(g))} is not < 8/3")
    return find_tree_component_config(g)


def _rep_low_neighbor(x, **_):
    g = _graph(x)
    _need(g.n > 0 and g.min_degree() == 2, f"minimum degree {g.min_degree() if g.n else '-'} is not 2")
    m = mad(g).value
    _need(m < 3, f"mad {fmt(m)} is not < 3")
    return find_low_neighbor_two(g, 5)


LEMMAS = {
    "long-thread": _rep_long_thread,
    "weak-hub": _rep_weak_hub,
    "subcubic": _rep_subcubic,
    "alternating-cycle": _rep_alt_cycle,
    "ten-face": _rep_ten_face,
    "kotzig": _rep_kotzig,
    "light-neighbor": _rep_light_neighbor,
    "few-heavy-neighbors": _rep_few_heavy,
    "girth7": _rep_girth7,
    "girth5": _rep_girth5,
    "tree-component": _rep_tree_component,
    "low-neighbor": _rep_low_neighbor,
}

PLANE_LEMMAS = {"alternating-cycle", "ten-face", "kotzig", "light-neighbor",
                "few-heavy-neighbors", "girth7", "girth5"}


class MissingConfiguration(Exception):
    """The lemma's hypothesis holds but none of its configurations was found."""


def unavoidable_report(x, lemma_id, **params):
    """Find a configuration from the lemma's unavoidable set.

    Raises HypothesisError when the hypothesis fails, MissingConfiguration
    when it holds but nothing is found (a bug or a counterexample).
    """
    if lemma_id not in LEMMAS:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {', '.join(sorted(LEMMAS))}")
    conf = LEMMAS[lemma_id](x, **params)
    if conf is None:
        raise MissingConfiguration(f"no configuration of {lemma_id!r} found although its hypothesis holds")
    assert validate_configuration(x, conf), f"detector returned an invalid {conf}"
    return conf
