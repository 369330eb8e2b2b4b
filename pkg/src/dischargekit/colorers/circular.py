"""Circular colorings: thread extension intervals and homomorphisms into C_{2t+1}."""
from dataclasses import dataclass
from fractions import Fraction

from ..density import mad
from ..errors import HypothesisError, InvariantViolation
from ..graph import cycle_components, find_threads, incident_threads, odd_girth
from ..rational import fmt
from .validate import Coloring


@dataclass(frozen=True)
class CircularPalette:
    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p <= 2 * self.q:
            raise ValueError(f"need p > 2q >= 2, got p={self.p}, q={self.q}")

    def adjacent(self, a, b):
        d = (a - b) % self.p
        return self.q <= d <= self.p - self.q

    def neighbors(self, a):
        return [(a + s) % self.p for s in range(self.q, self.p - self.q + 1)]


@dataclass(frozen=True)
class ThreadExtension:
    """Allowed colors along a thread u_0 = x, u_1..u_ell, u_{ell+1} = y.

    intervals[i] = (first color, size) of the consecutive run allowed at u_i;
    `forbidden` holds the colors y cannot take.
    """
    p: int
    q: int
    ell: int
    start: int
    intervals: tuple
    forbidden: frozenset

    def allowed(self, i):
        lo, size = self.intervals[i]
        return frozenset((lo + k) % self.p for k in range(size))

    @property
    def forbidden_count(self):
        return len(self.forbidden)


def forbidden_bound(p, q, ell):
    return max(0, p - 1 - (ell + 1) * (p - 2 * q))


def extend_thread(p, q, ell, start=0):
    """Interval rule: colors a..b at u_i allow a+q .. b+(p-q) at u_{i+1}."""
    if not p > 2 * q or q < 1:
        raise ValueError(f"extend_thread needs p > 2q >= 2, got p={p}, q={q}")
    if ell < 0:
        raise ValueError("thread length must be >= 0")
    start %= p
    intervals = [(start, 1)]
    lo, size = start, 1
    for _ in range(ell + 1):
        lo, size = (lo + q) % p, min(p, size + p - 2 * q)
        if size == p:
            lo = 0
        intervals.append((lo, size))
    lo, size = intervals[-1]
    allowed = {(lo + k) % p for k in range(size)}
    forbidden = frozenset(c for c in range(p) if c not in allowed)
    return ThreadExtension(p, q, ell, start, tuple(intervals), forbidden)


def color_thread(pal, a, b, ell):
    """Colors for the ell interior vertices of a path from color a to color b.

    Each free step takes the smallest color that still reaches b. Returns None
    when no walk of length ell + 1 joins a and b.
    """
    p = pal.p
    # back[i] = colors at u_i that reach b at u_{ell+1}
    back = [None] * (ell + 2)
    back[ell + 1] = {b}
    for i in range(ell, -1, -1):
        back[i] = {c for c in range(p) if any(pal.adjacent(c, d) for d in back[i + 1])}
    if a not in back[0]:
        return None
    out, cur = [], a
    for i in range(1, ell + 1):
        cur = min(c for c in back[i] if pal.adjacent(cur, c))
        out.append(cur)
    return out


def _cycle_order(g, comp):
    start = comp[0]
    order, prev, cur = [start], None, start
    while True:
        a, b = g.incident(cur)
        nxt = min(a, b) if prev is None else (b if a == prev else a)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def check_circular_hypothesis(g, t):
    if t < 1:
        raise HypothesisError(f"t must be >= 1, got {t}")
    if g.has_loops:
        raise HypothesisError("a loop gives odd girth 1")
    og = odd_girth(g)
    if og < 2 * t + 1:
        raise HypothesisError(f"odd girth {og} is below {2 * t + 1}")
    if g.n:
        bound = 2 + Fraction(1, 2 * t)
        m = mad(g).value
        if m >= bound:
            raise HypothesisError(f"mad {fmt(m)} is not < {fmt(bound)}")


def circular_color(g, t):
    """Homomorphism into C_{2t+1} (as a (2t+1, t)-coloring) by peeling.

    Reductions, cheapest first: cycle components, 1⁻-vertices, threads with at
    least 2t-1 interior vertices, and 3-vertices with at least 4t-3 weak
    2-neighbors. Colors are restored in reverse order.
    """
    check_circular_hypothesis(g, t)
    pal = CircularPalette(2 * t + 1, t)
    stack = []
    h = g
    while h.n:
        cyc = cycle_components(h)
        if cyc:
            for comp in cyc:
                stack.append(("cycle", _cycle_order(h, comp)))
            h = h.delete_vertices([v for c in cyc for v in c])
            continue
        low = next((v for v in h.vertices if h.degree(v) <= 1), None)
        if low is not None:
            stack.append(("low", low, tuple(h.neighbors(low))))
            h = h.delete_vertices([low])
            continue
        threads = find_threads(h, 2 * t - 1)
        if threads:
            th = threads[0]
            stack.append(("thread", th.endpoints, th.interior))
            h = h.delete_vertices(th.interior)
            continue
        hub = None
        for v in h.vertices:
            if h.degree(v) == 3:
                its = incident_threads(h, v)
                weak = {x for interior, _ in its for x in interior}
                if len(weak) >= 4 * t - 3:
                    hub = (v, its, weak)
                    break
        if hub is None:
            raise InvariantViolation(
                "no reducible configuration found although the hypothesis holds "
                f"(remaining graph has {h.n} vertices)")
        v, its, weak = hub
        seen, uniq = set(), []
        for interior, end in its:
            key = frozenset(interior)
            if interior and key in seen:
                continue  # the far side of a thread that returns to v
            seen.add(key)
            uniq.append((interior, end))
        stack.append(("hub", v, tuple(uniq)))
        h = h.delete_vertices([v, *weak])

    col = {}
    for item in reversed(stack):
        kind = item[0]
        if kind == "cycle":
            order = item[1]
            col[order[0]] = 0
            rest = color_thread(pal, 0, 0, len(order) - 1)
            if rest is None:
                raise InvariantViolation(f"cycle of length {len(order)} does not map into C_{pal.p}")
            col.update(zip(order[1:], rest))
        elif kind == "low":
            _, v, nb = item
            col[v] = (col[nb[0]] + t) % pal.p if nb else 0
        elif kind == "thread":
            _, (x, y), interior = item
            rest = color_thread(pal, col[x], col[y], len(interior))
            if rest is None:
                raise InvariantViolation(f"thread {x}..{y} of length {len(interior)} cannot be extended")
            col.update(zip(interior, rest))
        else:
            _, v, its = item
            choice = None
            for c in range(pal.p):
                walks = []
                for interior, end in its:
                    far = c if end == v else col[end]
                    w = color_thread(pal, c, far, len(interior))
                    if w is None:
                        break
                    walks.append((interior, w))
                else:
                    choice = (c, walks)
                    break
            if choice is None:
                raise InvariantViolation(f"every color is forbidden at weak hub {v}")
            col[v] = choice[0]
            for interior, w in choice[1]:
                col.update(zip(interior, w))
    return Coloring("circular", col, {"p": pal.p, "q": pal.q})
