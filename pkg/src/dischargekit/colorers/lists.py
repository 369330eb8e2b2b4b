"""List coloring of cycles and paths, and greedy coloring along a degeneracy order."""
from ..density import degeneracy
from ..errors import HypothesisError, Infeasible
from ..graph import GraphError
from .validate import Coloring


def color_sequence(items, lists, closed):
    """Proper list coloring of a path (closed=False) or cycle (closed=True).

    `items` are in path/cycle order; every list needs at least two colors.
    Raises Infeasible only for an odd cycle whose lists are one common pair.
    """
    n = len(items)
    L = [sorted(set(lists[x]), key=repr) for x in items]
    for x, l in zip(items, L):
        if len(l) < 2:
            raise ValueError(f"list of {x!r} has fewer than two colors")
    out = [None] * n
    if not closed or n == 1:
        for i in range(n):
            prev = out[i - 1] if i else None
            out[i] = next(c for c in L[i] if c != prev)
        return dict(zip(items, out))
    # find adjacent x=items[i], y=items[i-1] with a color of L(x) missing from L(y)
    pick = None
    for i in range(n):
        missing = [c for c in L[i] if c not in L[i - 1]]
        if missing:
            pick = (i, missing[0])
            break
    if pick is None:
        common = L[0]
        if len(common) == 2:
            if n % 2:
                raise Infeasible(f"odd cycle of length {n} with every list equal to {common}")
            return {x: common[i % 2] for i, x in enumerate(items)}
        pick = (0, common[0])  # three or more shared colors: greedy closes the cycle
    i0, c = pick
    order = [(i0 + k) % n for k in range(n)]  # x first, y = items[i0-1] last
    out[i0] = c
    for k in range(1, n):
        i = order[k]
        avoid = {out[order[k - 1]]}
        if k == n - 1:
            avoid.add(c)
        out[i] = next(col for col in L[i] if col not in avoid)
    return dict(zip(items, out))


def cycle_order(g):
    """Vertices of a connected 2-regular graph in cyclic order."""
    if g.n == 0 or not g.is_connected() or any(g.degree(v) != 2 for v in g.vertices):
        raise GraphError("input is not a cycle")
    start = g.vertices[0]
    order, prev, cur = [start], None, start
    while True:
        a, b = g.incident(cur)
        nxt = min(a, b) if prev is None else (b if a == prev else a)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def list_color_even_cycle(cycle, lists):
    """Proper coloring of a cycle from lists of size >= 2.

    Always succeeds on even cycles; on odd cycles it succeeds unless all
    lists are the same pair, which raises Infeasible.
    """
    order = cycle_order(cycle)
    return Coloring("proper", color_sequence(order, lists, closed=True))


def degeneracy_color(g, k):
    """Proper coloring with colors 0..k-1, greedy along the reversed elimination order."""
    if g.has_loops:
        raise HypothesisError("a graph with a loop has no proper coloring")
    if g.n == 0:
        return Coloring("proper", {})
    d, order = degeneracy(g)
    if d > k - 1:
        raise HypothesisError(f"degeneracy {d} needs at least {d + 1} colors, got k={k}")
    col = {}
    for v in reversed(order):
        used = {col[u] for u in g.neighbors(v) if u in col}
        col[v] = next(c for c in range(k) if c not in used)
    return Coloring("proper", col)
