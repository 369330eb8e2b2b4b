"""Phase generator for the iterated alternating-subgraph scheme.

With x = sqrt(2Δ) - 1, phase i (2 <= i <= floor(x)) gives every i⁻-vertex one
unit from a neighbor. Donors come from peeling: a vertex w adjacent to the
remaining i⁻-vertices qualifies once d_F(w) <= d_G(w) + i - Δ - 1, and then w
and its remaining i⁻-neighbors leave F. When two donors of one round share a
recipient, the smaller donor pays.

If peeling gets stuck the remaining pair (U, W) is an i-alternating subgraph
and is returned instead of a RuleSet; an edge of weight at most Δ + 1 blocks
the scheme before any phase runs.
"""
from fractions import Fraction
from math import isqrt

from ..configurations import I_ALT, Configuration, _peel, find_light_edge
from ..graph import GraphError
from .charges import ChargeSpec
from .rules import ExplicitTransfer, RuleSet


def phase_bounds(delta):
    """(floor(x), ceil(x)) for x = sqrt(2Δ) - 1, computed exactly."""
    if delta < 1:
        return 0, 0
    lo = isqrt(2 * delta) - 1
    hi = isqrt(2 * delta - 1)  # ceil(sqrt(2Δ)) - 1
    return lo, hi


def alternating_phases(g):
    """Return a RuleSet of explicit unit transfers, or the blocking Configuration."""
    g = g.graph if hasattr(g, "graph") else g
    if g.n == 0:
        raise GraphError("empty graph")
    if g.has_loops:
        raise GraphError("loops are not supported")
    delta = g.max_degree()
    light = find_light_edge(g, delta + 1)
    if light is not None:
        return light
    top, thr = phase_bounds(delta)
    rs = RuleSet(charge_spec=ChargeSpec("degree"), phases=[], threshold=str(thr))
    for i in range(2, top + 1):
        U = {v for v in g.vertices if 0 < g.degree(v) <= i}
        left, W, rounds = _peel(g, i, U)
        if left:
            return Configuration(I_ALT, tuple(sorted(left)) + tuple(sorted(W)),
                                 detail={"i": i, "U": tuple(sorted(left)), "W": tuple(sorted(W))})
        moves = []
        for step in rounds:
            paid = set()
            for w, nbrs in step:  # step is sorted by donor
                for u in nbrs:
                    if u not in paid:
                        paid.add(u)
                        moves.append(ExplicitTransfer(("v", w), ("v", u), Fraction(1)))
        rs.phases.append(moves)
    if not rs.phases:
        rs.phases.append([])
    return rs
