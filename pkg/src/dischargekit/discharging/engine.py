"""Rule replay: simultaneous transfers per phase, conservation, deficit reports."""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import GraphError, bfs_distances, find_threads
from ..plane import PlaneGraph
from ..rational import eval_expr
from .charges import POT, Transfer, initial_charges
from .rules import ExplicitTransfer


class ConservationError(AssertionError):
    pass


def _instances(x, g, rule, params):
    """Yield (source, target, instance-key, ds, dt) for one rule."""
    rel = rule.relation
    plane = isinstance(x, PlaneGraph)
    deg = g.degree
    if rel in ("INCIDENT_FACE", "INCIDENT_VERTEX", "EDGE_SIDE_FACES") or (
            rel == "POT" and "face" in (rule.source.entity_class, rule.target.entity_class)):
        if not plane:
            raise GraphError(f"relation {rel} needs an embedded (PlaneGraph) input")
    src, tgt = rule.source, rule.target
    if rel == "NEIGHBOR":
        for s in g.vertices:
            if not src.matches(deg(s), params):
                continue
            for i, t in enumerate(g.incident(s)):
                if t != s and tgt.matches(deg(t), params):
                    yield ("v", s), ("v", t), (s, t, i), deg(s), deg(t)
    elif rel == "THREAD_END":
        for th in find_threads(g, 1):
            if rule.when is not None and not rule.when.matches(th.length, params):
                continue
            for side, end in enumerate(th.endpoints):
                if not src.matches(deg(end), params):
                    continue
                for t in th.interior:
                    if tgt.matches(deg(t), params):
                        yield ("v", end), ("v", t), (th.endpoints, th.interior[0], side, t), deg(end), deg(t)
    elif rel == "DIST2_PATH":
        for s in g.vertices:
            if not src.matches(deg(s), params):
                continue
            for m in g.neighbors(s):
                if m == s or (rule.when is not None and not rule.when.matches(deg(m), params)):
                    continue
                for t in g.neighbors(m):
                    if t not in (s, m) and tgt.matches(deg(t), params):
                        yield ("v", s), ("v", t), (s, m, t), deg(s), deg(t)
    elif rel == "INCIDENT_FACE":
        for s in g.vertices:
            if not src.matches(deg(s), params):
                continue
            for u in x.rotation[s]:
                f = x.face_of_dart(s, u)
                if tgt.matches(f.length, params):
                    yield ("v", s), ("f", f.index), (s, u), deg(s), f.length
    elif rel == "INCIDENT_VERTEX":
        for f in x.faces:
            if not src.matches(f.length, params):
                continue
            for (a, b) in f.darts:
                if tgt.matches(deg(a), params):
                    yield ("f", f.index), ("v", a), (a, b), f.length, deg(a)
    elif rel == "EDGE_SIDE_FACES":
        for s in g.vertices:
            if not src.matches(deg(s), params):
                continue
            for o in x.rotation[s]:
                if rule.when is not None and not rule.when.matches(deg(o), params):
                    continue
                for side, f in enumerate(x.edge_faces(s, o)):
                    if tgt.matches(f.length, params):
                        yield ("v", s), ("f", f.index), (s, o, side), deg(s), f.length
    elif rel == "POT":
        if rule.source.entity_class == "pot":
            other, to_pot = rule.target, False
        else:
            other, to_pot = rule.source, True
        if other.entity_class == "vertex":
            ents = [(("v", v), deg(v)) for v in g.vertices]
        else:
            ents = [(("f", f.index), f.length) for f in x.faces]
        for e, val in ents:
            if other.matches(val, params):
                if to_pot:
                    yield e, POT, (e,), val, 0
                else:
                    yield POT, e, (e,), 0, val
    else:
        raise ValueError(f"unknown relation {rel!r}")


def run_ruleset(x, rs, state=None):
    """Apply the phases of a resolved RuleSet; every phase is simultaneous."""
    g = x.graph if isinstance(x, PlaneGraph) else x
    if state is None:
        state = initial_charges(x, rs.charge_spec, pot=rs.pot_enabled)
    uses_pot = any(
        (isinstance(r, ExplicitTransfer) and POT in (r.source, r.target)) or
        (not isinstance(r, ExplicitTransfer) and r.relation == "POT")
        for ph in rs.phases for r in ph)
    if uses_pot and not rs.pot_enabled:
        raise ValueError("ruleset moves charge through the pot but `pot on` is missing")
    if not rs.charge_spec.needs_faces and any(
            not isinstance(r, ExplicitTransfer) and "face" in (r.source.entity_class, r.target.entity_class)
            for ph in rs.phases for r in ph):
        raise ValueError(f"charging mode {rs.charge_spec.mode!r} gives faces no charge, "
                         "but a rule moves charge to or from a face")
    params = dict(rs.params)
    for pi, phase in enumerate(rs.phases):
        start = dict(state.charges)
        moves = []
        for rule in phase:
            if isinstance(rule, ExplicitTransfer):
                for e in (rule.source, rule.target):
                    if e not in start:
                        raise GraphError(f"explicit transfer names unknown entity {e}")
                moves.append(Transfer(pi, rule.source, rule.target, "EXPLICIT", (), Fraction(rule.amount)))
                continue
            inst = list(_instances(x, g, rule, params))
            counts = defaultdict(int)
            for s, *_ in inst:
                counts[s] += 1
            for s, t, key, ds, dt in inst:
                names = dict(params, ds=ds, dt=dt, share=start[s] / counts[s])
                amt = eval_expr(rule.amount, names)
                if amt:
                    moves.append(Transfer(pi, s, t, rule.relation, key, amt))
        for mv in moves:
            state.charges[mv.source] -= mv.amount
            state.charges[mv.target] += mv.amount
        state.log.extend(moves)
    if state.total() != state.initial_total():
        raise ConservationError(f"total charge changed from {state.initial_total()} to {state.total()}")
    return state


@dataclass
class Deficit:
    entity: tuple
    final: Fraction
    threshold: Fraction
    neighborhood: dict = field(default_factory=dict)


@dataclass
class LemmaResult:
    ok: bool
    state: object
    deficits: list
    threshold: Fraction

    def __bool__(self):
        return self.ok


def _neighborhood(x, g, e):
    if e[0] == "v":
        dist = bfs_distances(g, e[1], limit=2)
        return {v: g.degree(v) for v in sorted(dist)}
    if e[0] == "f":
        f = x.faces[e[1]]
        return {v: g.degree(v) for v in f.walk}
    return {}


def verify_lemma(x, rs):
    """Replay rs and compare every final charge with the threshold (pot must end >= 0)."""
    g = x.graph if isinstance(x, PlaneGraph) else x
    state = run_ruleset(x, rs)
    thr = rs.threshold_value()
    deficits = []
    for e in sorted(state.charges, key=lambda e: (e[0], e[1:] )):
        c = state.charges[e]
        limit = Fraction(0) if e == POT else thr
        if c < limit:
            deficits.append(Deficit(e, c, limit, _neighborhood(x, g, e)))
    return LemmaResult(not deficits, state, deficits, thr)
