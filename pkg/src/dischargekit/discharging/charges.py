"""Initial charges and the charge ledger.

Entities are tuples: ("v", vertex), ("f", face index), ("pot",).
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import GraphError
from ..plane import PlaneGraph

POT = ("pot",)

# mode -> ((vertex alpha, beta), (face gamma, delta)); charge = alpha*d + beta
MODES = {
    "degree": ((1, 0), None),
    "vertex": ((1, -6), (2, -6)),
    "face": ((2, -6), (1, -6)),
    "balanced": ((1, -4), (1, -4)),
}
MODE_ALIASES = {"vertex_charging": "vertex", "face_charging": "face"}


@dataclass(frozen=True)
class ChargeSpec:
    """mode in {degree, vertex, face, balanced, custom}; custom uses the affine forms."""
    mode: str = "degree"
    vertex_form: tuple = None
    face_form: tuple = None

    def forms(self):
        mode = MODE_ALIASES.get(self.mode, self.mode)
        if mode == "custom":
            vf = tuple(Fraction(x) for x in (self.vertex_form or (1, 0)))
            ff = tuple(Fraction(x) for x in self.face_form) if self.face_form else None
            return vf, ff
        if mode not in MODES:
            raise ValueError(f"unknown charging mode {self.mode!r}")
        vf, ff = MODES[mode]
        return tuple(map(Fraction, vf)), (tuple(map(Fraction, ff)) if ff else None)

    @property
    def needs_faces(self):
        return self.forms()[1] is not None


def entity_name(e):
    if e == POT:
        return "pot"
    return f"{e[0]}{e[1]}"


@dataclass(frozen=True)
class Transfer:
    phase: int
    source: tuple
    target: tuple
    relation: str
    instance: tuple
    amount: Fraction


@dataclass
class ChargeState:
    initial: dict
    charges: dict
    log: list = field(default_factory=list)

    def total(self):
        return sum(self.charges.values(), Fraction(0))

    def initial_total(self):
        return sum(self.initial.values(), Fraction(0))

    def replay(self):
        """Final charges rebuilt from initial charges and the transfer log."""
        out = dict(self.initial)
        for t in self.log:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return out

    def vertex_charges(self):
        return {e[1]: c for e, c in self.charges.items() if e[0] == "v"}

    def face_charges(self):
        return {e[1]: c for e, c in self.charges.items() if e[0] == "f"}


def initial_charges(x, spec=ChargeSpec(), pot=False):
    """Charges per spec; face modes need a PlaneGraph."""
    vf, ff = spec.forms()
    g = x.graph if isinstance(x, PlaneGraph) else x
    if ff is not None and not isinstance(x, PlaneGraph):
        raise GraphError(f"charging mode {spec.mode!r} needs an embedded (PlaneGraph) input")
    ch = {("v", v): vf[0] * g.degree(v) + vf[1] for v in g.vertices}
    if ff is not None:
        for f in x.faces:
            ch[("f", f.index)] = ff[0] * f.length + ff[1]
    if pot:
        ch[POT] = Fraction(0)
    return ChargeState(dict(ch), dict(ch), [])


def charge_totals(pg):
    """The three standard totals (vertex, face, balanced) on a plane graph."""
    return {m: initial_charges(pg, ChargeSpec(m)).total() for m in ("vertex", "face", "balanced")}
