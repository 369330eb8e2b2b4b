"""Rule files: parsing, serialization and the RuleSet data model.

Grammar (one record per line, `#` comments):

    param <name> = <expr>         default for a symbolic parameter
    charging <degree|vertex|face|balanced>
    threshold <expr>
    pot <on|off>
    phase                         starts a new phase (an implicit first phase exists)
    rule from <sel> to <sel> via <RELATION> amount <expr> [when <sel>]
    move <entity> to <entity> amount <expr>     explicit transfer (generated phases)

Selectors: deg<=k, deg>=k, deg=k, len<=k, len>=k, len=k, pot, vertex, face,
joined with `&`. Bounds k may be expressions over the parameters.

Amount expressions use + - * / and parentheses over rationals, parameters,
and the per-instance names ds / dt (degree or length of source / target)
and share (source charge at phase start divided by the number of instances
of this rule leaving that source).

`when` applies a selector to the relation's context vertex: the middle
vertex for DIST2_PATH, the other endpoint of the edge for EDGE_SIDE_FACES.
For THREAD_END it tests the thread itself with len (interior count).
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
import re

from ..graph import ParseError
from ..rational import eval_expr, expr_names, fmt
from .charges import ChargeSpec

RELATIONS = ("NEIGHBOR", "THREAD_END", "DIST2_PATH", "INCIDENT_FACE",
             "INCIDENT_VERTEX", "EDGE_SIDE_FACES", "POT")

# (source class, target class) allowed per relation
REL_CLASSES = {
    "NEIGHBOR": ({"vertex"}, {"vertex"}),
    "THREAD_END": ({"vertex"}, {"vertex"}),
    "DIST2_PATH": ({"vertex"}, {"vertex"}),
    "INCIDENT_FACE": ({"vertex"}, {"face"}),
    "INCIDENT_VERTEX": ({"face"}, {"vertex"}),
    "EDGE_SIDE_FACES": ({"vertex"}, {"face"}),
    "POT": ({"vertex", "face", "pot"}, {"vertex", "face", "pot"}),
}

INSTANCE_NAMES = {"ds", "dt", "share"}
BUILTIN_NAMES = {"Delta"}


@dataclass(frozen=True)
class Atom:
    field: str  # deg, len, pot, vertex, face
    op: str = ""
    bound: str = ""

    def text(self):
        return f"{self.field}{self.op}{self.bound}"


@dataclass(frozen=True)
class Selector:
    atoms: tuple

    @property
    def entity_class(self):
        fields = {a.field for a in self.atoms}
        if "pot" in fields:
            return "pot"
        if fields & {"len", "face"}:
            return "face"
        return "vertex"

    def text(self):
        return "&".join(a.text() for a in self.atoms)

    def matches(self, value, params):
        """value: degree for vertices, length for faces/threads."""
        for a in self.atoms:
            if a.field in ("pot", "vertex", "face"):
                continue
            b = eval_expr(a.bound, params)
            if a.op == "<=" and not value <= b:
                return False
            if a.op == ">=" and not value >= b:
                return False
            if a.op == "=" and not value == b:
                return False
        return True


_ATOM = re.compile(r"^(deg|len)(<=|>=|=)(.+)$")


def parse_selector(text):
    atoms = []
    for part in text.split("&"):
        part = part.strip()
        if part in ("pot", "vertex", "face"):
            atoms.append(Atom(part))
            continue
        m = _ATOM.match(part)
        if not m:
            raise ValueError(f"bad selector {part!r}")
        _check_expr(m.group(3), allow_instance=False)
        atoms.append(Atom(m.group(1), m.group(2), m.group(3)))
    fields = {a.field for a in atoms}
    if len(fields & {"deg", "vertex"}) and len(fields & {"len", "face"}) and "pot" not in fields:
        raise ValueError(f"selector {text!r} mixes vertex and face predicates")
    return Selector(tuple(atoms))


@dataclass(frozen=True)
class TransferRule:
    source: Selector
    target: Selector
    relation: str
    amount: str
    when: Selector = None

    def text(self):
        s = f"rule from {self.source.text()} to {self.target.text()} via {self.relation} amount {self.amount}"
        if self.when is not None:
            s += f" when {self.when.text()}"
        return s


@dataclass(frozen=True)
class ExplicitTransfer:
    source: tuple
    target: tuple
    amount: Fraction

    def text(self):
        from .charges import entity_name
        return f"move {entity_name(self.source)} to {entity_name(self.target)} amount {fmt(self.amount)}"


@dataclass
class RuleSet:
    charge_spec: ChargeSpec = field(default_factory=ChargeSpec)
    phases: list = field(default_factory=lambda: [[]])
    threshold: str = "0"
    pot_enabled: bool = False
    defaults: dict = field(default_factory=dict)  # name -> expression text
    params: dict = field(default_factory=dict)  # resolved values

    def resolve(self, overrides=None, graph=None):
        """Return a copy with parameters resolved: overrides, then defaults in order."""
        vals = {}
        if graph is not None:
            vals["Delta"] = Fraction(graph.max_degree())
        for k, v in (overrides or {}).items():
            vals[k] = Fraction(v)
        for name, expr in self.defaults.items():
            if name not in vals:
                vals[name] = eval_expr(expr, vals)
        return replace(self, params=vals)

    def threshold_value(self):
        return eval_expr(self.threshold, self.params)

    def text(self):
        lines = [f"param {k} = {v}" for k, v in self.defaults.items()]
        lines.append(f"charging {self.charge_spec.mode}")
        lines.append(f"threshold {self.threshold}")
        lines.append(f"pot {'on' if self.pot_enabled else 'off'}")
        for ph in self.phases:
            lines.append("phase")
            for r in ph:
                lines.append(r.text())
        return "\n".join(lines) + "\n"


def _parse_entity(tok):
    if tok == "pot":
        return ("pot",)
    m = re.fullmatch(r"([vf])(\d+)", tok)
    if not m:
        raise ValueError(f"bad entity {tok!r}")
    return (m.group(1), int(m.group(2)))


_RULE = re.compile(r"^rule\s+from\s+(\S+)\s+to\s+(\S+)\s+via\s+(\S+)\s+amount\s+(.+?)(?:\s+when\s+(\S+))?$")
_MOVE = re.compile(r"^move\s+(\S+)\s+to\s+(\S+)\s+amount\s+(\S+)$")


def parse_ruleset(text):
    rs = RuleSet()
    phases = [[]]
    explicit_phase_seen = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head = line.split()[0]
            if head == "param":
                m = re.fullmatch(r"param\s+([A-Za-z_]\w*)\s*=\s*(.+)", line)
                if not m:
                    raise ValueError("expected `param <name> = <expr>`")
                _check_expr(m.group(2), allow_instance=False)
                rs.defaults[m.group(1)] = m.group(2).strip()
            elif head == "charging":
                mode = line.split()[1] if len(line.split()) == 2 else ""
                if mode not in ("degree", "vertex", "face", "balanced"):
                    raise ValueError(f"unknown charging mode {mode!r}")
                rs.charge_spec = ChargeSpec(mode)
            elif head == "threshold":
                rs.threshold = line[len("threshold"):].strip()
                _check_expr(rs.threshold, allow_instance=False)
            elif head == "pot":
                val = line.split()[1] if len(line.split()) == 2 else ""
                if val not in ("on", "off"):
                    raise ValueError("pot must be on or off")
                rs.pot_enabled = val == "on"
            elif head == "phase":
                if explicit_phase_seen or phases[-1]:
                    phases.append([])
                explicit_phase_seen = True
            elif head == "rule":
                m = _RULE.match(line)
                if not m:
                    raise ValueError("expected `rule from <sel> to <sel> via <REL> amount <expr> [when <sel>]`")
                src, tgt = parse_selector(m.group(1)), parse_selector(m.group(2))
                rel = m.group(3)
                if rel not in RELATIONS:
                    raise ValueError(f"unknown relation {rel!r}")
                sc, tc = REL_CLASSES[rel]
                if src.entity_class not in sc or tgt.entity_class not in tc:
                    raise ValueError(f"relation {rel} cannot move charge from {src.entity_class} to {tgt.entity_class}")
                if rel == "POT" and (src.entity_class == "pot") == (tgt.entity_class == "pot"):
                    raise ValueError("POT rules move charge between the pot and a vertex or face")
                _check_expr(m.group(4), allow_instance=True)
                when = parse_selector(m.group(5)) if m.group(5) else None
                if when is not None and rel not in ("DIST2_PATH", "EDGE_SIDE_FACES", "THREAD_END"):
                    raise ValueError(f"relation {rel} takes no `when` context")
                phases[-1].append(TransferRule(src, tgt, rel, m.group(4).strip(), when))
            elif head == "move":
                m = _MOVE.match(line)
                if not m:
                    raise ValueError("expected `move <entity> to <entity> amount <rational>`")
                amt = eval_expr(m.group(3))
                phases[-1].append(ExplicitTransfer(_parse_entity(m.group(1)), _parse_entity(m.group(2)), amt))
            else:
                raise ValueError(f"unknown record {head!r}")
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), lineno) from None
    rs.phases = phases
    return rs


def _check_expr(text, allow_instance):
    names = expr_names(text)
    # syntax and zero-division check with dummy values for every name
    dummy = {n: Fraction(7, 3) for n in names}
    eval_expr(text, dummy)
    if not allow_instance and names & INSTANCE_NAMES:
        raise ValueError(f"{sorted(names & INSTANCE_NAMES)} only allowed in rule amounts")


BUILTIN_RULESETS = ("threads", "weak-hub", "subcubic", "alternating-cycle",
                    "kotzig", "girth7", "girth5", "few-heavy-neighbors")


def builtin_ruleset_text(name):
    fname = name if name.endswith(".rules") else name + ".rules"
    return resources.files("dischargekit").joinpath("discharging").joinpath("rulesets").joinpath(fname).read_text()


def load_builtin(name):
    return parse_ruleset(builtin_ruleset_text(name))
