"""Command-line front end.

Exit codes: 0 success, 1 infeasible / deficit / hypothesis failure / missing
configuration, 2 usage or input error. Reports are `key = value` lines plus
tables; rationals print as p/q, integers without a slash.
"""
import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import generators, sampling
from .colorers import (Coloring, acyclic_6list, circular_color, degeneracy_color, if_partition,
                       improper_2list, square_color_planar, star_color4, total_compose, validate)
from .configurations import LEMMAS, MissingConfiguration, unavoidable_report
from .density import degeneracy, fractional_arboricity, mad
from .discharging import BUILTIN_RULESETS, charge_totals, load_builtin, parse_ruleset, verify_lemma
from .discharging.charges import entity_name
from .errors import HypothesisError, Infeasible, InvariantViolation
from .graph import GraphError, girth, odd_girth, parse_graph, serialize_graph, square
from .oracles import (OracleRefusal, brute_chromatic_kind, brute_circular_chromatic,
                      brute_homomorphism, brute_if, brute_improper, brute_list_color, brute_mad,
                      circular_clique_graph)
from .plane import parse_embedding, serialize_embedding
from .rational import fmt, parse_rational


class UsageError(Exception):
    pass


class Report:
    def __init__(self, argv):
        self.lines = ["command = " + " ".join(argv)]
        self.code = 0

    def kv(self, key, value):
        if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
            value = fmt(value)
        self.lines.append(f"{key} = {value}")

    def row(self, text):
        self.lines.append(text)

    def text(self):
        return "\n".join(self.lines) + "\n"


# ---------------------------------------------------------------- input helpers

def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args):
    g = parse_graph(_read(args.graph))
    if getattr(args, "embedding", None):
        return g, parse_embedding(_read(args.embedding), g)
    return g, None


def _params(pairs):
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise UsageError(f"--param expects name=value, got {p!r}")
        k, v = p.split("=", 1)
        try:
            out[k.strip()] = parse_rational(v.strip())
        except ValueError:
            raise UsageError(f"--param {k}: {v!r} is not a rational") from None
    return out


def parse_lists(text):
    """`<v>: c1 c2 ...` per line; `#` comments."""
    lists = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        try:
            lists[int(head)] = [int(c) for c in rest.split()]
        except ValueError:
            raise UsageError(f"line {lineno}: malformed list record {raw.strip()!r}") from None
    return lists


def parse_coloring_lines(text):
    """Read `c <v> <color>` and `ce <u> <v> <color>` records."""
    vc, ec = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "c" and len(parts) == 3:
                vc[int(parts[1])] = int(parts[2])
                continue
            if parts[0] == "ce" and len(parts) == 4:
                u, v = sorted((int(parts[1]), int(parts[2])))
                ec[(u, v)] = int(parts[3])
                continue
        except ValueError:
            pass
        raise UsageError(f"line {lineno}: malformed coloring record {raw.strip()!r}")
    return vc, ec


def _method(spec):
    name, _, rest = spec.partition(":")
    opts = {}
    for item in filter(None, rest.split(",")):
        k, eq, v = item.partition("=")
        if not eq:
            raise UsageError(f"method option {item!r} should look like name=value")
        try:
            opts[k] = int(v)
        except ValueError:
            raise UsageError(f"method option {k} needs an integer, got {v!r}") from None
    return name, opts


def _emit_coloring(rep, col):
    for k in sorted(col, key=lambda k: (isinstance(k, tuple), k)):
        if isinstance(k, tuple):
            rep.row(f"ce {k[0]} {k[1]} {col[k]}")
        else:
            rep.row(f"c {k} {col[k]}")


# ---------------------------------------------------------------- subcommands

def cmd_analyze(args, rep):
    g, pg = _load_graph(args)
    rep.kv("vertices", g.n)
    rep.kv("edges", g.m)
    if g.n == 0:
        return
    rep.kv("max degree", g.max_degree())
    rep.kv("min degree", g.min_degree())
    rep.kv("average degree", g.average_degree())
    m = mad(g)
    rep.kv("mad", m.value)
    rep.kv("mad witness", " ".join(map(str, m.witness_set)))
    rep.kv("fractional arboricity", fractional_arboricity(g).value)
    rep.kv("degeneracy", degeneracy(g)[0])
    gi, og = girth(g), odd_girth(g)
    rep.kv("girth", "inf" if gi == float("inf") else gi)
    rep.kv("odd girth", "inf" if og == float("inf") else og)
    if pg is not None:
        rep.kv("faces", len(pg.faces))
        census = pg.face_census()
        rep.kv("face lengths", " ".join(f"{k}:{census[k]}" for k in sorted(census)))
        for mode, total in charge_totals(pg).items():
            rep.kv(f"{mode}-charging total", total)


def cmd_config(args, rep):
    g, pg = _load_graph(args)
    params = _params(args.param)
    if args.t is not None:
        params["t"] = args.t
    params = {k: int(v) if isinstance(v, Fraction) and v.denominator == 1 else v for k, v in params.items()}
    x = pg if pg is not None else g
    rep.kv("lemma", args.lemma)
    try:
        conf = unavoidable_report(x, args.lemma, **params)
    except MissingConfiguration as exc:
        rep.kv("result", "missing")
        rep.row(f"error: {exc}")
        rep.code = 1
        return
    rep.kv("result", "found")
    rep.row(str(conf))


def _load_rules(spec):
    name = spec[:-6] if spec.endswith(".rules") else spec
    if not Path(spec).exists() and name in BUILTIN_RULESETS:
        return name, load_builtin(name)
    return spec, parse_ruleset(_read(spec))


def cmd_discharge(args, rep):
    g, pg = _load_graph(args)
    label, rs = _load_rules(args.rules)
    rs = rs.resolve(_params(args.param), g)
    x = pg if pg is not None else g
    res = verify_lemma(x, rs)
    rep.kv("rules", label)
    rep.kv("charging", rs.charge_spec.mode)
    for k in sorted(rs.params):
        rep.kv(f"param {k}", rs.params[k])
    rep.kv("threshold", res.threshold)
    rep.kv("transfers", len(res.state.log))
    rep.kv("total", res.state.total())
    rep.kv("result", "ok" if res.ok else "deficit")
    if args.charges:
        for e in sorted(res.state.charges):
            rep.row(f"charge {entity_name(e)} {fmt(res.state.charges[e])}")
    if args.log:
        for t in res.state.log:
            rep.row(f"move phase={t.phase} {entity_name(t.source)} -> {entity_name(t.target)} "
                    f"{fmt(t.amount)} via {t.relation}")
    if not res.ok:
        rep.row("entity final threshold neighborhood")
        for d in res.deficits:
            nb = ",".join(f"{v}:{dg}" for v, dg in d.neighborhood.items()) or "-"
            rep.row(f"{entity_name(d.entity)} {fmt(d.final)} {fmt(d.threshold)} {nb}")
        rep.code = 1


def cmd_color(args, rep):
    g, _ = _load_graph(args)
    name, opts = _method(args.method)
    lists = parse_lists(_read(args.lists)) if args.lists else None

    def need_lists():
        if lists is None:
            raise UsageError(f"method {name} needs --lists")
        missing = [v for v in g.vertices if v not in lists]
        if missing:
            raise UsageError(f"--lists has no list for vertex {missing[0]}")
        return lists

    target = g
    if name == "circular":
        c = circular_color(g, opts.get("t", 1))
    elif name == "if":
        I, F = if_partition(g)
        c = Coloring("if", {**{v: "I" for v in I}, **{v: "F" for v in F}})
    elif name == "star4":
        c = star_color4(g)
    elif name == "improper2":
        c = improper_2list(g, need_lists())
    elif name == "acyclic6":
        c = acyclic_6list(g, need_lists())
    elif name == "square":
        c = square_color_planar(g)
        target = square(g)
    elif name == "degeneracy":
        if "k" not in opts:
            raise UsageError("degeneracy needs k, e.g. degeneracy:k=4")
        c = degeneracy_color(g, opts["k"])
    elif name == "total":
        if not (args.vc and args.ec):
            raise UsageError("total needs --vc and --ec")
        vc, _ = parse_coloring_lines(_read(args.vc))
        _, ec = parse_coloring_lines(_read(args.ec))
        c = total_compose(g, vc, ec)
    else:
        raise UsageError(f"unknown method {name!r}")
    bad = validate(target, c, lists if name in ("improper2", "acyclic6") else None)
    if bad is not None:
        raise InvariantViolation(f"colorer produced an invalid coloring: {bad}")
    rep.kv("method", args.method)
    rep.kv("kind", c.kind)
    for k in sorted(c.params):
        rep.kv(k, c.params[k])
    rep.kv("colors used", c.num_colors())
    _emit_coloring(rep, c.colors)


def _target_graph(spec):
    if ":" in spec and spec[0] == "K":
        p, q = spec[1:].split(":")
        return circular_clique_graph(int(p), int(q))
    try:
        return generators.named_graph(spec)
    except GraphError:
        return parse_graph(_read(spec))


def cmd_oracle(args, rep):
    g, _ = _load_graph(args)
    kind, _, arg = args.kind.partition(":")
    rep.kv("kind", args.kind)
    if kind == "mad":
        rep.kv("mad", brute_mad(g))
    elif kind == "circ":
        rep.kv("circular chromatic number", brute_circular_chromatic(g))
    elif kind == "chrom":
        rep.kv("chromatic number", brute_chromatic_kind(g, arg or "proper"))
    elif kind == "hom":
        if not arg:
            raise UsageError("hom needs a target, e.g. hom:C5 or hom:K5:2")
        res = brute_homomorphism(g, _target_graph(arg))
        _feasible(rep, res)
    elif kind == "list":
        if not args.lists:
            raise UsageError("list oracle needs --lists")
        lists = parse_lists(_read(args.lists))
        res = brute_list_color(g, lists, arg or "proper")
        _feasible(rep, res)
    elif kind == "if":
        res = brute_if(g)
        _feasible(rep, None if res is None else {**{v: "I" for v in res[0]}, **{v: "F" for v in res[1]}})
    elif kind == "improper":
        try:
            j, k = (int(s) for s in arg.split(","))
        except ValueError:
            raise UsageError("improper needs j,k, e.g. improper:1,1") from None
        res = brute_improper(g, j, k)
        _feasible(rep, None if res is None else {**{v: 0 for v in res[0]}, **{v: 1 for v in res[1]}})
    else:
        raise UsageError(f"unknown oracle kind {kind!r}")


def _feasible(rep, col):
    if col is None:
        rep.kv("feasible", "no")
        rep.code = 1
        return
    rep.kv("feasible", "yes")
    _emit_coloring(rep, col)


_FAMILIES = {
    "circular-clique": (generators.circular_clique, 2),
    "Gt": (generators.example_Gt, 1),
    "subdivided-complete": (generators.subdivided_complete, 1),
    "fat-triangle": (generators.fat_triangle_subdivided, 1),
    "book": (generators.book, 1),
    "Fk": (generators.gadget_Fk, 1),
    "Gkn": (generators.gadget_Gkn, 2),
}


def cmd_gen(args, rep):
    fam, params = args.family, args.params
    rng = random.Random(args.seed)

    def ints(k):
        if len(params) != k:
            raise UsageError(f"family {fam} takes {k} integer parameter(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError(f"family {fam} takes integer parameters") from None

    pg = None
    if fam in _FAMILIES:
        fn, k = _FAMILIES[fam]
        g = fn(*ints(k))
    elif fam == "thread-replace":
        if len(params) != 2:
            raise UsageError("thread-replace takes a base graph name and ell")
        g = generators.thread_replace(generators.named_graph(params[0]), int(params[1]))
    elif fam == "random-sparse":
        g = sampling.random_subdivided(rng, *ints(4))
    elif fam == "random-plane":
        pg = sampling.random_plane_graph(rng, *ints(1))
        g = pg.graph
    elif fam == "triangulation":
        pg = sampling.random_triangulation(rng, *ints(1))
        g = pg.graph
    elif fam == "named":
        if len(params) != 1:
            raise UsageError("named takes one graph name")
        try:
            pg = generators.named_graph(params[0], embedded=True)
            g = pg.graph
        except GraphError:
            g = generators.named_graph(params[0])
    else:
        raise UsageError(f"unknown family {fam!r}")
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text)
        rep.kv("wrote", args.output)
    else:
        rep.lines.extend(text.splitlines())
    if args.embedding_out:
        if pg is None:
            raise UsageError(f"family {fam} has no embedding")
        Path(args.embedding_out).write_text(serialize_embedding(pg))
        rep.kv("wrote", args.embedding_out)
    if args.output:
        rep.kv("vertices", g.n)
        rep.kv("edges", g.m)


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="dischargekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="density, degeneracy, girth and charge totals")
    a.add_argument("graph")
    a.add_argument("--embedding")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("config", help="find a configuration from an unavoidable set")
    c.add_argument("graph")
    c.add_argument("--lemma", required=True, choices=sorted(LEMMAS))
    c.add_argument("--embedding")
    c.add_argument("--t", type=int)
    c.add_argument("--param", action="append", metavar="NAME=VALUE")
    c.set_defaults(func=cmd_config)

    d = sub.add_parser("discharge", help="replay a discharging ruleset")
    d.add_argument("graph")
    d.add_argument("--rules", required=True,
                   help=f"rule file, or a built-in: {', '.join(BUILTIN_RULESETS)}")
    d.add_argument("--embedding")
    d.add_argument("--param", action="append", metavar="NAME=VALUE")
    d.add_argument("--charges", action="store_true", help="print every final charge")
    d.add_argument("--log", action="store_true", help="print every transfer")
    d.set_defaults(func=cmd_discharge)

    k = sub.add_parser("color", help="run a constructive colorer")
    k.add_argument("graph")
    k.add_argument("--method", required=True,
                   help="circular:t=K | if | star4 | improper2 | acyclic6 | square | total | degeneracy:k=K")
    k.add_argument("--lists")
    k.add_argument("--vc")
    k.add_argument("--ec")
    k.set_defaults(func=cmd_color)

    o = sub.add_parser("oracle", help="exact brute-force answers for small graphs")
    o.add_argument("graph")
    o.add_argument("--kind", required=True,
                   help="mad | hom:target | circ | list:kind | if | improper:j,k | chrom:kind")
    o.add_argument("--lists")
    o.set_defaults(func=cmd_oracle)

    gn = sub.add_parser("gen", help="write a generated graph")
    gn.add_argument("family", help=", ".join([*_FAMILIES, "thread-replace", "named",
                                             "random-sparse", "random-plane", "triangulation"]))
    gn.add_argument("params", nargs="*")
    gn.add_argument("-o", "--output")
    gn.add_argument("--embedding-out")
    gn.set_defaults(func=cmd_gen)

    for sp in (a, c, d, k, o, gn):
        sp.add_argument("--seed", type=int, default=0, help="seed for random families")
    return p


def main(argv=None, out=None, err=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    rep = Report(argv)
    try:
        args.func(args, rep)
    except (HypothesisError, Infeasible) as exc:
        rep.kv("result", "hypothesis failed" if isinstance(exc, HypothesisError) else "infeasible")
        rep.row(f"error: {exc}")
        rep.code = 1
    except InvariantViolation as exc:
        rep.kv("result", "invariant violated")
        rep.row(f"error: {exc}")
        rep.code = 1
    except OracleRefusal as exc:
        print(f"dischargekit: oracle refused: {exc}", file=err)
        return 2
    except (UsageError, GraphError, ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"dischargekit: error: {exc}", file=err)
        return 2
    out.write(rep.text())
    return rep.code


if __name__ == "__main__":
    sys.exit(main())
