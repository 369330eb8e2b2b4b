import random
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from dischargekit.density import mad
from dischargekit.discharging import BUILTIN_RULESETS, load_builtin, parse_ruleset, run_ruleset
from dischargekit.discharging.rules import REL_CLASSES, RELATIONS
from dischargekit.graph import Graph, odd_girth
from dischargekit.sampling import random_plane_graph, random_subdivided

settings.register_profile(
    "repo", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("repo")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def small_graphs(draw, max_n=8, loops=False, multi=False):
    n = draw(st.integers(1, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    raw = draw(st.lists(pairs, max_size=2 * n))
    edges = []
    seen = set()
    for u, v in raw:
        if u == v and not loops:
            continue
        e = (min(u, v), max(u, v))
        if e in seen and not multi:
            continue
        seen.add(e)
        edges.append(e)
    return Graph(range(n), edges, allow_loops=loops)


def sparse_sample(rng, bound, max_n=None, min_odd_girth=0, simple=True, tries=400):
    """A random graph with mad < bound (and optional odd girth bound).

    Subdivided random base graphs are cheap to filter on exact mad.
    """
    for _ in range(tries):
        base = rng.randint(2, 6)
        g = random_subdivided(rng, base, rng.randint(1, 2 * base), rng.randint(0, 4),
                              pendants=rng.randint(0, 2), multigraph=not simple and rng.random() < 0.3)
        if max_n is not None and g.n > max_n:
            continue
        if min_odd_girth and odd_girth(g) < min_odd_girth:
            continue
        if mad(g).value < bound:
            return g
    raise AssertionError(f"no sample with mad < {bound} after {tries} tries")


def rng_for(i, salt=0):
    return random.Random(1000003 * salt + i)


FRACTIONS = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100)
HALF = Fraction(1, 2)


# ---------------------------------------------------------------- ruleset fuzzing

def random_rule(rng, faces=True):
    """Random rule text; faces=False keeps to vertex-only relations."""
    rels = [r for r in RELATIONS
            if r != "POT" and (faces or "face" not in REL_CLASSES[r][0] | REL_CLASSES[r][1])]
    rel = rng.choice(rels)
    sc, tc = REL_CLASSES[rel]

    def sel(classes):
        cls = rng.choice(sorted(classes - {"pot"} - (set() if faces else {"face"})))
        if cls == "vertex":
            return rng.choice(["vertex", f"deg>={rng.randint(1, 5)}", f"deg<={rng.randint(2, 6)}",
                               f"deg={rng.randint(2, 4)}"])
        return rng.choice(["face", f"len>={rng.randint(3, 6)}", f"len<={rng.randint(3, 8)}"])
    amount = rng.choice(["1", "1/3", "(ds+1)/(dt+2)", "share", "rho", "2*share/3", "dt/7"])
    when = ""
    if rel in ("DIST2_PATH", "EDGE_SIDE_FACES") and rng.random() < 0.5:
        when = f" when deg>={rng.randint(2, 4)}"
    if rel == "THREAD_END" and rng.random() < 0.5:
        when = f" when len>={rng.randint(1, 3)}"
    return f"rule from {sel(sc)} to {sel(tc)} via {rel} amount {amount}{when}"


def random_ruleset(rng):
    mode = rng.choice(["degree", "vertex", "face", "balanced"])
    lines = ["param rho = 1/5", f"charging {mode}",
             "threshold 0", f"pot {'on' if rng.random() < 0.5 else 'off'}"]
    for _ in range(rng.randint(1, 3)):
        lines.append("phase")
        for _ in range(rng.randint(1, 4)):
            lines.append(random_rule(rng, mode != "degree"))
    if lines[3] == "pot on":
        lines.append("rule from deg>=3 to pot via POT amount 1/2")
        lines.append("rule from pot to deg>=2 via POT amount 1/9")
    return parse_ruleset("\n".join(lines) + "\n")


def conservation_fuzz(pairs=1000, seed=2024):
    """Run random rulesets (and built-ins) on random plane graphs; return the
    number of pairs whose charge total or log replay disagrees."""
    rng = random.Random(seed)
    bad = 0
    for i in range(pairs):
        pg = random_plane_graph(rng, rng.randint(0, 25))
        rs = random_ruleset(rng) if i % 2 else load_builtin(rng.choice(BUILTIN_RULESETS))
        rs = rs.resolve({"t": rng.randint(1, 3)} if "t" in rs.defaults else None, pg.graph)
        state = run_ruleset(pg, rs)
        replay = dict(state.initial)
        for t in state.log:
            replay[t.source] -= t.amount
            replay[t.target] += t.amount
        zero = any(t.amount == 0 for t in state.log)
        if state.total() != state.initial_total() or replay != state.charges or zero:
            bad += 1
    return bad


# ---------------------------------------------------------------- acceptance summary

ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
