"""Shared brute-force oracles and hypothesis strategies.

The oracles deliberately share no code with the package beyond the data
classes, so agreement is evidence rather than tautology.
"""

from itertools import combinations, product

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rainbowsplit.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# filled by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------- oracles

def oracle_split(g):
    """Some bipartition (K clique, I independent) by trying every subset."""
    verts = range(g.n)
    for mask in range(1 << g.n):
        k = [v for v in verts if mask >> v & 1]
        i = [v for v in verts if not mask >> v & 1]
        if all(g.has_edge(a, b) for a, b in combinations(k, 2)) and not any(
            g.has_edge(a, b) for a, b in combinations(i, 2)
        ):
            return set(k), set(i)
    return None


def oracle_threshold(g):
    """No induced 2K2, P4 or C4 on any four vertices."""
    for quad in combinations(range(g.n), 4):
        es = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
        degs = sorted(sum(v in e for e in es) for v in quad)
        if len(es) == 2 and degs == [1, 1, 1, 1]:  # 2K2
            return False
        if len(es) == 3 and degs == [1, 1, 2, 2]:  # P4
            return False
        if len(es) == 4 and degs == [2, 2, 2, 2]:  # C4
            return False
    return True


def simple_paths(g, u, v):
    out = []

    def walk(path):
        w = path[-1]
        if w == v:
            out.append(list(path))
            return
        for x in sorted(g.adjacency[w]):
            if x not in path:
                path.append(x)
                walk(path)
                path.pop()

    walk([u])
    return out


def oracle_rainbow(g, colour):
    """colour: dict edge -> int (edges as sorted pairs)."""
    for u, v in combinations(range(g.n), 2):
        ok = False
        for p in simple_paths(g, u, v):
            cols = [colour[tuple(sorted(e))] for e in zip(p, p[1:])]
            if len(set(cols)) == len(cols):
                ok = True
                break
        if not ok:
            return False
    return True


def oracle_rc(g, max_k=None):
    """Smallest k admitting a rainbow colouring, by trying every colouring."""
    edges = g.edge_list
    paths = {
        (u, v): [[tuple(sorted(e)) for e in zip(p, p[1:])] for p in simple_paths(g, u, v)]
        for u, v in combinations(range(g.n), 2)
    }
    idx = {e: i for i, e in enumerate(edges)}
    for k in range(1, (max_k or len(edges)) + 1):
        for cols in product(range(k), repeat=len(edges)):
            if all(
                any(len({cols[idx[e]] for e in p}) == len(p) for p in ps) for ps in paths.values()
            ):
                return k
    return None


def oracle_bcc(inst):
    """Is there any covering bipartitioning? Every proper subset of every set."""
    choices = []
    for t in inst.family:
        ts = sorted(t)
        subs = [
            frozenset(v for j, v in enumerate(ts) if mask >> j & 1) for mask in range((1 << len(ts)) - 1)
        ]
        choices.append(subs)
    edges = inst.base.edge_list
    for pick in product(*choices):
        if all(
            any(u in t and v in t and ((u in x) != (v in x)) for t, x in zip(inst.family, pick))
            for u, v in edges
        ):
            return True
    return False


def oracle_sat(n_vars, clauses):
    for bits in product([False, True], repeat=n_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


# ---------------------------------------------------------------- strategies

@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_n=2, max_n=7, max_extra=4):
    n = draw(st.integers(min_n, max_n))
    edges = {tuple(sorted((v, draw(st.integers(0, v - 1))))) for v in range(1, n)}
    pairs = [e for e in combinations(range(n), 2) if e not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_extra)))
    return Graph.from_edges(n, edges)


@st.composite
def split_graphs(draw, max_clique=5, max_indep=6):
    """Connected split graphs: clique 0..k-1, each other vertex sees a nonempty clique subset."""
    k = draw(st.integers(2, max_clique))
    r = draw(st.integers(0, max_indep))
    edges = list(combinations(range(k), 2))
    for v in range(k, k + r):
        nbrs = draw(st.lists(st.integers(0, k - 1), min_size=1, max_size=k, unique=True))
        edges += [(x, v) for x in nbrs]
    return Graph.from_edges(k + r, edges)
