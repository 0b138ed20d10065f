"""Seeded instance generators: the named special split graphs, random split and
threshold graphs, random exact-3-CNF formulas, random BCC instances."""

from __future__ import annotations

import random
from itertools import combinations

from rainbowsplit.graph import Graph

SPECIAL_PENDANTS = {
    # per special clique vertex x0, x1, x2, x3
    "g111": (1, 1, 1),
    "g400": (4,),
    "g310": (3, 1),
    "g2200": (2, 2),
    "g220": (2, 2),
    "g220z": (2, 2),
}


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def special_graph(kind: str, clique: int = 3, extra: int = 0, seed=0) -> Graph:
    """Clique on 0..clique-1 with the kind's pendants on x0, x1, ..., plus
    ``extra`` non-pendant independent vertices with random neighbourhoods.

    For g220 and g220z the clique is forced to a triangle; g220 never gets an
    extra vertex seeing both x0 and x1, and g220z always gets one such z.
    """
    rng = _rng(seed)
    kind = kind.lower()
    if kind not in SPECIAL_PENDANTS:
        raise ValueError(f"unknown special graph {kind!r}")
    if kind in ("g220", "g220z"):
        clique = 3
    minimum = 4 if kind == "g2200" else 3
    if clique < minimum:
        raise ValueError(f"{kind} needs a clique of at least {minimum}")
    edges = list(combinations(range(clique), 2))
    n = clique
    for x, count in enumerate(SPECIAL_PENDANTS[kind]):
        for _ in range(count):
            edges.append((x, n))
            n += 1
    if kind == "g220z":
        edges += [(0, n), (1, n)]
        n += 1
    for _ in range(extra):
        if kind == "g220":
            nbrs = rng.choice([(0, 2), (1, 2)])
        else:
            size = rng.randint(2, clique - 1)
            nbrs = rng.sample(range(clique), size)
        edges.extend((x, n) for x in nbrs)
        n += 1
    return Graph.from_edges(n, edges)


def random_split(n: int, seed=0, clique: int | None = None, pendant_prob: float = 0.3) -> Graph:
    """Connected split graph on n vertices with a maximal clique of the given size."""
    rng = _rng(seed)
    if clique is None:
        clique = rng.randint(min(3, n), max(min(3, n), n // 2))
    clique = min(clique, n)
    edges = list(combinations(range(clique), 2))
    for v in range(clique, n):
        if clique == 1 or rng.random() < pendant_prob:
            size = 1
        else:
            size = rng.randint(2, max(2, clique - 1)) if clique > 2 else 1
        edges.extend((x, v) for x in rng.sample(range(clique), size))
    return Graph.from_edges(n, edges)


def random_lemma_graph(seed=0, max_n: int = 60, max_pendants: int = 8) -> Graph:
    """Random split graph containing one of G111/G400/G310/G2200 with its
    pendants among the graph's pendants (so rc equals the pendant count)."""
    rng = _rng(seed)
    kind = rng.choice(["g111", "g400", "g310", "g2200"])
    clique_min = 4 if kind == "g2200" else 3
    clique = rng.randint(clique_min, max(clique_min, min(12, max_n // 3)))
    base = list(SPECIAL_PENDANTS[kind])
    p_extra = rng.randint(0, max(0, max_pendants - sum(base)))
    budget = max_n - clique - sum(base) - p_extra
    i_prime = rng.randint(0, max(0, min(budget, 3 * clique)))
    edges = list(combinations(range(clique), 2))
    n = clique
    for x, count in enumerate(base):
        for _ in range(count):
            edges.append((x, n))
            n += 1
    for _ in range(p_extra):
        # mostly on the pattern's own anchors so every case stays represented
        anchor = rng.randrange(len(base)) if rng.random() < 0.7 else rng.randrange(clique)
        edges.append((anchor, n))
        n += 1
    for _ in range(i_prime):
        size = rng.randint(2, clique - 1)
        edges.extend((x, n) for x in rng.sample(range(clique), size))
        n += 1
    # shuffle ids so the anatomy cannot rely on the construction order
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_threshold(n: int, seed=0) -> Graph:
    """Connected threshold graph: add vertices as isolated or dominating, the last dominating."""
    rng = _rng(seed)
    edges = []
    for v in range(1, n):
        if v == n - 1 or rng.random() < 0.5:
            edges.extend((u, v) for u in range(v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_3cnf(n_vars: int, n_clauses: int, seed=0) -> list[tuple[int, int, int]]:
    """Clauses of three literals on three distinct variables (DIMACS signs)."""
    rng = _rng(seed)
    if n_vars < 3:
        raise ValueError("exact-3-CNF needs at least 3 variables")
    clauses = []
    for _ in range(n_clauses):
        vs = rng.sample(range(1, n_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return clauses


def random_bcc(n: int, n_sets: int, seed=0, edge_prob: float = 0.4, max_set: int = 4):
    """(base graph, family) with every family set of size 2..max_set."""
    rng = _rng(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < edge_prob]
    family = [
        frozenset(rng.sample(range(n), rng.randint(2, min(max_set, n)))) for _ in range(n_sets)
    ]
    return Graph.from_edges(n, edges), family
