"""Acceptance suite: nine criteria, each with its own time limit.

Every criterion prints one ``PASS`` / ``FAIL`` line (also collected into the
terminal summary). Run standalone with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from itertools import combinations, product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, oracle_bcc, oracle_sat  # noqa: E402
from rainbowsplit.bcc import BccInstance, solve_bcc, verify_bipartition  # noqa: E402
from rainbowsplit.equivalence import (  # noqa: E402
    BipartiteInstance,
    bipartite_to_matrix,
    bipartite_to_packing,
    check_bipartite_colouring,
    colouring_to_packing,
    decide_bipartite_rainbow,
    decide_matrix_exhaustive,
    decide_packing_exhaustive,
    threshold_kraft,
    verify_packing,
)
from rainbowsplit.generators import (  # noqa: E402
    random_3cnf,
    random_lemma_graph,
    random_split,
    random_threshold,
    special_graph,
)
from rainbowsplit.graph import Graph, is_connected, pendant_set  # noqa: E402
from rainbowsplit.rainbow import rc_exact, solve_rc2, verify_rainbow  # noqa: E402
from rainbowsplit.reduction import (  # noqa: E402
    CnfFormula,
    assignment_to_bipartition,
    bcc_to_rc2,
    bipartition_to_assignment,
    bipartition_to_colouring,
    colouring_to_bipartition,
    sat_to_bcc,
)
from rainbowsplit.split_rc import colour_with_k, decide_rc_at_most_k, lemma_case  # noqa: E402


def report(number, title, limit, check):
    """Run ``check`` (returning a list of failure strings and a detail string), time it, print."""
    start = time.perf_counter()
    failures, detail = check()
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        failures.append(f"took {elapsed:.1f}s, limit {limit}s")
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number} ({title}): {detail}; {elapsed:.2f}s / {limit}s"
    if failures:
        line += " :: " + "; ".join(failures[:3])
    print(line)
    ACCEPTANCE_LINES.append(line)
    return failures


def random_tree(edges, seed):
    rng = random.Random(seed)
    return Graph.from_edges(edges + 1, [(v, rng.randrange(v)) for v in range(1, edges + 1)])


# ---------------------------------------------------------------- 1

def closed_forms():
    cases = [(f"K{n}", Graph.complete(n), 1) for n in range(1, 7)]
    cases += [(f"P{e}", Graph.path(e + 1), e) for e in range(1, 11)]
    cases += [(f"C{n}", Graph.cycle(n), n // 2) for n in (4, 6, 8, 10)]
    cases += [(f"tree{e}/{s}", random_tree(e, s), e) for e in range(1, 11) for s in range(3)]
    bad = [f"{name}: got {rc_exact(g)[0]}, want {want}" for name, g, want in cases if rc_exact(g)[0] != want]
    return bad, f"{len(cases) - len(bad)}/{len(cases)} closed forms"


# ---------------------------------------------------------------- 2

def lemma_graphs():
    graphs = [random_lemma_graph(s) for s in range(400)]
    # small hosts so the exact oracle has a real subsample to check
    graphs += [random_lemma_graph(10_000 + s, max_n=10, max_pendants=5) for s in range(100)]
    bad, exact_checked = [], 0
    for i, g in enumerate(graphs):
        p = len(pendant_set(g))
        if g.n > 60 or lemma_case(g) is None:
            bad.append(f"graph {i} is not a lemma host")
            continue
        col = colour_with_k(g, p, verify=False)
        if col.colours_used() != set(range(p)) or not verify_rainbow(g, col, max(20, p)).connected:
            bad.append(f"graph {i}: colouring with p={p} failed")
        if g.m <= 14:
            exact_checked += 1
            if rc_exact(g)[0] != p:
                bad.append(f"graph {i}: rc_exact != p={p}")
    return bad, f"{len(graphs)} graphs coloured with exactly p colours, {exact_checked} checked by rc_exact"


# ---------------------------------------------------------------- 3

def g220_exception():
    g220, g220z = special_graph("g220"), special_graph("g220z")
    got = (rc_exact(g220)[0], rc_exact(g220z)[0], decide_rc_at_most_k(g220, 4), decide_rc_at_most_k(g220z, 4))
    want = (5, 4, False, True)
    return ([] if got == want else [f"got {got}, want {want}"]), "rc(G220)=5, rc(G220z)=4, decide no/yes"


# ---------------------------------------------------------------- 4 and 5

def satisfiable_formulas(count=50):
    out, seed = [], 0
    while len(out) < count:
        rng = random.Random(seed)
        seed += 1
        n, m = rng.randint(3, 4), rng.randint(1, 3)
        phi = CnfFormula(n, tuple(random_3cnf(n, m, rng)))
        if phi.brute_force() is not None:
            out.append(phi)
    return out


def reduction_chain():
    bad = []
    for i, phi in enumerate(satisfiable_formulas()):
        inst, sat_labels = sat_to_bcc(phi)
        x = assignment_to_bipartition(phi, sat_labels, phi.brute_force())
        if not verify_bipartition(inst, x)[0]:
            bad.append(f"formula {i}: eval->X not covering")
            continue
        g, rc_labels = bcc_to_rc2(inst)
        col = bipartition_to_colouring(inst, rc_labels, x)
        if col.k != 2 or not verify_rainbow(g, col, 2).connected:
            bad.append(f"formula {i}: X->colouring not rainbow")
            continue
        back = colouring_to_bipartition(inst, rc_labels, col, g)
        if not verify_bipartition(inst, back)[0]:
            bad.append(f"formula {i}: colouring->X not covering")
        if not phi.satisfied_by(bipartition_to_assignment(inst, sat_labels, back)):
            bad.append(f"formula {i}: X->eval not satisfying")
    return bad, "50 satisfiable formulas lifted both ways"


def unsat_formula():
    return CnfFormula(
        3, tuple(tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in product((1, -1), repeat=3))
    )


def reduction_completeness():
    bad = []
    formulas = satisfiable_formulas() + [unsat_formula()]
    for i, phi in enumerate(formulas):
        inst, labels = sat_to_bcc(phi)
        x = solve_bcc(inst, budget=10**7)
        if (x is not None) != oracle_sat(phi.n_vars, phi.clauses):
            bad.append(f"formula {i}: solver answer disagrees with satisfiability")
        elif x is not None and not phi.satisfied_by(bipartition_to_assignment(inst, labels, x)):
            bad.append(f"formula {i}: solver certificate lifts to a non-satisfying eval")
    return bad, f"{len(formulas)} formulas incl. the 8-clause unsatisfiable one"


# ---------------------------------------------------------------- 6

K3 = [(0, 1), (1, 2), (0, 2)]
K4 = list(combinations(range(4), 2))
P3 = [(0, 1), (1, 2)]
HANDCRAFTED_BCC = [
    (2, [(0, 1)], [{0, 1}]),
    (2, [], [{0, 1}]),
    (2, [(0, 1)], [{0, 1}, {0, 1}]),
    (3, P3, [{0, 1}, {1, 2}]),
    (3, P3, [{0, 1, 2}]),
    (3, P3, [{0, 1}]),
    (3, [(0, 1), (0, 2)], [{0, 1, 2}]),
    (3, [(0, 1), (0, 2)], [{0, 1}, {0, 2}]),
    (3, [(0, 1), (0, 2)], [{1, 2}, {0, 1}]),
    (3, K3, [{0, 1, 2}]),
    (3, K3, [{0, 1, 2}, {0, 1, 2}]),
    (3, K3, [{0, 1, 2}, {0, 1, 2}, {0, 1, 2}]),
    (3, K3, [{0, 1}, {1, 2}, {0, 2}]),
    (3, K3, [{0, 1}, {0, 2}, {1, 2}]),
    (3, K3, [{0, 1}, {1, 2}]),
    (3, K3, [{0, 2}, {1, 2}]),
    (3, K3, [{0, 1, 2}, {0, 1}]),
    (3, K3, [{0, 1}, {0, 1, 2}]),
    (3, K3, [{0, 1, 2}, {0, 2}]),
    (3, K3, [{0, 2}, {1, 2}, {0, 1, 2}]),
    (4, K4, [{0, 1, 2, 3}]),
    (4, K4, [{0, 1, 2, 3}, {0, 1, 2, 3}]),
    (4, K4, [{0, 1, 2, 3}, {0, 1, 2}]),
    (4, K4, [{0, 1, 2, 3}, {1, 2, 3}]),
    (4, K4, [{0, 1, 2, 3}, {0, 2, 3}]),
    (4, K4, [{0, 1, 2, 3}, {0, 1}]),
    (4, K4, [{0, 1, 2}, {1, 2, 3}]),
    (4, K4, [{0, 1, 3}, {1, 2, 3}]),
    (4, K4, [{0, 1, 2}, {0, 3}]),
    (4, K4, [{0, 1}, {2, 3}]),
]


def bcc_rc2_equivalence():
    bad, yes = [], 0
    for i, (n, edges, family) in enumerate(HANDCRAFTED_BCC):
        inst = BccInstance(Graph.from_edges(n, edges), tuple(frozenset(t) for t in family))
        g, _ = bcc_to_rc2(inst)
        if sum(map(len, family)) > 12 or g.m > 30:
            bad.append(f"instance {i} is outside the size bounds")
            continue
        a = solve_bcc(inst) is not None
        b = solve_rc2(g) is not None
        yes += a
        if a != b or a != oracle_bcc(inst):
            bad.append(f"instance {i}: bcc={a} rc2={b}")
    return bad, f"{len(HANDCRAFTED_BCC)} instances agree ({yes} yes)"


# ---------------------------------------------------------------- 7

def tri_equivalence():
    rng = random.Random(7)
    bad, yes = [], 0
    for i in range(200):
        n_a, n_b = rng.randint(1, 4), rng.randint(1, 4)
        cells = list(product(range(n_a), range(n_b)))
        h = BipartiteInstance(n_a, n_b, frozenset(c for c in cells if rng.random() < 0.6))
        col = decide_bipartite_rainbow(h)
        matrix = decide_matrix_exhaustive(bipartite_to_matrix(h)) is not None
        packing = decide_packing_exhaustive(bipartite_to_packing(h)) is not None
        if not ((col is not None) == matrix == packing):
            bad.append(f"instance {i}: rainbow={col is not None} matrix={matrix} packing={packing}")
        if col is not None:
            yes += 1
            if not (check_bipartite_colouring(h, col) and verify_packing(bipartite_to_packing(h), colouring_to_packing(h, col))):
                bad.append(f"instance {i}: certificate did not convert to a packing")
    return bad, f"200 instances, three views agree ({yes} yes, all packed)"


# ---------------------------------------------------------------- 8

def threshold_kraft_check():
    bad, graphs, seed = [], [], 0
    while len(graphs) < 100:
        g = random_threshold(random.Random(seed).randint(2, 7), seed)
        seed += 1
        if is_connected(g) and g.m <= 14:
            graphs.append(g)
    yes = 0
    for i, g in enumerate(graphs):
        k = threshold_kraft(g)
        yes += k
        if k != (rc_exact(g)[0] <= 2):
            bad.append(f"graph {i}: kraft={k}")
    return bad, f"100 threshold graphs agree ({yes} satisfy the inequality)"


# ---------------------------------------------------------------- 9

def augmentation():
    bad, done, seed = [], 0, 0
    while done < 100:
        rng = random.Random(seed)
        g = random_split(rng.randint(5, 20), seed)
        seed += 1
        k = 4 + done % 3
        p = len(pendant_set(g))
        if p >= k or g.m <= k:
            continue
        done += 1
        col = colour_with_k(g, k, verify=False)
        if set(col.colour_of) != set(g.edges) or max(col.colours_used()) >= k:
            bad.append(f"graph {seed - 1}: restriction not a k-colouring")
        elif not verify_rainbow(g, col).connected:
            bad.append(f"graph {seed - 1}: restriction not rainbow (k={k})")
    return bad, "100 split graphs with p < k in {4,5,6}"


CRITERIA = [
    (1, "closed-form rc values", 10, closed_forms),
    (2, "lemma colourings", 60, lemma_graphs),
    (3, "G220 exception", 30, g220_exception),
    (4, "reduction chain soundness", 60, reduction_chain),
    (5, "reduction completeness", 300, reduction_completeness),
    (6, "BCC / RC2 equivalence", 120, bcc_rc2_equivalence),
    (7, "tri-equivalence", 120, tri_equivalence),
    (8, "threshold Kraft", 120, threshold_kraft_check),
    (9, "augmentation", 60, augmentation),
]


@pytest.mark.parametrize("number, title, limit, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, check):
    failures = report(number, title, limit, check)
    assert not failures, failures


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    sys.exit(1 if any(results) else 0)
