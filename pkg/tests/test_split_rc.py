import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import split_graphs
from rainbowsplit.errors import ContractError
from rainbowsplit.generators import random_lemma_graph, random_split, special_graph
from rainbowsplit.graph import Graph, pendant_set, recognize_split
from rainbowsplit.rainbow import rc_exact, verify_rainbow
from rainbowsplit.split_rc import (
    G111,
    G220,
    G220Z,
    G310,
    G400,
    G2200,
    build_anatomy,
    colour_special,
    colour_with_k,
    decide_rc_at_most_k,
    dummy_anchors,
    extend_pendants,
    lemma_case,
    rc_split,
)


def triangle_with(counts):
    return Graph.complete(3).add_pendants([x for x, c in enumerate(counts) for _ in range(c)])


@pytest.mark.parametrize(
    "counts, tag",
    [((1, 1, 1), G111), ((4, 0, 0), G400), ((3, 1, 0), G310), ((2, 2, 0), G220), ((2, 1, 1), G111)],
)
def test_case_classification(counts, tag):
    assert build_anatomy(triangle_with(counts)).case_tag == tag


def test_g220z_and_g2200_classification():
    assert build_anatomy(special_graph("g220z")).case_tag == G220Z
    assert build_anatomy(special_graph("g2200", clique=4)).case_tag == G2200


def test_anatomy_invariants_and_report():
    g = special_graph("g310", clique=5, extra=4, seed=3)
    anat = build_anatomy(g)
    anat.check()
    text = anat.to_text()
    assert text.startswith("case G310") and "x0" in text and "K2" in text


def test_g111_table_values():
    g = triangle_with((1, 1, 1))
    anat = build_anatomy(g)
    col = colour_special(anat)
    x0, x1 = anat.special[:2]
    assert col[(x0, x1)] == 2
    assert col[(anat.pendants[0], anat.pendant_map[anat.pendants[0]])] == 0
    assert col.k == 3 and verify_rainbow(g, col).connected


def test_g400_table_values():
    g = special_graph("g400", clique=5)
    anat = build_anatomy(g)
    col = colour_special(anat)
    x0, x1 = anat.special[:2]
    assert [col[(y, x0)] for y in anat.pendants] == [0, 1, 2, 3]
    assert col[(x0, x1)] == 3
    k2 = sorted(anat.k_parts[2])
    assert all(col[(x1, v)] == 0 for v in k2)
    assert all(col[(x0, v)] == 1 for v in k2)
    assert all(col[(a, b)] == 1 for i, a in enumerate(k2) for b in k2[i + 1:])


def test_g2200_table_values():
    g = special_graph("g2200", clique=6)
    anat = build_anatomy(g)
    col = colour_special(anat)
    part = anat.part_of()
    expected = {(0, 1): 2, (1, 2): 0, (2, 3): 0, (0, 3): 1, (0, 2): 3, (1, 3): 0, (3, 3): 1}
    for e in g.edge_list:
        if e[0] in part and e[1] in part:
            assert col[e] == expected[tuple(sorted((part[e[0]], part[e[1]])))]
    assert verify_rainbow(g, col).connected


def test_g220z_table_values():
    g = special_graph("g220z")
    anat = build_anatomy(g)
    col = colour_special(anat)
    x0, x1, x2 = anat.special[:3]
    assert (col[(x0, x1)], col[(x0, x2)], col[(x1, x2)]) == (0, 1, 3)
    z = anat.z_witness
    assert (col[(z, x0)], col[(z, x1)]) == (2, 1)
    assert verify_rainbow(g, col).connected


def test_colour_special_rejects_other_cases():
    with pytest.raises(ContractError):
        colour_special(build_anatomy(triangle_with((2, 2, 0))))


@pytest.mark.parametrize("seed", range(60))
def test_part_colour_separation(seed):
    g = random_lemma_graph(seed, max_n=30)
    anat = build_anatomy(g)
    col = colour_special(anat)
    part = anat.part_of()
    for u, v in g.edge_list:
        if u in part and v in part and part[u] != part[v]:
            assert col[(u, v)] not in (part[u], part[v])


@pytest.mark.parametrize("seed", range(40))
def test_lemma_colourings_use_exactly_p(seed):
    g = random_lemma_graph(seed)
    p = len(pendant_set(g))
    assert lemma_case(g) is not None
    col = colour_with_k(g, p)
    assert col.colours_used() == set(range(p))
    assert verify_rainbow(g, col, mask_budget=max(20, p)).connected


def test_extend_pendants():
    g = triangle_with((1, 1, 1))
    base = colour_special(build_anatomy(g))
    assert extend_pendants(g, base, set()) == base
    g2 = triangle_with((2, 1, 1))
    anat = build_anatomy(g2)
    col = extend_pendants(g2, colour_special(anat), anat.extra_pendants)
    assert col.k == 4 and verify_rainbow(g2, col).connected
    g3 = special_graph("g400", clique=3).add_pendants([0, 1])
    anat = build_anatomy(g3)
    col = extend_pendants(g3, colour_special(anat), anat.extra_pendants)
    assert col.k == 6 and verify_rainbow(g3, col).connected


def test_decide_examples():
    assert decide_rc_at_most_k(triangle_with((4, 0, 0)), 4)
    assert not decide_rc_at_most_k(triangle_with((2, 2, 0)), 4)
    assert decide_rc_at_most_k(special_graph("g220z"), 4)
    assert not decide_rc_at_most_k(Graph.complete(4).add_pendants([0, 0, 1, 1, 2, 3]), 5)
    with pytest.raises(ContractError):
        decide_rc_at_most_k(triangle_with((1, 1, 1)), 3)


@settings(max_examples=80)
@given(split_graphs(max_clique=6, max_indep=8), st.integers(4, 8))
def test_decide_is_monotone(g, k):
    if decide_rc_at_most_k(g, k):
        assert decide_rc_at_most_k(g, k + 1)


@settings(max_examples=80)
@given(split_graphs(max_clique=6, max_indep=8), st.integers(4, 7))
def test_colour_with_k_verifies(g, k):
    if not decide_rc_at_most_k(g, k):
        with pytest.raises(ContractError):
            colour_with_k(g, k)
        return
    col = colour_with_k(g, k)
    assert max(col.colours_used(), default=0) < k
    assert verify_rainbow(g, col).connected


def test_dummy_placement_examples():
    # no pendants: four dummies over three distinct clique vertices
    g = Graph.from_edges(6, list(Graph.complete(4).edges) + [(0, 4), (1, 4), (2, 5), (3, 5)])
    anchors = dummy_anchors(g, recognize_split(g), 4)
    assert len(set(anchors)) == 3
    # (3, 0, 0): one dummy on a fresh corner gives the (3, 1) pattern
    h = triangle_with((3, 0, 0))
    anchors = dummy_anchors(h, recognize_split(h), 1)
    assert len(anchors) == 1 and anchors[0] != 0
    aug = h.add_pendants(anchors)
    assert build_anatomy(aug).case_tag == G310
    assert verify_rainbow(h, colour_with_k(h, 4)).connected


def test_rc_split_examples():
    assert rc_split(Graph.complete(5))[0] == 1
    assert rc_split(triangle_with((2, 2, 0)))[0] == 5
    assert rc_split(triangle_with((3, 1, 0)))[0] == 4
    assert rc_split(special_graph("g220z"))[0] == 4


@pytest.mark.parametrize("seed", range(40))
def test_rc_split_matches_exact(seed):
    g = random_split(7, seed, pendant_prob=0.5)
    if g.m > 14:
        return
    k, col = rc_split(g)
    assert verify_rainbow(g, col).connected
    assert k == rc_exact(g)[0]


def test_trees_and_precondition_errors():
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert rc_split(star)[0] == 4
    assert decide_rc_at_most_k(star, 4) and not decide_rc_at_most_k(star.add_pendants([0]), 4)
    with pytest.raises(ContractError):
        build_anatomy(Graph.cycle(4))
