import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import oracle_bcc
from rainbowsplit.bcc import (
    BccInstance,
    Bipartitioning,
    forced_relations,
    normalize_anchor,
    solve_bcc,
    uniquely_coverable,
    verify_bipartition,
)
from rainbowsplit.errors import CapacityError, ContractError
from rainbowsplit.graph import Graph


@st.composite
def bcc_instances(draw, max_n=6, max_total=16):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=8))
    family, total = [], 0
    for _ in range(draw(st.integers(1, 4))):
        size = draw(st.integers(2, min(n, 5)))
        if total + size > max_total:
            break
        family.append(frozenset(draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True))))
        total += size
    return BccInstance(Graph.from_edges(n, edges), tuple(family))


def single_edge():
    return BccInstance(Graph.from_edges(2, [(0, 1)]), (frozenset({0, 1}),))


def test_verify_examples():
    inst = single_edge()
    assert verify_bipartition(inst, Bipartitioning((frozenset({0}),))) == (True, [])
    assert verify_bipartition(inst, Bipartitioning((frozenset(),))) == (False, [(0, 1)])
    tri = BccInstance(Graph.complete(3), (frozenset({0, 1, 2}),))
    assert verify_bipartition(tri, Bipartitioning((frozenset({0}),))) == (False, [(1, 2)])


def test_improper_subsets_rejected():
    inst = single_edge()
    with pytest.raises(ContractError):
        verify_bipartition(inst, Bipartitioning((frozenset({0, 1}),)))
    with pytest.raises(ContractError):
        verify_bipartition(inst, Bipartitioning((frozenset({0, 5}),)))
    with pytest.raises(ContractError):
        BccInstance(Graph.complete(2), (frozenset(),))


def test_uniquely_coverable():
    unique, hopeless = uniquely_coverable(single_edge())
    assert unique == {(0, 1): 0} and not hopeless
    inst = BccInstance(Graph.path(3), (frozenset({0, 1}),))
    assert uniquely_coverable(inst)[1] == [(1, 2)]
    assert solve_bcc(inst) is None


def test_solve_examples():
    assert solve_bcc(BccInstance(Graph.complete(3), (frozenset({0, 1, 2}),))) is None
    assert solve_bcc(single_edge()).x_of == (frozenset({0}),)


@given(bcc_instances())
def test_solver_matches_exhaustive(inst):
    x = solve_bcc(inst)
    assert (x is not None) == oracle_bcc(inst)
    if x is not None:
        assert verify_bipartition(inst, x)[0]
        # anchor normalisation: the smallest vertex of each set sits in X
        for t, xt in zip(inst.family, x.x_of):
            assert not xt or min(t) in xt


@given(bcc_instances(max_n=5, max_total=12))
def test_forced_relations_are_sound(inst):
    """Every root-forced relation holds in every covering bipartitioning."""
    from itertools import product

    forced = forced_relations(inst)
    if not forced:
        return
    edges = inst.base.edge_list
    subsets = []
    for t in inst.family:
        ts = sorted(t)
        subsets.append([frozenset(v for j, v in enumerate(ts) if m >> j & 1) for m in range(1 << len(ts))])
    for pick in product(*subsets):
        if all(any(u in t and v in t and (u in x) != (v in x) for t, x in zip(inst.family, pick)) for u, v in edges):
            for (i, u), (_, v), diff in forced:
                assert ((u in pick[i]) != (v in pick[i])) == bool(diff)


def test_normalize_anchor_is_idempotent():
    inst = BccInstance(Graph.complete(4), (frozenset({0, 1, 2, 3}), frozenset({1, 2})))
    x = normalize_anchor(inst, [frozenset({2, 3}), frozenset({1, 2})])
    assert x.x_of == (frozenset({0, 1}), frozenset({1}))
    assert normalize_anchor(inst, x.x_of) == x


def test_budget_is_a_capacity_error():
    inst = BccInstance(Graph.complete(5), (frozenset(range(5)),) * 3)
    with pytest.raises(CapacityError):
        solve_bcc(inst, budget=1)
