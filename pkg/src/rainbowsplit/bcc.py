"""Biclique cover by bipartitioning: BCC(G, S).

Given a graph and a family S of vertex sets, choose for each T in S a proper
subset X(T) so that every edge uv has some T with u in X(T), v in T - X(T)
(or the other way round).
"""

from __future__ import annotations

from dataclasses import dataclass

from rainbowsplit.errors import ContractError
from rainbowsplit.graph import Edge, Graph
from rainbowsplit.parity import ParitySolver

BCC_BUDGET = 10**7


@dataclass(frozen=True)
class BccInstance:
    base: Graph
    family: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(frozenset(t) for t in self.family))
        for i, t in enumerate(self.family):
            if not t:
                raise ContractError(f"family set {i} is empty (it has no proper subset)")
            if any(not (0 <= v < self.base.n) for v in t):
                raise ContractError(f"family set {i} has vertices outside V")

    def sets_containing(self, u: int, v: int) -> list[int]:
        return [i for i, t in enumerate(self.family) if u in t and v in t]


@dataclass(frozen=True)
class Bipartitioning:
    x_of: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "x_of", tuple(frozenset(x) for x in self.x_of))

    def y_of(self, inst: BccInstance, i: int) -> frozenset[int]:
        return inst.family[i] - self.x_of[i]

    def check(self, inst: BccInstance) -> None:
        if len(self.x_of) != len(inst.family):
            raise ContractError(f"{len(self.x_of)} parts for {len(inst.family)} family sets")
        for i, (x, t) in enumerate(zip(self.x_of, inst.family)):
            if not x <= t:
                raise ContractError(f"X({i}) is not inside its set")
            if x == t:
                raise ContractError(f"X({i}) equals its set; X(T) must be a proper subset")


def covers(inst: BccInstance, x: Bipartitioning, i: int, u: int, v: int) -> bool:
    t = inst.family[i]
    if u not in t or v not in t:
        return False
    return (u in x.x_of[i]) != (v in x.x_of[i])


def verify_bipartition(inst: BccInstance, x: Bipartitioning) -> tuple[bool, list[Edge]]:
    x.check(inst)
    uncovered = [
        (u, v)
        for u, v in inst.base.edge_list
        if not any(covers(inst, x, i, u, v) for i in inst.sets_containing(u, v))
    ]
    return not uncovered, uncovered


def uniquely_coverable(inst: BccInstance) -> tuple[dict[Edge, int], list[Edge]]:
    """Edges whose endpoints share exactly one family set, and edges sharing none."""
    unique: dict[Edge, int] = {}
    hopeless: list[Edge] = []
    for u, v in inst.base.edge_list:
        sets = inst.sets_containing(u, v)
        if len(sets) == 1:
            unique[(u, v)] = sets[0]
        elif not sets:
            hopeless.append((u, v))
    return unique, hopeless


def membership_variables(inst: BccInstance) -> dict[tuple[int, int], int]:
    """One boolean per (set index, vertex of that set): is the vertex in X(T)?"""
    index = {}
    for i, t in enumerate(inst.family):
        for v in sorted(t):
            index[(i, v)] = len(index)
    return index


def bcc_clauses(inst: BccInstance) -> tuple[dict[tuple[int, int], int], list[list[tuple[int, int]]]]:
    var = membership_variables(inst)
    clauses = [
        [(var[(i, u)], var[(i, v)]) for i in inst.sets_containing(u, v)]
        for u, v in inst.base.edge_list
    ]
    return var, clauses


def normalize_anchor(inst: BccInstance, x_of) -> Bipartitioning:
    """Complement each X(T) so min(T) lies in it; an X(T) equal to T (which
    covers nothing) is replaced by {min(T)}, or by the empty set when |T| = 1."""
    out = []
    for t, x in zip(inst.family, x_of):
        x = frozenset(x)
        anchor = min(t)
        if anchor not in x:
            x = t - x
        if x == t:
            x = frozenset({anchor}) if len(t) > 1 else frozenset()
        out.append(x)
    return Bipartitioning(tuple(out))


def forced_relations(inst: BccInstance) -> list[tuple[tuple[int, int], tuple[int, int], int]]:
    """Side relations forced by root-level propagation from uniquely coverable edges.

    Each entry ((i, u), (i, v), diff) says u and v are on different sides of
    set i's bipartition (diff = 1) or on the same side (diff = 0).
    """
    var, clauses = bcc_clauses(inst)
    solver = ParitySolver(len(var), clauses)
    ok, _ = solver._propagate()
    if not ok:
        return []
    out = []
    for i, t in enumerate(inst.family):
        members = sorted(t)
        for a_idx, u in enumerate(members):
            for v in members[a_idx + 1:]:
                r = solver.uf.relation(var[(i, u)], var[(i, v)])
                if r is not None:
                    out.append(((i, u), (i, v), r))
    return out


def solve_bcc(inst: BccInstance, budget: int = BCC_BUDGET) -> Bipartitioning | None:
    """A covering bipartitioning, or None. Raises CapacityError past ``budget`` nodes.

    Each edge contributes a clause "some set containing both ends separates
    them"; uniquely coverable edges are unit clauses and propagate first.
    """
    _, hopeless = uniquely_coverable(inst)
    if hopeless:
        return None
    var, clauses = bcc_clauses(inst)
    values = ParitySolver(len(var), clauses, budget).solve()
    if values is None:
        return None
    x_of = [frozenset(v for v in t if values[var[(i, v)]]) for i, t in enumerate(inst.family)]
    return normalize_anchor(inst, x_of)
