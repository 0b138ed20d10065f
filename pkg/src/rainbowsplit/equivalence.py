"""Three views of one problem: 2-colouring a bipartite graph so every pair on
side B has a rainbow path, keeping matrix rows distinct under edits at free
locations, and packing half/unit boxes in the unit cube. Also the Kraft test
for 2-colourability of threshold graphs.

Conventions shared by all views: red = 0 = matrix entry 0 = offset 1/2;
blue = 1 = matrix entry 1 = offset 0. Columns and dimensions follow A-vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from rainbowsplit.errors import ContractError
from rainbowsplit.graph import Graph, is_connected, is_threshold, recognize_split
from rainbowsplit.parity import solve_parity
from rainbowsplit.reduction import RED, Rc2GadgetLabels

HALF = Fraction(1, 2)
ONE = Fraction(1)


@dataclass(frozen=True)
class BipartiteInstance:
    n_a: int
    n_b: int
    edges: frozenset[tuple[int, int]]  # (a, b) with a < n_a, b < n_b

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        for a, b in self.edges:
            if not (0 <= a < self.n_a and 0 <= b < self.n_b):
                raise ContractError(f"edge {(a, b)} outside the parts")

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def a_neighbours(self, b: int) -> set[int]:
        return {a for a, bb in self.edges if bb == b}


@dataclass(frozen=True)
class MatrixInstance:
    rows: int
    cols: int
    free: frozenset[tuple[int, int]]  # the locations C that may be edited

    def __post_init__(self):
        object.__setattr__(self, "free", frozenset(self.free))
        for i, j in self.free:
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ContractError(f"location {(i, j)} outside {self.rows}x{self.cols}")

    def fixed_locations(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if (i, j) not in self.free]


@dataclass(frozen=True)
class PackingInstance:
    dim: int
    boxes: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        boxes = tuple(tuple(Fraction(s) for s in box) for box in self.boxes)
        object.__setattr__(self, "boxes", boxes)
        for box in boxes:
            if len(box) != self.dim or any(s not in (HALF, ONE) for s in box):
                raise ContractError(f"box {box} must have {self.dim} sides of 1 or 1/2")


def rc2_core_to_bipartite(g_prime: Graph, labels: Rc2GadgetLabels) -> tuple[BipartiteInstance, list[int], list[int]]:
    """Drop the u'_v vertices and the clique; A'' = s_T then x_e, B' = u_v.

    Also returns the G' ids of the A'' and B' vertices in instance order.
    """
    a_ids = list(labels.s) + [labels.x[e] for e in sorted(labels.x)]
    b_ids = list(labels.u)
    if len(set(a_ids) | set(b_ids) | set(labels.u_prime)) != g_prime.n:
        raise ContractError("labels do not cover the vertices of G'")
    for v, up in zip(labels.u, labels.u_prime):
        if not g_prime.has_edge(v, up):
            raise ContractError(f"missing edge u_v u'_v for {v}")
    a_index = {v: i for i, v in enumerate(a_ids)}
    edges = set()
    for bi, b in enumerate(b_ids):
        for w in g_prime.adjacency[b]:
            if w in a_index:
                edges.add((a_index[w], bi))
    return BipartiteInstance(len(a_ids), len(b_ids), frozenset(edges)), a_ids, b_ids


def bipartite_clauses(h: BipartiteInstance):
    edges = h.edge_list
    index = {e: i for i, e in enumerate(edges)}
    nbrs = [h.a_neighbours(b) for b in range(h.n_b)]
    clauses = []
    for b1, b2 in combinations(range(h.n_b), 2):
        common = sorted(nbrs[b1] & nbrs[b2])
        if not common:
            return edges, None
        clauses.append([(index[(a, b1)], index[(a, b2)]) for a in common])
    return edges, clauses


def decide_bipartite_rainbow(h: BipartiteInstance, budget: int = 10**7) -> dict[tuple[int, int], int] | None:
    """Colour map (a, b) -> {0, 1} giving every B-pair a rainbow path, or None."""
    edges, clauses = bipartite_clauses(h)
    if clauses is None:
        return None
    values = solve_parity(len(edges), clauses, budget)
    if values is None:
        return None
    return dict(zip(edges, values))


def check_bipartite_colouring(h: BipartiteInstance, col: dict[tuple[int, int], int]) -> bool:
    for b1, b2 in combinations(range(h.n_b), 2):
        if not any(
            (a, b1) in h.edges and (a, b2) in h.edges and col[(a, b1)] != col[(a, b2)]
            for a in range(h.n_a)
        ):
            return False
    return True


def bipartite_to_matrix(h: BipartiteInstance) -> MatrixInstance:
    """Rows are B vertices, columns A vertices; free locations are the non-edges."""
    free = {(b, a) for b in range(h.n_b) for a in range(h.n_a) if (a, b) not in h.edges}
    return MatrixInstance(h.n_b, h.n_a, frozenset(free))


def colouring_to_matrix(h: BipartiteInstance, col: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    return {(b, a): c for (a, b), c in col.items()}


def verify_matrix(inst: MatrixInstance, fixed: dict[tuple[int, int], int]) -> bool:
    """True iff every pair of rows differs at a location outside C, so no
    editing of the free locations can make two rows equal."""
    missing = set(inst.fixed_locations()) - set(fixed)
    if missing:
        raise ContractError(f"fixed entries missing at {sorted(missing)[:5]}")
    for r1, r2 in combinations(range(inst.rows), 2):
        if not any(
            (r1, j) not in inst.free
            and (r2, j) not in inst.free
            and fixed[(r1, j)] != fixed[(r2, j)]
            for j in range(inst.cols)
        ):
            return False
    return True


def decide_matrix_exhaustive(inst: MatrixInstance) -> dict[tuple[int, int], int] | None:
    """Try every 0/1 filling of the fixed locations (vectorised)."""
    locs = inst.fixed_locations()
    pos = {loc: i for i, loc in enumerate(locs)}
    if inst.rows < 2:
        return {loc: 0 for loc in locs}
    if len(locs) > 24:
        raise ContractError("too many fixed locations for exhaustive search")
    xs = np.arange(1 << len(locs), dtype=np.int64)
    ok = np.ones(len(xs), dtype=bool)
    for r1, r2 in combinations(range(inst.rows), 2):
        pair_ok = np.zeros(len(xs), dtype=bool)
        for j in range(inst.cols):
            if (r1, j) in pos and (r2, j) in pos:
                pair_ok |= (((xs >> pos[(r1, j)]) ^ (xs >> pos[(r2, j)])) & 1).astype(bool)
        ok &= pair_ok
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    x = int(hits[0])
    return {loc: (x >> i) & 1 for loc, i in pos.items()}


def bipartite_to_packing(h: BipartiteInstance) -> PackingInstance:
    boxes = tuple(
        tuple(HALF if (a, b) in h.edges else ONE for a in range(h.n_a)) for b in range(h.n_b)
    )
    return PackingInstance(h.n_a, boxes)


def colouring_to_packing(h: BipartiteInstance, col: dict[tuple[int, int], int]) -> list[tuple[Fraction, ...]]:
    """Lower-left corners: coordinate a is 1/2 where edge (a, b) is red, else 0."""
    return [
        tuple(HALF if (a, b) in h.edges and col[(a, b)] == RED else Fraction(0) for a in range(h.n_a))
        for b in range(h.n_b)
    ]


def packing_diagnostics(inst: PackingInstance, placements) -> list[str]:
    problems = []
    if len(placements) != len(inst.boxes):
        return [f"{len(placements)} placements for {len(inst.boxes)} boxes"]
    for i, (box, pos) in enumerate(zip(inst.boxes, placements)):
        if len(pos) != inst.dim:
            problems.append(f"box {i}: placement has {len(pos)} coordinates")
            continue
        for d, (s, x) in enumerate(zip(box, pos)):
            if x < 0 or x + s > 1:
                problems.append(f"box {i} leaves the cube in dimension {d}")
    if problems:
        return problems
    for i, j in combinations(range(len(inst.boxes)), 2):
        separated = any(
            pi + si <= pj or pj + sj <= pi
            for si, sj, pi, pj in zip(inst.boxes[i], inst.boxes[j], placements[i], placements[j])
        )
        if not separated:
            problems.append(f"boxes {i} and {j} overlap")
    return problems


def verify_packing(inst: PackingInstance, placements) -> bool:
    """Every box inside [0,1]^n and every pair interior-disjoint."""
    placements = [tuple(Fraction(x) for x in pos) for pos in placements]
    return not packing_diagnostics(inst, placements)


def decide_packing_exhaustive(inst: PackingInstance) -> list[tuple[Fraction, ...]] | None:
    """Search corners in {0, 1/2} on half-sides (unit sides sit at 0).

    Two length-1/2 intervals inside [0, 1] are disjoint only at 0 and 1/2, so
    any packing snaps onto this grid without losing a separation.
    """
    slots = [(b, d) for b, box in enumerate(inst.boxes) for d, s in enumerate(box) if s == HALF]
    if len(slots) > 22:
        raise ContractError("too many half-sides for exhaustive search")
    for bits in range(1 << len(slots)):
        pos = [[Fraction(0)] * inst.dim for _ in inst.boxes]
        for i, (b, d) in enumerate(slots):
            if (bits >> i) & 1:
                pos[b][d] = HALF
        placements = [tuple(p) for p in pos]
        if verify_packing(inst, placements):
            return placements
    return None


def threshold_kraft(g: Graph) -> bool:
    """sum over a maximum independent set of 2^-deg(v) <= 1, in exact integers."""
    if not is_connected(g) or not is_threshold(g):
        raise ContractError("threshold_kraft needs a connected threshold graph")
    sp = recognize_split(g)
    indep = set(sp.independent)
    # one clique vertex with no neighbour on the independent side may join
    loners = [v for v in sorted(sp.clique) if not (g.adjacency[v] & sp.independent)]
    if loners:
        indep.add(loners[0])
    if not indep:
        return True
    top = max(g.degree(v) for v in indep)
    return sum(1 << (top - g.degree(v)) for v in indep) <= (1 << top)
