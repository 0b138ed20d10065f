"""Rainbow connectivity: verification, witness paths, bounds, and exact solvers.

Everything here is exponential in the number of colours or edges and is meant
for desk-scale instances and as the oracle for the rest of the package.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from rainbowsplit.errors import CapacityError, ContractError
from rainbowsplit.graph import (
    Edge,
    Graph,
    bfs_distances,
    bridges,
    diameter,
    is_connected,
    norm_edge,
    pendant_set,
)
from rainbowsplit.parity import solve_parity

MASK_BUDGET = 20
EDGE_LIMIT = 15
# upper bound on bytes held by one layer of the reachability DP
_LAYER_BYTES = 1 << 28


@dataclass(frozen=True)
class EdgeColouring:
    k: int
    colour_of: Mapping[Edge, int]

    @classmethod
    def from_pairs(cls, pairs, k: int | None = None) -> EdgeColouring:
        colour_of = {norm_edge(u, v): c for (u, v), c in pairs}
        if k is None:
            k = max(colour_of.values(), default=-1) + 1
        return cls(k, colour_of)

    def __getitem__(self, edge: tuple[int, int]) -> int:
        return self.colour_of[norm_edge(*edge)]

    def colours_used(self) -> set[int]:
        return set(self.colour_of.values())

    def check(self, g: Graph) -> None:
        if set(self.colour_of) != set(g.edges):
            missing = set(g.edges) - set(self.colour_of)
            extra = set(self.colour_of) - set(g.edges)
            raise ContractError(
                f"colouring not total over E(g): missing={sorted(missing)[:5]} extra={sorted(extra)[:5]}"
            )
        bad = [e for e, c in self.colour_of.items() if not (0 <= c < self.k)]
        if bad:
            raise ContractError(f"colours outside 0..{self.k - 1} on {bad[:5]}")

    def restrict(self, g: Graph) -> EdgeColouring:
        return EdgeColouring(self.k, {e: self.colour_of[e] for e in g.edges})


def _check_inputs(g: Graph, c: EdgeColouring, mask_budget: int) -> None:
    if c.k > mask_budget:
        raise CapacityError(f"{c.k} colours exceed the mask budget of {mask_budget}")
    c.check(g)


def _colour_matrices(g: Graph, c: EdgeColouring) -> list[np.ndarray | None]:
    mats: list[np.ndarray | None] = [None] * c.k
    for (u, v), col in c.colour_of.items():
        if mats[col] is None:
            mats[col] = np.zeros((g.n, g.n), dtype=np.float32)
        mats[col][u, v] = mats[col][v, u] = 1.0
    return mats


def rainbow_reachability(g: Graph, c: EdgeColouring, mask_budget: int = MASK_BUDGET) -> np.ndarray:
    """Boolean n x n matrix: entry (s, v) is True iff a rainbow path joins s and v.

    Dynamic programme over (vertex, used-colour set) states, advanced one
    colour-set size at a time for a block of sources at once. A rainbow walk
    always contains a rainbow path between its ends, so walks suffice.
    """
    _check_inputs(g, c, mask_budget)
    n = g.n
    mats = _colour_matrices(g, c)
    live = [col for col in range(c.k) if mats[col] is not None]
    widest = max(1, comb(len(live), len(live) // 2))
    block = max(1, min(n, _LAYER_BYTES // max(1, widest * n * 4)))
    reach = np.eye(n, dtype=bool)
    for start in range(0, n, block):
        rows = slice(start, min(n, start + block))
        seed = np.zeros((rows.stop - rows.start, n), dtype=np.float32)
        seed[np.arange(rows.stop - rows.start), np.arange(rows.start, rows.stop)] = 1.0
        layer = {0: seed}
        while layer:
            nxt: dict[int, np.ndarray] = {}
            for mask, frontier in layer.items():
                for col in live:
                    bit = 1 << col
                    if mask & bit:
                        continue
                    step = (frontier @ mats[col]) > 0
                    if not step.any():
                        continue
                    key = mask | bit
                    if key in nxt:
                        nxt[key] = np.maximum(nxt[key], step.astype(np.float32))
                    else:
                        nxt[key] = step.astype(np.float32)
            for arr in nxt.values():
                reach[rows] |= arr > 0
            layer = nxt
    return reach


@dataclass
class RainbowReport:
    connected: bool
    failing_pair: tuple[int, int] | None = None
    graph: Graph | None = field(default=None, repr=False)
    colouring: EdgeColouring | None = field(default=None, repr=False)

    def witness(self, u: int, v: int) -> list[Edge] | None:
        return rainbow_path(self.graph, self.colouring, u, v)

    @property
    def witness_paths(self) -> dict[tuple[int, int], list[Edge]]:
        if not self.connected:
            return {}
        return {
            (u, v): self.witness(u, v) for u, v in combinations(range(self.graph.n), 2)
        }

    def to_text(self, with_paths: bool = True) -> str:
        lines = [f"rainbow-connected {'yes' if self.connected else 'no'}"]
        if self.failing_pair is not None:
            lines.append(f"failing-pair {self.failing_pair[0]} {self.failing_pair[1]}")
        if self.connected and with_paths:
            for (u, v), path in self.witness_paths.items():
                verts = [u] + [b for _, b in path]
                cols = [self.colouring[e] for e in path]
                lines.append(
                    f"pair {u} {v} path {'-'.join(map(str, verts))} colours {','.join(map(str, cols))}"
                )
        return "\n".join(lines) + "\n"


def verify_rainbow(g: Graph, c: EdgeColouring, mask_budget: int = MASK_BUDGET) -> RainbowReport:
    if not is_connected(g):
        return RainbowReport(False, _first_disconnected_pair(g), g, c)
    reach = rainbow_reachability(g, c, mask_budget)
    missing = np.argwhere(~reach)
    if len(missing):
        u, v = (int(x) for x in missing[0])
        return RainbowReport(False, (min(u, v), max(u, v)), g, c)
    return RainbowReport(True, None, g, c)


def _first_disconnected_pair(g: Graph) -> tuple[int, int]:
    dist = bfs_distances(g, 0)
    return (0, dist.index(-1))


def rainbow_path(g: Graph, c: EdgeColouring, u: int, v: int, mask_budget: int = MASK_BUDGET) -> list[Edge] | None:
    """Shortest rainbow u-v path as oriented edges, lexicographically smallest
    vertex sequence among the shortest; None if no rainbow path exists."""
    _check_inputs(g, c, mask_budget)
    if u == v:
        return []
    # layered BFS over (vertex, mask) to find the shortest rainbow length
    frontier = {(u, 0)}
    seen = set(frontier)
    length = None
    depth = 0
    while frontier and length is None:
        depth += 1
        nxt = set()
        for w, mask in frontier:
            for x in g.adjacency[w]:
                bit = 1 << c[(w, x)]
                if mask & bit:
                    continue
                if x == v:
                    length = depth
                state = (x, mask | bit)
                if state not in seen:
                    seen.add(state)
                    nxt.add(state)
        frontier = nxt
    if length is None:
        return None

    dist_to_v = bfs_distances(g, v)
    dead: set[tuple[int, int]] = set()
    path = [u]

    # depth of a state equals popcount of its mask, so (vertex, mask) memoises failures
    def extend(w: int, mask: int, left: int) -> bool:
        if left == 0:
            return w == v
        if (w, mask) in dead or dist_to_v[w] > left:
            return False
        for x in sorted(g.adjacency[w]):
            bit = 1 << c[(w, x)]
            if mask & bit:
                continue
            path.append(x)
            if extend(x, mask | bit, left - 1):
                return True
            path.pop()
        dead.add((w, mask))
        return False

    extend(u, 0, length)
    return list(zip(path, path[1:]))


def rc_lower_bound(g: Graph) -> int:
    if not is_connected(g):
        raise ContractError("disconnected graphs have no rainbow colouring")
    bound = max(diameter(g), len(bridges(g)), 1)
    if g.n >= 3:
        # distinct pendant edges are pairwise forced apart (K2's two pendants share one edge)
        bound = max(bound, len(pendant_set(g)))
    if not g.is_complete():
        bound = max(bound, 2)
    return bound


def _simple_paths(g: Graph, u: int, v: int, max_len: int, edge_index: dict[Edge, int]) -> list[tuple[int, ...]]:
    dist_to_v = bfs_distances(g, v)
    out = []
    on_path = {u}

    def walk(w: int, used: list[int]) -> None:
        if w == v:
            out.append(tuple(used))
            return
        left = max_len - len(used)
        for x in sorted(g.adjacency[w]):
            if x in on_path or dist_to_v[x] > left - 1:
                continue
            on_path.add(x)
            used.append(edge_index[norm_edge(w, x)])
            walk(x, used)
            used.pop()
            on_path.discard(x)

    walk(u, [])
    return out


class _CanonicalSearch:
    """Canonical-order enumeration of k-colourings with early rejection.

    Edges take colours in restricted-growth order (an edge may open at most one
    colour beyond those already used), which quotients out colour permutations.
    Each non-adjacent pair carries its candidate paths of length <= k; a path
    dies once two of its edges share a colour, and a partial colouring is
    abandoned as soon as some pair has no live path. A full colouring that
    survives is rainbow by construction.
    """

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.edges = g.edge_list
        index = {e: i for i, e in enumerate(self.edges)}
        self.paths: list[tuple[int, ...]] = []
        self.path_pair: list[int] = []
        self.alive_count: list[int] = []
        self.infeasible = False
        for u, v in combinations(range(g.n), 2):
            if g.has_edge(u, v):
                continue
            ps = _simple_paths(g, u, v, k, index)
            if not ps:
                self.infeasible = True
            self.alive_count.append(len(ps))
            for p in ps:
                self.path_pair.append(len(self.alive_count) - 1)
                self.paths.append(p)
        self.edge_paths: list[list[int]] = [[] for _ in self.edges]
        for pid, p in enumerate(self.paths):
            for e in p:
                self.edge_paths[e].append(pid)
        self.path_mask = [0] * len(self.paths)
        self.path_dead = [False] * len(self.paths)
        self.colour = [-1] * len(self.edges)

    def _assign(self, e: int, col: int, trail: list) -> bool:
        bit = 1 << col
        ok = True
        for pid in self.edge_paths[e]:
            if self.path_dead[pid]:
                continue
            if self.path_mask[pid] & bit:
                self.path_dead[pid] = True
                trail.append(("dead", pid))
                pair = self.path_pair[pid]
                self.alive_count[pair] -= 1
                if self.alive_count[pair] == 0:
                    ok = False
            else:
                self.path_mask[pid] |= bit
                trail.append(("mask", pid))
        return ok

    def _unassign(self, col: int, trail: list) -> None:
        bit = 1 << col
        for kind, pid in reversed(trail):
            if kind == "dead":
                self.path_dead[pid] = False
                self.alive_count[self.path_pair[pid]] += 1
            else:
                self.path_mask[pid] &= ~bit

    def run(self) -> list[int] | None:
        if self.infeasible:
            return None
        m = len(self.edges)
        if m == 0:
            return []
        # iterative DFS; frame = (edge, next colour to try, max colour used before edge)
        stack: list[list] = [[0, 0, -1, None]]
        while stack:
            frame = stack[-1]
            e, nxt_col, used_max, trail = frame
            if trail is not None:
                self._unassign(self.colour[e], trail)
                self.colour[e] = -1
                frame[3] = None
            limit = min(self.k - 1, used_max + 1)
            if nxt_col > limit:
                stack.pop()
                continue
            frame[1] = nxt_col + 1
            trail = []
            self.colour[e] = nxt_col
            frame[3] = trail
            if not self._assign(e, nxt_col, trail):
                continue
            if e + 1 == m:
                return list(self.colour)
            stack.append([e + 1, 0, max(used_max, nxt_col), None])
        return None


def find_rainbow_colouring(g: Graph, k: int, edge_limit: int = EDGE_LIMIT) -> EdgeColouring | None:
    """Exact decision of "rainbow colourable with k colours", canonical-smallest witness."""
    if g.m > edge_limit:
        raise CapacityError(f"{g.m} edges exceed the exact-search edge limit of {edge_limit}")
    if not is_connected(g):
        raise ContractError("disconnected graphs have no rainbow colouring")
    if k < 1:
        return None
    found = _CanonicalSearch(g, k).run()
    if found is None:
        return None
    return EdgeColouring(k, dict(zip(g.edge_list, found)))


def rc_exact(g: Graph, edge_limit: int = EDGE_LIMIT, mask_budget: int = MASK_BUDGET) -> tuple[int, EdgeColouring]:
    """rc(g) and a witness colouring, searching k upward from rc_lower_bound."""
    if g.m > edge_limit:
        raise CapacityError(f"{g.m} edges exceed the exact-search edge limit of {edge_limit}")
    k = rc_lower_bound(g)
    while True:
        if k > mask_budget:
            raise CapacityError(f"{k} colours exceed the mask budget of {mask_budget}")
        col = find_rainbow_colouring(g, k, edge_limit)
        if col is not None:
            if not verify_rainbow(g, col, mask_budget).connected:
                raise AssertionError("exact search produced a non-rainbow colouring")
            return k, col
        k += 1


def rc2_clauses(g: Graph) -> tuple[list[Edge], list[list[tuple[int, int]]]] | None:
    """Edge variables and one clause per non-adjacent pair, or None if some
    non-adjacent pair has no common neighbour."""
    edges = g.edge_list
    index = {e: i for i, e in enumerate(edges)}
    clauses = []
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        common = sorted(g.adjacency[u] & g.adjacency[v])
        if not common:
            return None
        clauses.append([(index[norm_edge(u, w)], index[norm_edge(w, v)]) for w in common])
    return edges, clauses


def solve_rc2(g: Graph, budget: int = 10**7) -> EdgeColouring | None:
    """A rainbow colouring with colours {0, 1}, or None if none exists.

    With two colours a rainbow path has at most two edges, so each
    non-adjacent pair needs a common neighbour w with colour(uw) != colour(wv).
    """
    if not is_connected(g):
        raise ContractError("disconnected graphs have no rainbow colouring")
    built = rc2_clauses(g)
    if built is None:
        return None
    edges, clauses = built
    values = solve_parity(len(edges), clauses, budget)
    if values is None:
        return None
    return EdgeColouring(2, dict(zip(edges, values)))
