"""Simple undirected graphs on dense integer ids, plus split/threshold recognition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from rainbowsplit.errors import ContractError, NotSplitError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise ContractError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise ContractError(f"edge {(u, v)} not normalised or out of range for n={self.n}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        normed = set()
        for u, v in edges:
            if u == v:
                raise ContractError(f"self-loop at {u}")
            normed.add(norm_edge(u, v))
        return cls(n, frozenset(normed))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def add_pendants(self, anchors: Iterable[int]) -> Graph:
        """Return a copy with one new degree-1 vertex attached to each anchor, ids n, n+1, ..."""
        new_edges = set(self.edges)
        n = self.n
        for a in anchors:
            new_edges.add((a, n))
            n += 1
        return Graph(n, frozenset(new_edges))

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled order-preservingly; also returns new-id -> old-id."""
        old = sorted(set(keep))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [
            (new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of
        ]
        return Graph.from_edges(len(old), edges), old


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def check(self, g: Graph) -> None:
        """Raise ContractError unless this is a valid partition with a maximal clique."""
        if self.clique | self.independent != frozenset(range(g.n)) or self.clique & self.independent:
            raise ContractError("clique and independent set do not partition V")
        for u, v in combinations(sorted(self.clique), 2):
            if not g.has_edge(u, v):
                raise ContractError(f"clique vertices {u},{v} not adjacent")
        for u, v in combinations(sorted(self.independent), 2):
            if g.has_edge(u, v):
                raise ContractError(f"independent vertices {u},{v} adjacent")
        for v in self.independent:
            if self.clique <= g.neighbours(v):
                raise ContractError(f"clique not maximal: {v} sees all of it")


def pendant_set(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def distance(g: Graph, u: int, v: int) -> int:
    d = bfs_distances(g, u)[v]
    if d < 0:
        raise ContractError(f"{u} and {v} are in different components")
    return d


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise ContractError("diameter of a disconnected graph")
    return max((max(bfs_distances(g, s)) for s in range(g.n)), default=0)


def bridges(g: Graph) -> frozenset[Edge]:
    """Bridges via iterative low-link DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    found = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, neighbour iterator)
        stack = [(root, -1, iter(sorted(g.adjacency[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(g.adjacency[w]))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.add(norm_edge(parent, v))
    return frozenset(found)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def recognize_split(g: Graph) -> SplitPartition | None:
    """Split partition with a maximal clique, or None when g is not split.

    Uses the degree-sequence test: with degrees d_1 >= ... >= d_n and
    t = max{i : d_i >= i - 1}, g is split iff
    sum_{i<=t} d_i == t(t-1) + sum_{i>t} d_i, and then the t highest-degree
    vertices form a clique.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    t = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            t = i
    if sum(degs[:t]) != t * (t - 1) + sum(degs[t:]):
        return None
    clique = set(order[:t])
    independent = set(order[t:])
    # I is independent, so at most one I-vertex can see all of K.
    for v in sorted(independent):
        if clique <= g.adjacency[v]:
            clique.add(v)
            independent.discard(v)
            break
    return SplitPartition(frozenset(clique), frozenset(independent))


def require_split(g: Graph) -> SplitPartition:
    sp = recognize_split(g)
    if sp is None:
        raise NotSplitError("graph is not split")
    return sp


def is_threshold(g: Graph) -> bool:
    """Split, and the independent side's neighbourhoods are nested."""
    sp = recognize_split(g)
    if sp is None:
        return False
    nbhds = sorted((g.adjacency[v] for v in sp.independent), key=len)
    return all(a <= b for a, b in zip(nbhds, nbhds[1:]))
