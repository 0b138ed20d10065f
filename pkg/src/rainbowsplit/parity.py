"""Backtracking over disjunctions of "x_a != x_b" literals on boolean variables.

Three problems in this package reduce to this shape: 2-colour rainbow
connection (a non-adjacent pair needs a 2-path whose edges differ), biclique
cover by bipartitioning (an edge needs a set whose bipartition separates its
endpoints), and bipartite rainbow colouring. Relations between variables are
kept in a union-find with parity, so assignments are explored only up to
flipping a whole class.
"""

from __future__ import annotations

from collections.abc import Sequence

from rainbowsplit.errors import CapacityError

Literal = tuple[int, int]


class ParityUnionFind:
    """Union-find with parity and an undo trail (union by size, no path compression)."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n  # parity relative to parent
        self.size = [1] * n
        self.trail: list[tuple[int, int] | None] = []

    def find(self, a: int) -> tuple[int, int]:
        p = 0
        while self.parent[a] != a:
            p ^= self.parity[a]
            a = self.parent[a]
        return a, p

    def relation(self, a: int, b: int) -> int | None:
        """1 if x_a != x_b is forced, 0 if x_a == x_b is forced, None if free."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra != rb:
            return None
        return pa ^ pb

    def union(self, a: int, b: int, diff: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            self.trail.append(None)
            return (pa ^ pb) == diff
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ diff
        self.size[ra] += self.size[rb]
        self.trail.append((ra, rb))
        return True

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry is None:
                continue
            ra, rb = entry
            self.parent[rb] = rb
            self.parity[rb] = 0
            self.size[ra] -= self.size[rb]

    def values(self) -> list[int]:
        return [self.find(a)[1] for a in range(len(self.parent))]


class ParitySolver:
    """Find x in {0,1}^n satisfying every clause, each an OR of x_a != x_b literals.

    ``budget`` bounds the number of search nodes; exceeding it raises
    CapacityError rather than answering.
    """

    def __init__(self, n_vars: int, clauses: Sequence[Sequence[Literal]], budget: int = 10**7):
        self.n_vars = n_vars
        self.clauses = [tuple(c) for c in clauses]
        self.budget = budget
        self.nodes = 0
        self.uf = ParityUnionFind(n_vars)

    def _status(self, clause) -> tuple[bool, list[Literal]]:
        """(satisfied, still-open literals)."""
        open_lits = []
        for a, b in clause:
            r = self.uf.relation(a, b)
            if r == 1:
                return True, []
            if r is None:
                open_lits.append((a, b))
        return False, open_lits

    def _propagate(self) -> tuple[bool, list[Literal] | None]:
        """Unit propagation to fixpoint.

        Returns (consistent, branching clause); the branching clause is the
        open clause with fewest open literals, or None when all are satisfied.
        """
        while True:
            best = None
            changed = False
            for clause in self.clauses:
                sat, open_lits = self._status(clause)
                if sat:
                    continue
                if not open_lits:
                    return False, None
                if len(open_lits) == 1:
                    a, b = open_lits[0]
                    self.uf.union(a, b, 1)
                    changed = True
                    continue
                if best is None or len(open_lits) < len(best):
                    best = open_lits
            if not changed:
                return True, best

    def solve(self) -> list[int] | None:
        if any(len(c) == 0 for c in self.clauses):
            return None
        return self.uf.values() if self._search() else None

    def _search(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise CapacityError(f"search exceeded budget of {self.budget} nodes")
        mark = self.uf.mark()
        ok, branch = self._propagate()
        if not ok:
            self.uf.undo(mark)
            return False
        if branch is None:
            return True
        a, b = branch[0]
        for diff in (1, 0):
            inner = self.uf.mark()
            self.uf.union(a, b, diff)
            if self._search():
                return True
            self.uf.undo(inner)
        self.uf.undo(mark)
        return False


def solve_parity(n_vars: int, clauses, budget: int = 10**7) -> list[int] | None:
    return ParitySolver(n_vars, clauses, budget).solve()
