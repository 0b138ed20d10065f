"""The reduction chain exact-3SAT -> BCC -> RC(G', 2) on split graphs, with
certificates lifted in both directions across each step."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from rainbowsplit.bcc import BccInstance, Bipartitioning, verify_bipartition
from rainbowsplit.errors import ContractError
from rainbowsplit.graph import Edge, Graph, norm_edge
from rainbowsplit.rainbow import EdgeColouring, verify_rainbow

RED, BLUE = 0, 1


@dataclass(frozen=True)
class CnfFormula:
    """Exact-3-CNF: every clause has three literals on three distinct variables.

    Literals use DIMACS signs over variables 1..n_vars.
    """

    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for j, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise ContractError(f"clause {j} has {len(clause)} literals, expected 3")
            vs = [abs(l) for l in clause]
            if 0 in vs or max(vs) > self.n_vars:
                raise ContractError(f"clause {j} uses a variable outside 1..{self.n_vars}")
            if len(set(vs)) != 3:
                raise ContractError(f"clause {j} repeats a variable: {clause}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def var(self, j: int, k: int) -> int:
        """Variable of the k-th literal of clause j (both 0-based); 1-based result."""
        return abs(self.clauses[j][k])

    def literal_true(self, j: int, k: int, ev: SatAssignment) -> bool:
        lit = self.clauses[j][k]
        return ev.value(abs(lit)) == (lit > 0)

    def satisfied_by(self, ev: SatAssignment) -> bool:
        return all(any(self.literal_true(j, k, ev) for k in range(3)) for j in range(self.m))

    def brute_force(self) -> SatAssignment | None:
        for bits in product((False, True), repeat=self.n_vars):
            ev = SatAssignment(bits)
            if self.satisfied_by(ev):
                return ev
        return None


@dataclass(frozen=True)
class SatAssignment:
    values: tuple[bool, ...]  # values[i - 1] is variable i

    def value(self, i: int) -> bool:
        return self.values[i - 1]


@dataclass(frozen=True)
class SatGadgetLabels:
    a: tuple[int, ...]
    f: tuple[int, ...]
    f1: tuple[int, ...]
    f2: tuple[int, ...]
    t: tuple[int, ...]
    t1: tuple[int, ...]
    t2: tuple[int, ...]
    A: tuple[int, ...]
    F: tuple[int, ...]
    V1: tuple[int, ...]  # family index of V_i^1
    V2: tuple[int, ...]
    C: tuple[tuple[int, int, int], ...]  # family index of C_j^k

    _VERTEX_KINDS = ("a", "f", "f1", "f2", "t", "t1", "t2")

    def to_text(self) -> str:
        lines = []
        for kind in self._VERTEX_KINDS:
            for i, vid in enumerate(getattr(self, kind), start=1):
                lines.append(f"{kind} {i} -> {vid}")
        for j, (A, F) in enumerate(zip(self.A, self.F), start=1):
            lines.append(f"A {j} -> {A}")
            lines.append(f"F {j} -> {F}")
        for i, (s1, s2) in enumerate(zip(self.V1, self.V2), start=1):
            lines.append(f"V1 {i} -> {s1}")
            lines.append(f"V2 {i} -> {s2}")
        for j, cs in enumerate(self.C, start=1):
            for k, s in enumerate(cs, start=1):
                lines.append(f"C {j} {k} -> {s}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SatGadgetLabels:
        table: dict[str, dict[tuple[int, ...], int]] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            lhs, sep, rhs = line.partition("->")
            parts = lhs.split()
            if not sep or len(parts) < 2:
                raise ContractError(f"line {lineno}: expected '<kind> <index...> -> <id>'")
            table.setdefault(parts[0], {})[tuple(int(p) for p in parts[1:])] = int(rhs)

        def seq(kind):
            d = table.get(kind, {})
            return tuple(d[(i,)] for i in range(1, len(d) + 1))

        cdict = table.get("C", {})
        m = len(table.get("A", {}))
        C = tuple(tuple(cdict[(j, k)] for k in (1, 2, 3)) for j in range(1, m + 1))
        return cls(*(seq(k) for k in cls._VERTEX_KINDS), seq("A"), seq("F"), seq("V1"), seq("V2"), C)


def sat_to_bcc(phi: CnfFormula) -> tuple[BccInstance, SatGadgetLabels]:
    """Seven vertices and eight edges per variable, two vertices and ten edges
    per clause; family: V_i^1, V_i^2 per variable, C_j^1..C_j^3 per clause."""
    n, m = phi.n_vars, phi.m
    block = {kind: tuple(7 * i + off for i in range(n)) for off, kind in enumerate(SatGadgetLabels._VERTEX_KINDS)}
    A = tuple(7 * n + 2 * j for j in range(m))
    F = tuple(7 * n + 2 * j + 1 for j in range(m))
    a, f, f1, f2, t, t1, t2 = (block[k] for k in SatGadgetLabels._VERTEX_KINDS)
    edges = []
    for i in range(n):
        edges += [
            (a[i], f[i]), (a[i], t[i]),
            (f[i], t1[i]), (f[i], t2[i]),
            (t[i], f1[i]), (t[i], f2[i]),
            (f1[i], t1[i]), (f2[i], t2[i]),
        ]
    for j in range(m):
        edges.append((A[j], F[j]))
        for k in range(3):
            i = phi.var(j, k) - 1
            edges += [(A[j], a[i]), (A[j], t[i]), (F[j], t[i])]
    family = []
    V1, V2 = [], []
    for i in range(n):
        pos = {A[j] for j in range(m) if (i + 1) in phi.clauses[j]}
        neg = {A[j] for j in range(m) if -(i + 1) in phi.clauses[j]}
        V1.append(len(family))
        family.append(frozenset({a[i], f[i], f1[i], t[i], t1[i]} | pos))
        V2.append(len(family))
        family.append(frozenset({a[i], f[i], f2[i], t[i], t2[i]} | neg))
    C = []
    for j in range(m):
        idx = []
        for k in range(3):
            idx.append(len(family))
            family.append(frozenset({t[phi.var(j, k) - 1], A[j], F[j]}))
        C.append(tuple(idx))
    graph = Graph.from_edges(7 * n + 2 * m, edges)
    labels = SatGadgetLabels(a, f, f1, f2, t, t1, t2, A, F, tuple(V1), tuple(V2), tuple(C))
    return BccInstance(graph, tuple(family)), labels


def assignment_to_bipartition(phi: CnfFormula, labels: SatGadgetLabels, ev: SatAssignment) -> Bipartitioning:
    L = labels
    x_of: dict[int, frozenset[int]] = {}
    for i in range(phi.n_vars):
        if ev.values[i]:
            x_of[L.V1[i]] = frozenset({L.a[i], L.t[i], L.t1[i]})
            x_of[L.V2[i]] = frozenset({L.a[i], L.f[i], L.f2[i]})
        else:
            x_of[L.V1[i]] = frozenset({L.a[i], L.f[i], L.f1[i]})
            x_of[L.V2[i]] = frozenset({L.a[i], L.t[i], L.t2[i]})
    for j in range(phi.m):
        for k in range(3):
            if phi.literal_true(j, k, ev):
                x_of[L.C[j][k]] = frozenset({L.A[j], L.t[phi.var(j, k) - 1]})
            else:
                x_of[L.C[j][k]] = frozenset({L.A[j], L.F[j]})
    return Bipartitioning(tuple(x_of[s] for s in range(len(x_of))))


def normalize_sat_bipartition(inst: BccInstance, labels: SatGadgetLabels, x: Bipartitioning) -> Bipartitioning:
    """Complement X(T) where needed so a_i is in X(V_i^l) and A_j in X(C_j^k). Idempotent."""
    anchor = {}
    for i, (s1, s2) in enumerate(zip(labels.V1, labels.V2)):
        anchor[s1] = anchor[s2] = labels.a[i]
    for j, cs in enumerate(labels.C):
        for s in cs:
            anchor[s] = labels.A[j]
    out = []
    for s, (t, xs) in enumerate(zip(inst.family, x.x_of)):
        out.append(xs if anchor[s] in xs else t - xs)
    return Bipartitioning(tuple(out))


def bipartition_to_assignment(
    inst: BccInstance, labels: SatGadgetLabels, x: Bipartitioning, phi: CnfFormula | None = None
) -> SatAssignment:
    """Read v_i = (t_i in X(V_i^1)) after normalisation; checks phi when given."""
    ok, uncovered = verify_bipartition(inst, x)
    if not ok:
        raise ContractError(f"bipartitioning leaves edges uncovered: {uncovered[:5]}")
    x = normalize_sat_bipartition(inst, labels, x)
    ev = SatAssignment(tuple(labels.t[i] in x.x_of[s] for i, s in enumerate(labels.V1)))
    if phi is not None and not phi.satisfied_by(ev):
        raise AssertionError("lifted assignment does not satisfy the formula")
    return ev


@dataclass(frozen=True)
class Rc2GadgetLabels:
    u: tuple[int, ...]  # B' side, one per base vertex
    u_prime: tuple[int, ...]  # A' side, one per base vertex
    s: tuple[int, ...]  # one per family set
    x: dict[Edge, int]  # one per base non-edge

    @property
    def clique(self) -> frozenset[int]:
        return frozenset(self.u_prime) | frozenset(self.s) | frozenset(self.x.values())

    @property
    def independent(self) -> frozenset[int]:
        return frozenset(self.u)

    def to_text(self) -> str:
        lines = [f"u {v} -> {i}" for v, i in enumerate(self.u)]
        lines += [f"u' {v} -> {i}" for v, i in enumerate(self.u_prime)]
        lines += [f"s {t} -> {i}" for t, i in enumerate(self.s)]
        lines += [f"x {v} {w} -> {i}" for (v, w), i in sorted(self.x.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Rc2GadgetLabels:
        u, up, s, x = {}, {}, {}, {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            lhs, sep, rhs = line.partition("->")
            parts = lhs.split()
            if not sep or not parts:
                raise ContractError(f"line {lineno}: expected '<kind> <index...> -> <id>'")
            key = tuple(int(p) for p in parts[1:])
            target = {"u": u, "u'": up, "s": s, "x": x}.get(parts[0])
            if target is None:
                raise ContractError(f"line {lineno}: unknown label kind {parts[0]!r}")
            target[key] = int(rhs)
        return cls(
            tuple(u[(i,)] for i in range(len(u))),
            tuple(up[(i,)] for i in range(len(up))),
            tuple(s[(i,)] for i in range(len(s))),
            {norm_edge(*k): v for k, v in x.items()},
        )


def bcc_to_rc2(inst: BccInstance) -> tuple[Graph, Rc2GadgetLabels]:
    """Split graph G' with clique A' = {u'_v} + {s_T} + {x_e : e a base non-edge}
    and independent set B' = {u_v}."""
    base = inst.base
    nv = base.n
    u = tuple(range(nv))
    u_prime = tuple(range(nv, 2 * nv))
    s = tuple(range(2 * nv, 2 * nv + len(inst.family)))
    non_edges = [e for e in combinations(range(nv), 2) if not base.has_edge(*e)]
    first_x = 2 * nv + len(inst.family)
    x = {e: first_x + i for i, e in enumerate(non_edges)}
    clique = list(u_prime) + list(s) + list(x.values())
    edges = list(combinations(clique, 2))
    edges += [(u[v], u_prime[v]) for v in range(nv)]
    for ti, t in enumerate(inst.family):
        edges += [(u[v], s[ti]) for v in t]
    for (v, w), xe in x.items():
        edges += [(u[v], xe), (u[w], xe)]
    return Graph.from_edges(first_x + len(non_edges), edges), Rc2GadgetLabels(u, u_prime, s, x)


def bipartition_to_colouring(inst: BccInstance, labels: Rc2GadgetLabels, x: Bipartitioning) -> EdgeColouring:
    ok, uncovered = verify_bipartition(inst, x)
    if not ok:
        raise ContractError(f"bipartitioning leaves edges uncovered: {uncovered[:5]}")
    col: dict[Edge, int] = {}
    for e in combinations(sorted(labels.clique), 2):
        col[e] = BLUE
    for v in range(inst.base.n):
        col[norm_edge(labels.u[v], labels.u_prime[v])] = RED
    for ti, t in enumerate(inst.family):
        for v in t:
            col[norm_edge(labels.u[v], labels.s[ti])] = BLUE if v in x.x_of[ti] else RED
    for (v, w), xe in labels.x.items():
        # v < w: the lower endpoint's gadget edge is red
        col[norm_edge(labels.u[v], xe)] = RED
        col[norm_edge(labels.u[w], xe)] = BLUE
    return EdgeColouring(2, col)


def colouring_to_bipartition(
    inst: BccInstance, labels: Rc2GadgetLabels, col: EdgeColouring, g_prime: Graph | None = None
) -> Bipartitioning:
    """X(T) = {v in T : u_v s_T is blue}; X(T) = T is complemented to the empty set."""
    if g_prime is None:
        g_prime, _ = bcc_to_rc2(inst)
    if col.k > 2 or not verify_rainbow(g_prime, col).connected:
        raise ContractError("colouring is not a rainbow 2-colouring of G'")
    x_of = []
    for ti, t in enumerate(inst.family):
        xs = frozenset(v for v in t if col[(labels.u[v], labels.s[ti])] == BLUE)
        x_of.append(frozenset() if xs == t else xs)
    return Bipartitioning(tuple(x_of))
