"""Polynomial-time rainbow colouring of split graphs with at least four colours.

A split graph with p pendant vertices needs at least p colours. When the
clique together with the pendants contains one of four small patterns
(G111, G400, G310, G2200) the explicit case colourings below use exactly p
colours; the only p = k obstruction is the triangle with two pendants on each
of two corners (G220), which is rescued by an extra common neighbour z of
those corners (G220z) and otherwise needs p + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rainbowsplit.errors import ContractError
from rainbowsplit.graph import (
    Edge,
    Graph,
    SplitPartition,
    is_connected,
    is_tree,
    norm_edge,
    pendant_set,
    require_split,
)
from rainbowsplit.rainbow import (
    EDGE_LIMIT,
    EdgeColouring,
    find_rainbow_colouring,
    rc_lower_bound,
    solve_rc2,
    verify_rainbow,
)
from rainbowsplit.errors import CapacityError

G111, G400, G310, G2200, G220, G220Z = "G111", "G400", "G310", "G2200", "G220", "G220z"
TREE, SMALL_PENDANT = "TREE", "SMALL_PENDANT"
LEMMA_CASES = (G111, G400, G310, G2200)
COLOURABLE_CASES = LEMMA_CASES + (G220Z,)

# colour of clique edges between parts (i, j), i <= j
_CLIQUE_COLOURS = {
    G111: {(0, 1): 2, (1, 2): 0, (0, 2): 1, (2, 2): 1},
    G400: {(0, 1): 3, (1, 2): 0, (0, 2): 1, (2, 2): 1},
    G310: {(0, 1): 3, (1, 2): 0, (0, 2): 1, (2, 2): 1},
    # c(K_i, K_{i+1}) = i+2, c(K_1, K_2) = 0, c(K_i, K_{i+2}) = i+3, all mod 4
    G2200: {(0, 1): 2, (1, 2): 0, (2, 3): 0, (0, 3): 1, (0, 2): 3, (1, 3): 0, (3, 3): 1},
    G220Z: {(0, 1): 0, (0, 2): 1, (1, 2): 3},
}

# G220z: colours on the two designated edges of an I' vertex, keyed by the parts it sees
_G220Z_IPRIME = {(0, 1): (2, 1), (0, 2): (2, 1), (1, 2): (2, 3)}


@dataclass(frozen=True)
class CliqueAnatomy:
    """Labelled decomposition of a split graph consumed by the case colourings.

    ``pendants[i]`` is the pendant y_i whose edge takes colour i; ``extra_pendants``
    are pendants outside the special subgraph, coloured afterwards with fresh
    colours. ``i_classes`` is keyed by the sorted pair of part indices.
    """

    graph: Graph
    partition: SplitPartition
    case_tag: str
    special: tuple[int, ...] = ()
    k_parts: tuple[frozenset[int], ...] = ()
    pendants: tuple[int, ...] = ()
    pendant_map: dict[int, int] = field(default_factory=dict)
    extra_pendants: frozenset[int] = frozenset()
    i_classes: dict[tuple[int, int], frozenset[int]] = field(default_factory=dict)
    chosen_neighbours: dict[int, tuple[int, int]] = field(default_factory=dict)
    z_witness: int | None = None

    def part_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.k_parts) for v in part}

    def check(self) -> None:
        g = self.graph
        K = self.partition.clique
        if self.k_parts:
            union = frozenset().union(*self.k_parts)
            if union != K or sum(len(p) for p in self.k_parts) != len(K):
                raise ContractError("k_parts do not partition the clique")
        for y, x in self.pendant_map.items():
            if g.adjacency[y] != frozenset({x}):
                raise ContractError(f"pendant map {y}->{x} inconsistent with graph")
        part = self.part_of()
        seen = set()
        for key, cls in self.i_classes.items():
            for v in cls:
                a, b = self.chosen_neighbours[v]
                if a == b or not (g.has_edge(v, a) and g.has_edge(v, b)):
                    raise ContractError(f"bad designated neighbours for {v}")
                if tuple(sorted((part[a], part[b]))) != key:
                    raise ContractError(f"{v} filed under {key} but sees parts {part[a]},{part[b]}")
                seen.add(v)
        i_prime = self.partition.independent - frozenset(self.pendant_map)
        if self.i_classes and seen != i_prime:
            raise ContractError("i_classes do not partition I'")

    def to_text(self) -> str:
        lines = [f"case {self.case_tag}"]
        lines.append("clique " + " ".join(map(str, sorted(self.partition.clique))))
        lines.append("independent " + " ".join(map(str, sorted(self.partition.independent))))
        for i, x in enumerate(self.special):
            lines.append(f"x{i} {x}")
        for i, part in enumerate(self.k_parts):
            lines.append(f"K{i} " + " ".join(map(str, sorted(part))))
        for i, y in enumerate(self.pendants):
            lines.append(f"y{i} {y} on {self.pendant_map[y]}")
        if self.extra_pendants:
            lines.append("extra-pendants " + " ".join(map(str, sorted(self.extra_pendants))))
        for (i, j), cls in sorted(self.i_classes.items()):
            if cls:
                lines.append(f"I{i},{j} " + " ".join(map(str, sorted(cls))))
        if self.z_witness is not None:
            lines.append(f"z {self.z_witness}")
        return "\n".join(lines) + "\n"


def _pendants_by_anchor(g: Graph, sp: SplitPartition) -> tuple[dict[int, int], dict[int, list[int]]]:
    pen = pendant_set(g)
    pmap = {}
    by_anchor: dict[int, list[int]] = {}
    for y in sorted(pen):
        (x,) = g.adjacency[y]
        pmap[y] = x
        by_anchor.setdefault(x, []).append(y)
    return pmap, by_anchor


def classify(g: Graph, sp: SplitPartition | None = None) -> str:
    """Case tag of a connected split graph (see build_anatomy)."""
    return build_anatomy(g, sp).case_tag


def build_anatomy(g: Graph, sp: SplitPartition | None = None, k: int | None = None) -> CliqueAnatomy:
    if not is_connected(g):
        raise ContractError("graph must be connected")
    if sp is None:
        sp = require_split(g)
    else:
        sp.check(g)
    if is_tree(g):
        return CliqueAnatomy(g, sp, TREE)
    K = sorted(sp.clique)
    pmap, by_anchor = _pendants_by_anchor(g, sp)
    p = len(pmap)
    if k is not None and p != k:
        raise ContractError(f"pendant count {p} differs from k={k}")
    if not set(pmap) <= sp.independent:
        raise ContractError("pendant vertex inside the clique")
    anchors = sorted(by_anchor, key=lambda x: (-len(by_anchor[x]), x))

    if len(anchors) >= 3:
        x0, x1, x2 = sorted(anchors)[:3]
        tag = G111
        special = (x0, x1, x2)
        chosen_y = (by_anchor[x0][0], by_anchor[x1][0], by_anchor[x2][0])
    elif p >= 4 and len(anchors) == 1:
        tag = G400
        x0 = anchors[0]
        x1 = next(v for v in K if v != x0)
        special = (x0, x1)
        chosen_y = tuple(by_anchor[x0][:4])
    elif p >= 4 and len(by_anchor[anchors[0]]) >= 3:
        tag = G310
        x0, x1 = anchors
        special = (x0, x1)
        a = by_anchor[x0]
        chosen_y = (a[0], a[1], by_anchor[x1][0], a[2])
    elif p >= 4:
        # distribution (2, 2)
        x0, x1 = sorted(anchors)
        if len(K) >= 4:
            tag = G2200
            x2 = next(v for v in K if v not in (x0, x1))
            special = (x0, x1, x2)
            a, b = by_anchor[x0], by_anchor[x1]
            chosen_y = (a[0], b[0], a[1], b[1])
        else:
            x2 = next(v for v in K if v not in (x0, x1))
            special = (x0, x1, x2)
            a, b = by_anchor[x0], by_anchor[x1]
            chosen_y = (a[0], a[1], b[0], b[1])
            common = sorted(
                v for v in sp.independent - set(pmap) if {x0, x1} <= g.adjacency[v]
            )
            tag = G220Z if common else G220
    else:
        return CliqueAnatomy(g, sp, SMALL_PENDANT, pendant_map=pmap)

    if tag in (G2200,):
        x0, x1, x2 = special
        k_parts = (
            frozenset({x0}),
            frozenset({x1}),
            frozenset({x2}),
            frozenset(K) - {x0, x1, x2},
        )
    elif tag in (G220, G220Z):
        k_parts = tuple(frozenset({x}) for x in special)
    else:
        x0, x1 = special[:2]
        k_parts = (frozenset({x0}), frozenset({x1}), frozenset(K) - {x0, x1})

    part = {v: i for i, P in enumerate(k_parts) for v in P}
    chosen: dict[int, tuple[int, int]] = {}
    classes: dict[tuple[int, int], set[int]] = {}
    for v in sorted(sp.independent - set(pmap)):
        nb = sorted(g.adjacency[v])
        if len(nb) < 2:
            raise ContractError(f"I' vertex {v} has fewer than two neighbours")
        a, b = nb[0], nb[1]
        chosen[v] = (a, b)
        key = tuple(sorted((part[a], part[b])))
        classes.setdefault(key, set()).add(v)

    z = None
    if tag == G220Z:
        z = min(classes.get((0, 1), ()))
    anat = CliqueAnatomy(
        graph=g,
        partition=sp,
        case_tag=tag,
        special=special,
        k_parts=k_parts,
        pendants=chosen_y,
        pendant_map=pmap,
        extra_pendants=frozenset(pmap) - set(chosen_y),
        i_classes={key: frozenset(vs) for key, vs in classes.items()},
        chosen_neighbours=chosen,
        z_witness=z,
    )
    anat.check()
    return anat


def lemma_case(g: Graph) -> str | None:
    """Which special subgraph (with its pendants among pen(g)) g contains, if any."""
    if not is_connected(g) or is_tree(g):
        return None
    sp = require_split(g)
    tag = build_anatomy(g, sp).case_tag
    return tag if tag in LEMMA_CASES else None


def colour_special(anat: CliqueAnatomy) -> EdgeColouring:
    """Case colouring of G - P' (edges at extra pendants are left out).

    Uses 3 colours for G111 and 4 for the other cases.
    """
    tag = anat.case_tag
    if tag not in COLOURABLE_CASES:
        raise ContractError(f"no special colouring for case {tag}")
    g = anat.graph
    part = anat.part_of()
    table = _CLIQUE_COLOURS[tag]
    last = len(anat.k_parts) - 1
    k = 3 if tag == G111 else 4
    col: dict[Edge, int] = {}
    K = sorted(anat.partition.clique)
    for i, u in enumerate(K):
        for v in K[i + 1:]:
            key = tuple(sorted((part[u], part[v])))
            col[norm_edge(u, v)] = table[key]
    for i, y in enumerate(anat.pendants):
        col[norm_edge(y, anat.pendant_map[y])] = i
    for v, (a, b) in anat.chosen_neighbours.items():
        pa, pb = part[a], part[b]
        if tag == G220Z:
            key = tuple(sorted((pa, pb)))
            ca, cb = _G220Z_IPRIME[key]
            if pa > pb:
                ca, cb = cb, ca
        elif pa == pb == last:
            ca, cb = 0, last
        else:
            ca, cb = pa, pb
        col[norm_edge(v, a)] = ca
        col[norm_edge(v, b)] = cb
        for w in g.adjacency[v] - {a, b}:
            col[norm_edge(v, w)] = 0
    return EdgeColouring(k, col)


def extend_pendants(g: Graph, base: EdgeColouring, extra: frozenset[int] | set[int]) -> EdgeColouring:
    """Give each edge at an extra pendant a fresh colour of its own."""
    col = dict(base.colour_of)
    k = base.k
    for y in sorted(extra):
        (x,) = g.adjacency[y]
        col[norm_edge(x, y)] = k
        k += 1
    return EdgeColouring(k, col)


def _distinct_colouring(g: Graph) -> EdgeColouring:
    return EdgeColouring(g.m, {e: i for i, e in enumerate(g.edge_list)})


def decide_rc_at_most_k(g: Graph, k: int) -> bool:
    if k < 4:
        raise ContractError("k < 4 is the NP-hard regime; use the exact solvers")
    if not is_connected(g):
        raise ContractError("graph must be connected")
    sp = require_split(g)
    if is_tree(g):
        return g.m <= k
    p = len(pendant_set(g))
    if p > k:
        return False
    if p < k:
        return True
    return build_anatomy(g, sp).case_tag != G220


def dummy_anchors(g: Graph, sp: SplitPartition, count: int) -> list[int]:
    """Clique vertices receiving ``count`` dummy pendants.

    New anchors are spread until three clique vertices carry pendants; any
    remainder goes on the smallest anchor.
    """
    _, by_anchor = _pendants_by_anchor(g, sp)
    carrying = set(by_anchor)
    free = [v for v in sorted(sp.clique) if v not in carrying]
    out = []
    while count and len(carrying) < 3 and free:
        v = free.pop(0)
        out.append(v)
        carrying.add(v)
        count -= 1
    if count:
        out.extend([min(carrying)] * count)
    return out


def colour_with_k(g: Graph, k: int, verify: bool = True) -> EdgeColouring:
    """A rainbow colouring of split graph g with at most k colours.

    k >= 4, or k == 3 when g itself is a G111 instance with three pendants.
    """
    if not is_connected(g):
        raise ContractError("graph must be connected")
    sp = require_split(g)
    if is_tree(g):
        if g.m > k:
            raise ContractError(f"tree with {g.m} edges needs {g.m} colours")
        return _distinct_colouring(g)
    p = len(pendant_set(g))
    if p > k:
        raise ContractError(f"{p} pendants need more than {k} colours")
    if k < 4 and not (k == 3 and p == 3 and build_anatomy(g, sp).case_tag == G111):
        raise ContractError("k < 4 is the NP-hard regime; use the exact solvers")
    if p < k:
        augmented = g.add_pendants(dummy_anchors(g, sp, k - p))
        # pendants are never interior to a path, so dropping the dummies keeps every other pair served
        col = colour_with_k(augmented, k, verify=False).restrict(g)
    else:
        anat = build_anatomy(g, sp)
        if anat.case_tag == G220:
            raise ContractError("G220 without a z-witness needs p + 1 colours")
        col = extend_pendants(g, colour_special(anat), anat.extra_pendants)
    col = EdgeColouring(k, dict(col.colour_of))
    if verify and not verify_rainbow(g, col, mask_budget=max(20, k)).connected:
        raise AssertionError(f"case colouring failed to rainbow-connect the graph (k={k})")
    return col


def rc_split(g: Graph, edge_limit: int = EDGE_LIMIT) -> tuple[int, EdgeColouring]:
    """rc(g) and a witness for a connected split graph.

    Polynomial once p >= 4 (or a three-pendant G111); otherwise the answer may
    be 2 or 3 and is settled by exponential probes gated by ``edge_limit``.
    """
    if not is_connected(g):
        raise ContractError("graph must be connected")
    sp = require_split(g)
    if g.is_complete():
        return 1, EdgeColouring(1, {e: 0 for e in g.edges})
    if is_tree(g):
        return g.m, _distinct_colouring(g)
    anat = build_anatomy(g, sp)
    p = len(anat.pendant_map)
    if p >= 4:
        k = p + 1 if anat.case_tag == G220 else p
        return k, colour_with_k(g, k)
    if p == 3 and anat.case_tag == G111:
        return 3, colour_with_k(g, 3)
    if g.m > edge_limit:
        raise CapacityError(
            f"rc <= 3 probes on {g.m} edges exceed the edge limit of {edge_limit}"
        )
    lb = rc_lower_bound(g)
    if lb <= 2:
        col = solve_rc2(g)
        if col is not None:
            return 2, col
    if lb <= 3:
        col = find_rainbow_colouring(g, 3, edge_limit)
        if col is not None:
            return 3, col
    return 4, colour_with_k(g, 4)
