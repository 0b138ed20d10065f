"""Text formats for every instance and certificate kind, plus DOT export.

All formats are line-oriented, ignore blank lines and ``#`` comments (``c``
lines in DIMACS), and report problems with the offending line number.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from rainbowsplit.bcc import BccInstance, Bipartitioning
from rainbowsplit.equivalence import BipartiteInstance, MatrixInstance, PackingInstance
from rainbowsplit.errors import ContractError, FormatError
from rainbowsplit.graph import Graph, norm_edge
from rainbowsplit.rainbow import EdgeColouring
from rainbowsplit.reduction import CnfFormula, SatAssignment

PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
)


def _lines(text: str, comment: str = "#"):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(comment, 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno, source, count=None):
    if count is not None and len(tokens) != count:
        raise FormatError(f"expected {count} integers, got {len(tokens)}", lineno, source)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer token in {' '.join(tokens)!r}", lineno, source) from None


def _graph_from_lines(lines, source) -> tuple[Graph, list]:
    lines = list(lines)
    if not lines:
        raise FormatError("empty graph file: expected header 'n m'", None, source)
    lineno, tokens = lines[0]
    n, m = _ints(tokens, lineno, source, 2)
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count", lineno, source)
    if len(lines) - 1 < m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}", lineno, source)
    edges = set()
    for lineno, tokens in lines[1:m + 1]:
        u, v = _ints(tokens, lineno, source, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1}", lineno, source)
        if u == v:
            raise FormatError("self-loop", lineno, source)
        e = norm_edge(u, v)
        if e in edges:
            raise FormatError(f"duplicate edge {u} {v}", lineno, source)
        edges.add(e)
    return Graph(n, frozenset(edges)), lines[m + 1:]


def parse_graph(text: str, source: str | None = None) -> Graph:
    g, rest = _graph_from_lines(_lines(text), source)
    if rest:
        raise FormatError("trailing content after the edge list", rest[0][0], source)
    return g


def format_graph(g: Graph) -> str:
    return f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in g.edge_list)


def parse_colouring(text: str, g: Graph | None = None, source: str | None = None) -> EdgeColouring:
    col = {}
    for lineno, tokens in _lines(text):
        u, v, c = _ints(tokens, lineno, source, 3)
        if c < 0:
            raise FormatError("negative colour", lineno, source)
        if g is not None and not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
            raise FormatError(f"{u} {v} is not an edge of the graph", lineno, source)
        e = norm_edge(u, v)
        if e in col:
            raise FormatError(f"edge {u} {v} coloured twice", lineno, source)
        col[e] = c
    colouring = EdgeColouring(max(col.values(), default=-1) + 1, col)
    if g is not None:
        missing = set(g.edges) - set(col)
        if missing:
            raise FormatError(f"colouring is not total; missing {sorted(missing)[:5]}", None, source)
    return colouring


def format_colouring(c: EdgeColouring) -> str:
    return "".join(f"{u} {v} {c.colour_of[(u, v)]}\n" for u, v in sorted(c.colour_of))


def parse_bcc(text: str, source: str | None = None) -> BccInstance:
    g, rest = _graph_from_lines(_lines(text), source)
    family = []
    for lineno, tokens in rest:
        if tokens[0] != "set":
            raise FormatError(f"expected 'set v1 v2 ...', got {tokens[0]!r}", lineno, source)
        vs = _ints(tokens[1:], lineno, source)
        if not vs or any(not (0 <= v < g.n) for v in vs):
            raise FormatError("set must list vertices of the graph", lineno, source)
        family.append(frozenset(vs))
    try:
        return BccInstance(g, tuple(family))
    except ContractError as exc:
        raise FormatError(str(exc), None, source) from None


def format_bcc(inst: BccInstance) -> str:
    out = format_graph(inst.base)
    return out + "".join("set " + " ".join(map(str, sorted(t))) + "\n" for t in inst.family)


def parse_bipartitioning(text: str, inst: BccInstance | None = None, source: str | None = None) -> Bipartitioning:
    parts: dict[int, frozenset[int]] = {}
    for lineno, tokens in _lines(text):
        if tokens[0] != "X":
            raise FormatError(f"expected 'X <set-index> v1 ...', got {tokens[0]!r}", lineno, source)
        nums = _ints(tokens[1:], lineno, source)
        if not nums:
            raise FormatError("missing set index", lineno, source)
        if nums[0] in parts:
            raise FormatError(f"set {nums[0]} given twice", lineno, source)
        parts[nums[0]] = frozenset(nums[1:])
    size = len(inst.family) if inst is not None else max(parts, default=-1) + 1
    if any(i < 0 or i >= size for i in parts):
        raise FormatError(f"set index outside 0..{size - 1}", None, source)
    return Bipartitioning(tuple(parts.get(i, frozenset()) for i in range(size)))


def format_bipartitioning(x: Bipartitioning) -> str:
    return "".join(
        f"X {i}" + "".join(f" {v}" for v in sorted(xs)) + "\n" for i, xs in enumerate(x.x_of)
    )


def parse_dimacs(text: str, source: str | None = None) -> CnfFormula:
    n_vars = n_clauses = None
    clauses = []
    pending: list[int] = []
    pending_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            tokens = line.split()
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise FormatError("expected 'p cnf <vars> <clauses>'", lineno, source)
            n_vars, n_clauses = _ints(tokens[2:], lineno, source, 2)
            continue
        if n_vars is None:
            raise FormatError("clause before the 'p cnf' header", lineno, source)
        for lit in _ints(line.split(), lineno, source):
            if pending_line is None:
                pending_line = lineno
            if lit == 0:
                vs = [abs(l) for l in pending]
                if len(pending) != 3 or len(set(vs)) != 3:
                    raise FormatError(
                        f"clause {pending} must have exactly 3 literals on 3 distinct variables",
                        pending_line,
                        source,
                    )
                if max(vs) > n_vars:
                    raise FormatError(f"variable {max(vs)} exceeds declared {n_vars}", pending_line, source)
                clauses.append(tuple(pending))
                pending, pending_line = [], None
            else:
                pending.append(lit)
    if pending:
        raise FormatError("last clause is not terminated by 0", pending_line, source)
    if n_vars is None:
        raise FormatError("missing 'p cnf' header", None, source)
    if n_clauses != len(clauses):
        raise FormatError(f"header declares {n_clauses} clauses, found {len(clauses)}", None, source)
    return CnfFormula(n_vars, tuple(clauses))


def format_dimacs(phi: CnfFormula) -> str:
    out = f"p cnf {phi.n_vars} {phi.m}\n"
    return out + "".join(" ".join(map(str, c)) + " 0\n" for c in phi.clauses)


def parse_assignment(text: str, n_vars: int | None = None, source: str | None = None) -> SatAssignment:
    values: dict[int, bool] = {}
    for lineno, tokens in _lines(text, comment="c "):
        if tokens[0] == "v":
            tokens = tokens[1:]
        elif tokens[0] in ("s", "SAT", "SATISFIABLE"):
            continue
        for lit in _ints(tokens, lineno, source):
            if lit:
                values[abs(lit)] = lit > 0
    n = n_vars if n_vars is not None else max(values, default=0)
    missing = [i for i in range(1, n + 1) if i not in values]
    if missing:
        raise FormatError(f"assignment misses variables {missing[:5]}", None, source)
    return SatAssignment(tuple(values[i] for i in range(1, n + 1)))


def format_assignment(ev: SatAssignment) -> str:
    lits = [i if v else -i for i, v in enumerate(ev.values, start=1)]
    return "v " + " ".join(map(str, lits)) + " 0\n"


def parse_bipartite(text: str, source: str | None = None) -> BipartiteInstance:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty bipartite file: expected header 'nA nB'", None, source)
    n_a, n_b = _ints(lines[0][1], lines[0][0], source, 2)
    edges = set()
    for lineno, tokens in lines[1:]:
        a, b = _ints(tokens, lineno, source, 2)
        if not (0 <= a < n_a and 0 <= b < n_b):
            raise FormatError("edge endpoint outside its part", lineno, source)
        edges.add((a, b))
    return BipartiteInstance(n_a, n_b, frozenset(edges))


def format_bipartite(h: BipartiteInstance) -> str:
    return f"{h.n_a} {h.n_b}\n" + "".join(f"{a} {b}\n" for a, b in h.edge_list)


def parse_bipartite_colouring(text: str, h: BipartiteInstance | None = None, source: str | None = None):
    col = {}
    for lineno, tokens in _lines(text):
        a, b, c = _ints(tokens, lineno, source, 3)
        if c not in (0, 1):
            raise FormatError("bipartite colours are 0 (red) or 1 (blue)", lineno, source)
        if h is not None and (a, b) not in h.edges:
            raise FormatError(f"{a} {b} is not an edge", lineno, source)
        col[(a, b)] = c
    if h is not None and set(col) != set(h.edges):
        raise FormatError("colouring is not total over the bipartite edges", None, source)
    return col


def format_bipartite_colouring(col) -> str:
    return "".join(f"{a} {b} {c}\n" for (a, b), c in sorted(col.items()))


def parse_matrix(text: str, source: str | None = None) -> MatrixInstance:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty matrix file: expected header 'm n'", None, source)
    rows, cols = _ints(lines[0][1], lines[0][0], source, 2)
    free = set()
    for lineno, tokens in lines[1:]:
        i, j = _ints(tokens, lineno, source, 2)
        if not (0 <= i < rows and 0 <= j < cols):
            raise FormatError("location outside the matrix", lineno, source)
        free.add((i, j))
    return MatrixInstance(rows, cols, frozenset(free))


def format_matrix(inst: MatrixInstance) -> str:
    return f"{inst.rows} {inst.cols}\n" + "".join(f"{i} {j}\n" for i, j in sorted(inst.free))


def _fmt_frac(x: Fraction) -> str:
    return {Fraction(0): "0", Fraction(1, 2): "0.5", Fraction(1): "1"}.get(x, str(x))


def _parse_frac(token: str, lineno, source) -> Fraction:
    try:
        return Fraction(token)
    except ValueError:
        raise FormatError(f"bad number {token!r}", lineno, source) from None


def parse_packing(text: str, source: str | None = None) -> PackingInstance:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty packing file: expected header 'n'", None, source)
    (dim,) = _ints(lines[0][1], lines[0][0], source, 1)
    boxes = []
    for lineno, tokens in lines[1:]:
        box = tuple(_parse_frac(t, lineno, source) for t in tokens)
        if len(box) != dim or any(s not in (Fraction(1, 2), Fraction(1)) for s in box):
            raise FormatError(f"box must have {dim} sides of 1 or 0.5", lineno, source)
        boxes.append(box)
    return PackingInstance(dim, tuple(boxes))


def format_packing(inst: PackingInstance) -> str:
    return f"{inst.dim}\n" + "".join(" ".join(map(_fmt_frac, box)) + "\n" for box in inst.boxes)


def parse_placements(text: str, source: str | None = None) -> list[tuple[Fraction, ...]]:
    return [tuple(_parse_frac(t, lineno, source) for t in tokens) for lineno, tokens in _lines(text)]


def format_placements(placements) -> str:
    return "".join(" ".join(map(_fmt_frac, pos)) + "\n" for pos in placements)


def export_dot(g: Graph, colouring: EdgeColouring | None = None, name: str = "G") -> str:
    if colouring is not None:
        colouring.check(g)
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    for u, v in g.edge_list:
        if colouring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = colouring.colour_of[(u, v)]
            lines.append(f'  {u} -- {v} [color="{PALETTE[c % len(PALETTE)]}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Graph:
    """Read back the subset of DOT that export_dot writes."""
    vertices, edges = set(), []
    for raw in text.splitlines():
        line = raw.strip().rstrip(";")
        if not line or line.startswith("graph") or line == "}":
            continue
        body = line.split("[", 1)[0].strip()
        if "--" in body:
            u, v = (int(t) for t in body.split("--"))
            edges.append((u, v))
        else:
            vertices.add(int(body))
    n = max(vertices | {x for e in edges for x in e}, default=-1) + 1
    return Graph.from_edges(n, edges)


def read_text(path) -> str:
    return Path(path).read_text()


def write_text(path, text: str) -> None:
    Path(path).write_text(text)
