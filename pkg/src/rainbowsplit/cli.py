"""Batch command-line front end.

Exit codes: 0 yes/success, 1 no, 2 error or capacity limit reached.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from rainbowsplit import formats as fmt
from rainbowsplit.bcc import BCC_BUDGET, solve_bcc, verify_bipartition
from rainbowsplit.equivalence import (
    bipartite_to_matrix,
    bipartite_to_packing,
    check_bipartite_colouring,
    colouring_to_packing,
    decide_bipartite_rainbow,
    rc2_core_to_bipartite,
    verify_packing,
)
from rainbowsplit.errors import CapacityError, ContractError, FormatError
from rainbowsplit.generators import random_3cnf, random_split, random_threshold, special_graph
from rainbowsplit.graph import is_connected, is_threshold, pendant_set, recognize_split
from rainbowsplit.rainbow import (
    EDGE_LIMIT,
    MASK_BUDGET,
    find_rainbow_colouring,
    rc_exact,
    rc_lower_bound,
    solve_rc2,
    verify_rainbow,
)
from rainbowsplit.reduction import (
    CnfFormula,
    Rc2GadgetLabels,
    SatGadgetLabels,
    assignment_to_bipartition,
    bcc_to_rc2,
    bipartition_to_assignment,
    bipartition_to_colouring,
    colouring_to_bipartition,
    sat_to_bcc,
)
from rainbowsplit.split_rc import build_anatomy, colour_with_k, decide_rc_at_most_k, rc_split

YES, NO, ERROR = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    k: int | None = None
    edge_limit: int = EDGE_LIMIT
    mask_budget: int = MASK_BUDGET
    solver_budget: int = BCC_BUDGET
    seed: int = 0

    def __post_init__(self):
        for name in ("edge_limit", "mask_budget", "solver_budget"):
            if getattr(self, name) <= 0:
                raise ContractError(f"{name.replace('_', '-')} must be positive")


def _emit(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        fmt.write_text(path, text)


def _load(path: str, parser, *args):
    return parser(fmt.read_text(path), *args, source=path) if args else parser(fmt.read_text(path), source=path)


def cmd_recognize(cfg: RunConfig, args) -> int:
    g = _load(cfg.inputs[0], fmt.parse_graph)
    sp = recognize_split(g)
    print(f"vertices {g.n} edges {g.m} connected {'yes' if is_connected(g) else 'no'}")
    print(f"pendants {len(pendant_set(g))}")
    if sp is None:
        print("split no")
        print("threshold no")
        return NO
    print("split yes")
    print(f"threshold {'yes' if is_threshold(g) else 'no'}")
    print("clique " + " ".join(map(str, sorted(sp.clique))))
    print("independent " + " ".join(map(str, sorted(sp.independent))))
    if args.anatomy and is_connected(g):
        sys.stdout.write(build_anatomy(g, sp).to_text())
    return YES


def cmd_rc(cfg: RunConfig, args) -> int:
    g = _load(cfg.inputs[0], fmt.parse_graph)
    if args.mode == "lower-bound":
        print(rc_lower_bound(g))
        return YES
    if args.mode == "exact":
        k, col = rc_exact(g, cfg.edge_limit, cfg.mask_budget)
    else:
        k, col = rc_split(g, cfg.edge_limit)
    if not verify_rainbow(g, col, max(cfg.mask_budget, col.k)).connected:
        raise AssertionError("witness failed verification")
    print(k)
    if cfg.output:
        fmt.write_text(cfg.output, fmt.format_colouring(col))
    return YES


def _decide(g, k: int, cfg: RunConfig):
    """(answer, colouring or None) using the polynomial route when it applies."""
    sp = recognize_split(g) if is_connected(g) else None
    if sp is not None and k >= 4:
        if not decide_rc_at_most_k(g, k):
            return False, None
        return True, colour_with_k(g, k)
    if not is_connected(g):
        raise ContractError("graph is disconnected; it has no rainbow colouring")
    if k <= 2 and g.m > cfg.edge_limit:
        raise CapacityError(f"{g.m} edges exceed the edge limit of {cfg.edge_limit}")
    if k == 1:
        return (True, find_rainbow_colouring(g, 1, cfg.edge_limit)) if g.is_complete() else (False, None)
    if k == 2:
        col = solve_rc2(g, cfg.solver_budget)
        return col is not None, col
    col = find_rainbow_colouring(g, k, cfg.edge_limit)
    return col is not None, col


def cmd_decide(cfg: RunConfig, args) -> int:
    g = _load(cfg.inputs[0], fmt.parse_graph)
    answer, col = _decide(g, cfg.k, cfg)
    print("yes" if answer else "no")
    if answer and cfg.output and col is not None:
        fmt.write_text(cfg.output, fmt.format_colouring(col))
    return YES if answer else NO


def cmd_verify(cfg: RunConfig, args) -> int:
    g = _load(cfg.inputs[0], fmt.parse_graph)
    col = fmt.parse_colouring(fmt.read_text(cfg.inputs[1]), g, source=cfg.inputs[1])
    report = verify_rainbow(g, col, max(cfg.mask_budget, col.k) if args.force_budget else cfg.mask_budget)
    text = report.to_text(with_paths=args.paths)
    _emit(cfg.output, text)
    return YES if report.connected else NO


def _sidecar(path: str) -> str:
    return path + ".labels"


def cmd_reduce(cfg: RunConfig, args) -> int:
    kind, src = args.kind, cfg.inputs[0]
    out = cfg.output
    if kind == "sat2bcc":
        phi = _load(src, fmt.parse_dimacs)
        inst, labels = sat_to_bcc(phi)
        _emit(out, fmt.format_bcc(inst))
        fmt.write_text(args.labels_out or _sidecar(out or "sat2bcc"), labels.to_text())
    elif kind == "bcc2rc2":
        inst = _load(src, fmt.parse_bcc)
        g, labels = bcc_to_rc2(inst)
        _emit(out, fmt.format_graph(g))
        fmt.write_text(args.labels_out or _sidecar(out or "bcc2rc2"), labels.to_text())
    elif kind == "rc2bipartite":
        g = _load(src, fmt.parse_graph)
        labels_path = args.labels or _sidecar(src)
        labels = Rc2GadgetLabels.from_text(fmt.read_text(labels_path))
        h, _, _ = rc2_core_to_bipartite(g, labels)
        _emit(out, fmt.format_bipartite(h))
    elif kind == "bip2matrix":
        h = _load(src, fmt.parse_bipartite)
        _emit(out, fmt.format_matrix(bipartite_to_matrix(h)))
    elif kind == "bip2packing":
        h = _load(src, fmt.parse_bipartite)
        _emit(out, fmt.format_packing(bipartite_to_packing(h)))
    return YES


def cmd_lift(cfg: RunConfig, args) -> int:
    kind = args.kind
    need = {
        "eval2X": ("cnf", "labels", "cert"),
        "X2eval": ("bcc", "labels", "cert"),
        "X2col": ("bcc", "labels", "cert"),
        "col2X": ("bcc", "labels", "cert"),
        "col2packing": ("bip", "cert"),
    }[kind]
    missing = [f"--{name}" for name in need if getattr(args, name) is None]
    if missing:
        raise ContractError(f"lift {kind} needs {' '.join(missing)}")
    if kind == "eval2X":
        phi = _load(args.cnf, fmt.parse_dimacs)
        labels = SatGadgetLabels.from_text(fmt.read_text(args.labels))
        ev = fmt.parse_assignment(fmt.read_text(args.cert), phi.n_vars, source=args.cert)
        if not phi.satisfied_by(ev):
            print("assignment does not satisfy the formula", file=sys.stderr)
            return NO
        _emit(cfg.output, fmt.format_bipartitioning(assignment_to_bipartition(phi, labels, ev)))
    elif kind == "X2eval":
        inst = _load(args.bcc, fmt.parse_bcc)
        labels = SatGadgetLabels.from_text(fmt.read_text(args.labels))
        x = fmt.parse_bipartitioning(fmt.read_text(args.cert), inst, source=args.cert)
        phi = _load(args.cnf, fmt.parse_dimacs) if args.cnf else None
        _emit(cfg.output, fmt.format_assignment(bipartition_to_assignment(inst, labels, x, phi)))
    elif kind == "X2col":
        inst = _load(args.bcc, fmt.parse_bcc)
        labels = Rc2GadgetLabels.from_text(fmt.read_text(args.labels))
        x = fmt.parse_bipartitioning(fmt.read_text(args.cert), inst, source=args.cert)
        _emit(cfg.output, fmt.format_colouring(bipartition_to_colouring(inst, labels, x)))
    elif kind == "col2X":
        inst = _load(args.bcc, fmt.parse_bcc)
        labels = Rc2GadgetLabels.from_text(fmt.read_text(args.labels))
        g_prime, _ = bcc_to_rc2(inst)
        col = fmt.parse_colouring(fmt.read_text(args.cert), g_prime, source=args.cert)
        x = colouring_to_bipartition(inst, labels, col, g_prime)
        if not verify_bipartition(inst, x)[0]:
            raise AssertionError("lifted bipartitioning does not cover the base graph")
        _emit(cfg.output, fmt.format_bipartitioning(x))
    elif kind == "col2packing":
        h = _load(args.bip, fmt.parse_bipartite)
        col = fmt.parse_bipartite_colouring(fmt.read_text(args.cert), h, source=args.cert)
        if not check_bipartite_colouring(h, col):
            print("colouring leaves a B-pair without a rainbow path", file=sys.stderr)
            return NO
        placements = colouring_to_packing(h, col)
        if not verify_packing(bipartite_to_packing(h), placements):
            raise AssertionError("packing from a valid colouring failed verification")
        _emit(cfg.output, fmt.format_placements(placements))
    return YES


def cmd_solve(cfg: RunConfig, args) -> int:
    kind, src = args.kind, cfg.inputs[0]
    if kind == "bcc":
        x = solve_bcc(_load(src, fmt.parse_bcc), cfg.solver_budget)
        text = None if x is None else fmt.format_bipartitioning(x)
    elif kind == "rc2":
        g = _load(src, fmt.parse_graph)
        col = solve_rc2(g, cfg.solver_budget)
        text = None if col is None else fmt.format_colouring(col)
    elif kind == "bipartite":
        col = decide_bipartite_rainbow(_load(src, fmt.parse_bipartite), cfg.solver_budget)
        text = None if col is None else fmt.format_bipartite_colouring(col)
    else:  # sat, by brute force over the (small) variable set
        ev = _load(src, fmt.parse_dimacs).brute_force()
        text = None if ev is None else fmt.format_assignment(ev)
    print("yes" if text is not None else "no", file=sys.stderr)
    if text is not None:
        _emit(cfg.output, text)
    return YES if text is not None else NO


def cmd_gen(cfg: RunConfig, args) -> int:
    kind = args.kind
    if kind == "random-3cnf":
        phi = CnfFormula(args.vars, tuple(random_3cnf(args.vars, args.clauses, cfg.seed)))
        _emit(cfg.output, fmt.format_dimacs(phi))
        return YES
    if kind == "random-split":
        g = random_split(args.n, cfg.seed, clique=args.clique_opt)
    elif kind == "random-threshold":
        g = random_threshold(args.n, cfg.seed)
    else:
        clique = args.clique_opt or (4 if kind == "g2200" else 3)
        g = special_graph(kind, clique, args.extra, cfg.seed)
    _emit(cfg.output, fmt.format_graph(g))
    return YES


def cmd_dot(cfg: RunConfig, args) -> int:
    g = _load(cfg.inputs[0], fmt.parse_graph)
    col = None
    if args.colouring:
        col = fmt.parse_colouring(fmt.read_text(args.colouring), g, source=args.colouring)
    _emit(cfg.output, fmt.export_dot(g, col))
    return YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowsplit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def limits(p):
        p.add_argument("--edge-limit", type=int, default=EDGE_LIMIT)
        p.add_argument("--mask-budget", type=int, default=MASK_BUDGET)
        p.add_argument("--solver-budget", type=int, default=BCC_BUDGET)

    p = sub.add_parser("recognize", help="split / threshold recognition")
    p.add_argument("graph")
    p.add_argument("--anatomy", action="store_true", help="also print the clique anatomy")

    p = sub.add_parser("rc", help="rainbow connection number with a witness")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["exact", "split", "lower-bound"], default="split")
    p.add_argument("-o", "--output")
    limits(p)

    for name in ("decide", "colour"):
        p = sub.add_parser(name, help="is rc(G) <= k? (colour also writes the colouring)")
        p.add_argument("graph")
        p.add_argument("-k", type=int, required=True)
        p.add_argument("-o", "--output")
        limits(p)

    p = sub.add_parser("verify", help="check a colouring is rainbow")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.add_argument("--paths", action="store_true", help="list a witness path per pair")
    p.add_argument("--force-budget", action="store_true", help="raise the mask budget to the colour count")
    p.add_argument("-o", "--output")
    limits(p)

    p = sub.add_parser("reduce", help="build a reduced instance")
    p.add_argument("kind", choices=["sat2bcc", "bcc2rc2", "rc2bipartite", "bip2matrix", "bip2packing"])
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--labels", help="labels file read by rc2bipartite")
    p.add_argument("--labels-out", help="where to write labels (default: <output>.labels)")

    p = sub.add_parser("lift", help="carry a certificate across a reduction")
    p.add_argument("kind", choices=["eval2X", "X2eval", "X2col", "col2X", "col2packing"])
    for opt in ("cnf", "bcc", "bip", "labels", "cert"):
        p.add_argument(f"--{opt}")
    p.add_argument("-o", "--output")

    p = sub.add_parser("solve", help="solve a BCC, RC(G,2), bipartite-rainbow or 3SAT instance")
    p.add_argument("kind", choices=["bcc", "rc2", "bipartite", "sat"])
    p.add_argument("input")
    p.add_argument("-o", "--output")
    limits(p)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument(
        "kind",
        choices=["g111", "g400", "g310", "g2200", "g220", "g220z", "random-split", "random-threshold", "random-3cnf"],
    )
    p.add_argument("--clique", dest="clique_opt", type=int)
    p.add_argument("--extra", type=int, default=0, help="extra non-pendant independent vertices")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--vars", type=int, default=4)
    p.add_argument("--clauses", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")

    p = sub.add_parser("dot", help="export Graphviz DOT")
    p.add_argument("graph")
    p.add_argument("--colouring")
    p.add_argument("-o", "--output")
    return parser


COMMANDS = {
    "recognize": cmd_recognize,
    "rc": cmd_rc,
    "decide": cmd_decide,
    "colour": cmd_decide,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "lift": cmd_lift,
    "solve": cmd_solve,
    "gen": cmd_gen,
    "dot": cmd_dot,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    inputs = [getattr(args, a) for a in ("graph", "input", "colouring") if isinstance(getattr(args, a, None), str)]
    if args.command == "dot":
        inputs = [args.graph]
    try:
        cfg = RunConfig(
            command=args.command,
            inputs=inputs,
            output=getattr(args, "output", None),
            k=getattr(args, "k", None),
            edge_limit=getattr(args, "edge_limit", EDGE_LIMIT),
            mask_budget=getattr(args, "mask_budget", MASK_BUDGET),
            solver_budget=getattr(args, "solver_budget", BCC_BUDGET),
            seed=getattr(args, "seed", 0),
        )
        if args.command == "colour" and cfg.output is None:
            cfg.output = "-"
        return COMMANDS[args.command](cfg, args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return ERROR
    except (ContractError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
