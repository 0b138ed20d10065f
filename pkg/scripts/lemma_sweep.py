"""Sweep random split graphs: case mix, colouring timings, and exact cross-checks.

    python scripts/lemma_sweep.py --graphs 500 --max-n 60 --exact-edges 14
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from rainbowsplit.errors import CapacityError
from rainbowsplit.generators import random_lemma_graph, random_split
from rainbowsplit.graph import pendant_set
from rainbowsplit.rainbow import rc_exact, verify_rainbow
from rainbowsplit.split_rc import build_anatomy, colour_with_k, rc_split


@dataclass
class SweepConfig:
    graphs: int = 500
    max_n: int = 60
    exact_edges: int = 14
    split_graphs: int = 300
    seed: int = 0


def lemma_pass(cfg: SweepConfig) -> None:
    cases = Counter()
    exact = mismatches = 0
    start = time.perf_counter()
    for s in range(cfg.seed, cfg.seed + cfg.graphs):
        g = random_lemma_graph(s, max_n=cfg.max_n)
        p = len(pendant_set(g))
        cases[build_anatomy(g).case_tag] += 1
        col = colour_with_k(g, p)  # verifies internally
        assert col.colours_used() == set(range(p))
        if g.m <= cfg.exact_edges:
            exact += 1
            mismatches += rc_exact(g)[0] != p
    elapsed = time.perf_counter() - start
    print(f"lemma hosts: {cfg.graphs} in {elapsed:.2f}s, cases {dict(sorted(cases.items()))}")
    print(f"  rc_exact cross-check on {exact} small hosts: {mismatches} mismatches")


def split_pass(cfg: SweepConfig) -> None:
    """rc_split against rc_exact on general small split graphs."""
    values = Counter()
    checked = mismatches = capped = 0
    start = time.perf_counter()
    for s in range(cfg.seed, cfg.seed + cfg.split_graphs):
        g = random_split(4 + s % 6, s, pendant_prob=0.4)
        try:
            k, col = rc_split(g)
        except CapacityError:
            capped += 1  # p <= 3 and too many edges for the exact probes
            continue
        assert verify_rainbow(g, col).connected
        values[k] += 1
        if g.m <= cfg.exact_edges:
            checked += 1
            mismatches += rc_exact(g)[0] != k
    elapsed = time.perf_counter() - start
    print(f"split graphs: {cfg.split_graphs} in {elapsed:.2f}s, rc distribution {dict(sorted(values.items()))}")
    print(f"  rc_split vs rc_exact on {checked}: {mismatches} mismatches; {capped} over the edge limit")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--graphs", type=int, default=SweepConfig.graphs)
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    parser.add_argument("--exact-edges", type=int, default=SweepConfig.exact_edges)
    parser.add_argument("--split-graphs", type=int, default=SweepConfig.split_graphs)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    cfg = SweepConfig(**vars(parser.parse_args()))
    lemma_pass(cfg)
    split_pass(cfg)


if __name__ == "__main__":
    main()
