#!/usr/bin/env python3
"""Run every orientation verifier over a graph6 catalog and tabulate the verdicts.

    python scripts/sweep_theorems.py tests/data/connected_upto7.g6 --max-n 6 --out reports.jsonl

One JSON report per (graph, property) goes to ``--out``; a summary table
goes to stdout.  A verdict that disagrees with the structural prediction
is counted under "contradictions" (there should be none).
"""
from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from skewperm.formats import read_graph6_file
from skewperm.orientations import (
    DEFAULT_BUDGET,
    ConsistencyError,
    verify_all_orientations_same,
    verify_bipartite_i_relation,
    verify_forest_relation,
    verify_matching_equality,
)

VERIFIERS = {
    "same-poly": verify_all_orientations_same,
    "matching-eq": verify_matching_equality,
    "bipartite-i": verify_bipartite_i_relation,
    "forest": verify_forest_relation,
}


@dataclass
class SweepConfig:
    catalog: Path
    max_n: int = 6
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    out: Path | None = None


def sweep(cfg: SweepConfig) -> dict[str, Counter]:
    graphs = [g for g in read_graph6_file(cfg.catalog) if g.n <= cfg.max_n]
    tally: dict[str, Counter] = {name: Counter() for name in VERIFIERS}
    sink = open(cfg.out, "w") if cfg.out else None
    try:
        for g in graphs:
            for name, fn in VERIFIERS.items():
                try:
                    rep = fn(g, budget=cfg.budget, seed=cfg.seed)
                except ConsistencyError as exc:
                    rep = exc.report
                    tally[name]["contradictions"] += 1
                tally[name][rep.verdict] += 1
                if sink:
                    sink.write(rep.dumps() + "\n")
    finally:
        if sink:
            sink.close()
    return tally


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("catalog", type=Path)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.catalog, a.max_n, a.budget, a.seed, a.out)

    t0 = time.perf_counter()
    tally = sweep(cfg)
    print(f"{'property':<12} {'holds':>6} {'refuted':>8} {'sampled':>8} {'contra':>7}")
    for name, c in tally.items():
        print(f"{name:<12} {c['holds']:>6} {c['refuted']:>8} {c['sampled-holds']:>8} {c['contradictions']:>7}")
    print(f"{time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 1 if any(c["contradictions"] for c in tally.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
