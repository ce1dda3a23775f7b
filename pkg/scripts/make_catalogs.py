#!/usr/bin/env python3
"""Write the graph6 catalogs consumed by the test suite.

Sources: networkx's graph atlas (every graph on up to 7 vertices, up to
isomorphism) and its non-isomorphic tree generator.  Run once; output is
committed under tests/data/.

    python scripts/make_catalogs.py [outdir]
"""
import sys
from pathlib import Path

import networkx as nx


def g6(g) -> str:
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(outdir: Path):
    outdir.mkdir(parents=True, exist_ok=True)
    atlas = nx.graph_atlas_g()
    all_lines = [g6(g) for g in atlas]
    connected = [g6(g) for g in atlas if g.number_of_nodes() >= 1 and nx.is_connected(g)]
    trees = [g6(nx.empty_graph(1))] + [g6(t) for n in range(2, 9) for t in nx.nonisomorphic_trees(n)]

    for name, lines in [
        ("graphs_upto7.g6", all_lines),
        ("connected_upto7.g6", connected),
        ("trees_upto8.g6", trees),
    ]:
        (outdir / name).write_text("\n".join(lines) + "\n")
        print(f"{name}: {len(lines)} graphs")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "data")
