#!/usr/bin/env python3
"""One-off generator for the bundled small-graph corpora.

Produces src/factorlab/data/connected_{n}.g6 for n = 1..8: every connected
simple graph on n vertices up to isomorphism, one graph6 line each, sorted.

Method: the networkx graph atlas supplies all isomorphism classes up to 7
vertices; 8-vertex classes are obtained by attaching a new vertex to every
7-vertex class with every possible neighborhood and deduplicating
(invariant buckets keyed by degree/neighbor-degree/spectral data, exact
isomorphism inside each bucket).  Class counts are asserted against the
published values, so a dedup bug cannot pass silently.

Run from the repository root:  python scripts/generate_corpus.py
"""

import sys
import time
from collections import defaultdict
from pathlib import Path

import networkx as nx
import numpy as np

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "factorlab" / "data"


def invariant_key(g: nx.Graph):
    degs = sorted(d for _, d in g.degree())
    profile = tuple(
        sorted(tuple(sorted(g.degree(u) for u in g.neighbors(v))) for v in g.nodes())
    )
    if g.number_of_nodes() > 0:
        eigs = np.linalg.eigvalsh(nx.to_numpy_array(g))
        spec = tuple(round(float(e), 6) for e in eigs)
    else:
        spec = ()
    return (g.number_of_nodes(), g.number_of_edges(), tuple(degs), profile, spec)


def dedup_insert(buckets, g: nx.Graph) -> bool:
    """Insert unless isomorphic to a stored graph; True when new."""
    key = invariant_key(g)
    for other in buckets[key]:
        if nx.is_isomorphic(g, other):
            return False
    buckets[key].append(g)
    return True


def eight_vertex_classes(seven_vertex_graphs):
    buckets = defaultdict(list)
    total = 0
    t0 = time.time()
    for idx, h in enumerate(seven_vertex_graphs):
        base = nx.convert_node_labels_to_integers(h)
        for mask in range(1 << 7):
            g = base.copy()
            g.add_node(7)
            for v in range(7):
                if mask >> v & 1:
                    g.add_edge(7, v)
            if dedup_insert(buckets, g):
                total += 1
        if (idx + 1) % 200 == 0:
            print(f"  augmented {idx + 1}/1044 parents, {total} classes, {time.time() - t0:.0f}s")
    return [g for bucket in buckets.values() for g in bucket]


def graph6_line(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def main() -> int:
    atlas = nx.graph_atlas_g()
    by_n = defaultdict(list)
    for g in atlas:
        if g.number_of_nodes() >= 1:
            by_n[g.number_of_nodes()].append(g)
    by_n[8] = eight_vertex_classes(by_n[7])

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for n in range(1, 9):
        graphs = by_n[n]
        assert len(graphs) == ALL_COUNTS[n], f"n={n}: {len(graphs)} classes, expected {ALL_COUNTS[n]}"
        connected = [g for g in graphs if nx.is_connected(g)]
        assert len(connected) == CONNECTED_COUNTS[n], (
            f"n={n}: {len(connected)} connected, expected {CONNECTED_COUNTS[n]}"
        )
        lines = sorted(graph6_line(g) for g in connected)
        assert len(set(lines)) == len(lines), f"n={n}: duplicate graph6 lines"
        path = OUT_DIR / f"connected_{n}.g6"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"wrote {path} ({len(lines)} graphs)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
