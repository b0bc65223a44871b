#!/usr/bin/env python3
"""Produce data/graph9c.g6: all connected 9-vertex graphs, one per line.

The survey ingests corpora beyond the builtin n <= 8 enumeration from
graph6 files.  The standard way to make one is nauty's geng:

    geng -c 9 > data/graph9c.g6

This script is the dependency-free fallback: it extends the library's own
augmentation construction one level past the builtin cap.  Expect a few
minutes of runtime and 261080 output lines.
"""
import sys
import time
from pathlib import Path

from pack2dom import Graph, canonical_graph, enumerate_connected, to_graph6


def main() -> int:
    out_path = Path(__file__).resolve().parent.parent / "data" / "graph9c.g6"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    found: set[str] = set()
    start = time.time()
    parents = list(enumerate_connected(8))
    for idx, parent in enumerate(parents):
        base_edges = parent.edges
        for attach in range(1, 1 << 8):
            edges = list(base_edges)
            rest = attach
            while rest:
                low = rest & -rest
                edges.append((low.bit_length() - 1, 8))
                rest ^= low
            found.add(to_graph6(canonical_graph(Graph(9, edges))))
        if (idx + 1) % 1000 == 0:
            rate = (idx + 1) / (time.time() - start)
            print(
                f"{idx + 1}/{len(parents)} parents, {len(found)} graphs, "
                f"{rate:.0f} parents/s",
                file=sys.stderr,
            )
    with out_path.open("w", encoding="ascii", newline="\n") as handle:
        for g6 in sorted(found):
            handle.write(g6 + "\n")
    print(f"wrote {len(found)} graphs to {out_path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
