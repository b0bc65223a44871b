"""Shared graph builders and independent brute-force oracles for the tests.

The oracles here deliberately avoid the library's branch-and-bound and
matching machinery: they enumerate subsets directly, so they can referee
the clever solvers.
"""
from __future__ import annotations

import random
from itertools import combinations

from pack2dom import Graph, canonical_form, is_vertex_cover


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n_vertices: int) -> Graph:
    return Graph(n_vertices, [(i, i + 1) for i in range(n_vertices - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(
    rng: random.Random, n_lo: int, n_hi: int, max_edges: int | None = None
) -> Graph:
    while True:
        n = rng.randint(n_lo, n_hi)
        g = random_graph(rng, n, rng.uniform(0.15, 0.7))
        if not g.is_connected():
            continue
        if max_edges is not None and g.m > max_edges:
            continue
        return g


# -- oracles -----------------------------------------------------------------


def brute_matching_size(g: Graph) -> int:
    edges = g.edges
    best = 0

    def dfs(i: int, used: int, size: int) -> None:
        nonlocal best
        if size + (len(edges) - i) <= best:
            return
        if i == len(edges):
            best = max(best, size)
            return
        u, v = edges[i]
        if not (used >> u & 1) and not (used >> v & 1):
            dfs(i + 1, used | 1 << u | 1 << v, size + 1)
        dfs(i + 1, used, size)

    dfs(0, 0, 0)
    return best


def brute_min_cover_size(g: Graph) -> int:
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if is_vertex_cover(g, subset):
                return k
    raise AssertionError("V(G) always covers")


def brute_min_dominating_size(g: Graph) -> int:
    closed = [g.neighbor_masks[v] | 1 << v for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return k
    raise AssertionError("V(G) always dominates")


def naive_connected_canonical_forms(n: int) -> set[bytes]:
    """Oracle enumeration: every labeled graph on n vertices, filtered and
    deduplicated."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    forms: set[bytes] = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        g = Graph(n, edges)
        if g.is_connected():
            forms.add(canonical_form(g))
    return forms
