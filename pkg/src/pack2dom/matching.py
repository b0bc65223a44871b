"""Maximum cardinality matching in general graphs.

Blossom contraction with BFS augmenting-path search, the classic O(V^3)
array formulation (base[], parent[], contracted-blossom marking).  Only
unweighted cardinality matching is provided; that is all the 2-packing
reduction needs.
"""
from __future__ import annotations

from collections import deque

from .graph import Edge, Graph


def maximum_matching(g: Graph) -> set[Edge]:
    """A maximum-cardinality matching as a set of normalized edges."""
    n = g.n
    adj = g.adjacency
    match = [-1] * n

    # Greedy seed keeps the number of augmentation phases small.
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break

    for u in range(n):
        if match[u] == -1:
            _augment_from(u, n, adj, match)

    return {(v, match[v]) for v in range(n) if v < match[v]}


def _augment_from(
    root: int, n: int, adj: tuple[tuple[int, ...], ...], match: list[int]
) -> bool:
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # Odd cycle: contract the blossom down to its base vertex.
                cur_base = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # Found an exposed vertex: flip the alternating path.
                    while to != -1:
                        pv = parent[to]
                        ppv = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = ppv
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False
