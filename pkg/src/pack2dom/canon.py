"""Canonical labeling and isomorphism for small graphs.

The canonical form is the graph6 encoding of a canonically relabeled copy:
among all vertex orderings compatible with iterated degree refinement, pick
the one whose upper-triangle adjacency bit string is smallest.  Equal
canonical forms are therefore equivalent to isomorphism.

Search strategy: equitable refinement of an ordered partition, then
individualize one vertex of the first non-singleton cell and recurse.
Discovered automorphisms (pairs of leaves with equal code) prune sibling
branches that lie in the same orbit under the subgroup fixing the current
individualization path pointwise.  Exact for every graph; fast up to the
n <= 12 bound, where refinement almost always goes discrete immediately.
"""
from __future__ import annotations

from .errors import BoundExceededError
from .graph import Graph
from .graph6 import to_graph6
from .limits import CANONICAL_MAX_N

Partition = tuple[tuple[int, ...], ...]


def _refine(masks: tuple[int, ...], cells: Partition) -> Partition:
    # Split cells by neighbor counts into each splitter cell until stable.
    # Sub-cells are ordered by count, so the result is label-invariant.
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            out: list[tuple[int, ...]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((masks[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    for key in sorted(groups):
                        out.append(tuple(groups[key]))
            if split:
                cells = tuple(out)
                break
        else:
            return cells


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """Vertex order (position -> vertex) minimizing the relabeled adjacency bits."""
    n = g.n
    if n > CANONICAL_MAX_N:
        raise BoundExceededError(
            f"canonical labeling supports n <= {CANONICAL_MAX_N}, got n={n}"
        )
    if n <= 1:
        return tuple(range(n))
    masks = g.neighbor_masks

    best_code: int | None = None
    best_perm: tuple[int, ...] | None = None
    autos: list[tuple[int, ...]] = []
    path: list[int] = []

    def code_of(perm: tuple[int, ...]) -> int:
        code = 1  # sentinel high bit so equal-length codes compare as strings
        for i in range(n):
            row = masks[perm[i]]
            for j in range(i + 1, n):
                code = code << 1 | (row >> perm[j] & 1)
        return code

    def same_orbit(v: int, processed: list[int]) -> bool:
        relevant = [a for a in autos if all(a[x] == x for x in path)]
        if not relevant:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in relevant:
            for x in range(n):
                rx, ry = find(x), find(a[x])
                if rx != ry:
                    parent[rx] = ry
        rv = find(v)
        return any(find(u) == rv for u in processed)

    def search(cells: Partition) -> None:
        nonlocal best_code, best_perm
        cells = _refine(masks, cells)
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            perm = tuple(cell[0] for cell in cells)
            code = code_of(perm)
            if best_code is None or code < best_code:
                best_code, best_perm = code, perm
            elif code == best_code:
                assert best_perm is not None
                sigma = [0] * n
                for pos in range(n):
                    sigma[best_perm[pos]] = perm[pos]
                autos.append(tuple(sigma))
            return
        head, cell, tail = cells[:target], cells[target], cells[target + 1 :]
        processed: list[int] = []
        for v in cell:
            if processed and same_orbit(v, processed):
                continue
            path.append(v)
            rest = tuple(w for w in cell if w != v)
            search(head + ((v,), rest) + tail)
            path.pop()
            processed.append(v)

    search((tuple(range(n)),))
    assert best_perm is not None
    return best_perm


def canonical_graph(g: Graph) -> Graph:
    """Canonically relabeled copy of g."""
    perm = canonical_permutation(g)
    relabel = [0] * g.n
    for pos, v in enumerate(perm):
        relabel[v] = pos
    return g.permute(relabel)


def canonical_form(g: Graph) -> bytes:
    """Label-invariant identifier: graph6 bytes of the canonical relabeling."""
    cached = g._canon
    if cached is None:
        cached = to_graph6(canonical_graph(g)).encode("ascii")
        g._canon = cached
    return cached


def canonical_g6(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    degs1 = sorted(len(row) for row in g1.adjacency)
    degs2 = sorted(len(row) for row in g2.adjacency)
    if degs1 != degs2:
        return False
    return canonical_form(g1) == canonical_form(g2)
