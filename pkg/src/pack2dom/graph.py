"""Immutable simple undirected graphs and edge-induced subgraphs.

Vertices are dense integers 0..n-1.  Adjacency is kept both as sorted
neighbor tuples (for iteration) and as per-vertex bitmasks (what the exact
solvers actually chew on).  A Graph never changes after construction, so
instances are safe to share across worker processes.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import GraphError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalized undirected edge: endpoints in increasing order, no loops."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction."""

    __slots__ = ("n", "_masks", "_adj", "_edges", "_canon")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._adj = tuple(tuple(_bits(m)) for m in masks)
        self._edges = tuple(
            (u, v) for u in range(n) for v in self._adj[u] if u < v
        )
        self._canon = None  # lazily filled by pack2dom.canon

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges, normalized and in lexicographic order."""
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- structure --------------------------------------------------------

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= self._masks[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def permute(self, pi: Iterable[int]) -> "Graph":
        """Relabeled copy: vertex v of self becomes vertex pi[v]."""
        pi = tuple(pi)
        if sorted(pi) != list(range(self.n)):
            raise GraphError("permutation must be a bijection on 0..n-1")
        return Graph(self.n, [(pi[u], pi[v]) for u, v in self._edges])

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class DegreeProfile(NamedTuple):
    max_degree: int
    min_degree: int
    degrees: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(len(row) for row in g.adjacency)
    if not degs:
        return DegreeProfile(0, 0, ())
    return DegreeProfile(max(degs), min(degs), degs)


def is_connected(g: Graph) -> bool:
    return g.is_connected()


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from raw pairs, collapsing duplicates with a warning.

    Out-of-range endpoints and self-loops are hard errors; repeated edges
    (in either orientation) are tolerated so external corpora ingest cleanly.
    """
    seen: set[Edge] = set()
    unique: list[Edge] = []
    duplicates = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        e = edge(u, v)
        if e in seen:
            duplicates += 1
        else:
            seen.add(e)
            unique.append(e)
    if duplicates:
        warnings.warn(
            f"collapsed {duplicates} duplicate edge(s)", stacklevel=2
        )
    return Graph(n, unique)


# -- edge-induced subgraphs -----------------------------------------------


@dataclass(frozen=True)
class EdgeSubgraph:
    """Subgraph spanned by an explicit edge subset.

    The vertex set is exactly the union of the chosen edges' endpoints, so
    an empty edge set yields the empty subgraph and there are never isolated
    vertices.
    """

    parent: Graph
    edges: frozenset[Edge]
    vertices: frozenset[int]

    def degree_of(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def edge_subgraph(g: Graph, edges: Iterable[tuple[int, int]]) -> EdgeSubgraph:
    normalized = frozenset(edge(u, v) for u, v in edges)
    for u, v in normalized:
        if not g.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not in parent graph")
    vertices = frozenset(v for e in normalized for v in e)
    return EdgeSubgraph(g, normalized, vertices)


class ComponentKind(NamedTuple):
    kind: str  # "path" | "cycle" | "other"
    length: int  # number of edges in the component


def classify_components(h: EdgeSubgraph) -> list[ComponentKind]:
    """One kind per connected component of h, sorted for determinism.

    A component is a path or a cycle exactly when all its internal degrees
    are at most 2; "other" can only appear when some vertex meets three or
    more of the chosen edges.
    """
    adj: dict[int, list[int]] = {v: [] for v in h.vertices}
    for u, v in h.edges:
        adj[u].append(v)
        adj[v].append(u)
    kinds: list[ComponentKind] = []
    seen: set[int] = set()
    for start in sorted(h.vertices):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        degrees = [len(adj[v]) for v in comp]
        n_edges = sum(degrees) // 2
        if max(degrees) > 2:
            kind = "other"
        elif min(degrees) == 2:
            kind = "cycle"
        else:
            kind = "path"
        kinds.append(ComponentKind(kind, n_edges))
    return sorted(kinds)
