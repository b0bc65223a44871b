"""Edge 2-packings: exact maximum size, witnesses, and full enumeration.

A 2-packing is an edge subset in which every vertex meets at most two of
the chosen edges, i.e. a spanning subgraph of maximum degree <= 2.  Two
independent solvers compute its maximum size nu2:

* ``nu2_bruteforce`` — exhaustive include/exclude search over the edge
  list with degree and cardinality pruning.  The reference oracle; bounded
  by edge count.
* ``nu2_matching`` — exact and unbounded: reduction to maximum matching in
  an auxiliary graph (two copies per vertex, a two-node gadget per edge),
  where max matching size M gives nu2 = M - |E|.

The brute-force route exists solely to certify the matching route; surveys
always use the matching solver.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import BoundExceededError, GraphError
from .graph import Edge, Graph, edge
from .limits import NU2_BRUTEFORCE_MAX_EDGES, effective_bound
from .matching import maximum_matching


class TwoPacking(NamedTuple):
    parent: Graph
    edges: frozenset[Edge]

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))


class PackingResult(NamedTuple):
    nu2: int
    witness: TwoPacking
    method: str  # "oracle" | "matching"


def is_2packing(g: Graph, edges) -> bool:
    """True iff no vertex of g meets three or more of the given edges."""
    counts = [0] * g.n
    for u, v in edges:
        e = edge(u, v)
        if not g.has_edge(*e):
            raise GraphError(f"edge ({u},{v}) not in graph")
        counts[e[0]] += 1
        counts[e[1]] += 1
        if counts[e[0]] > 2 or counts[e[1]] > 2:
            return False
    return True


def _check_edge_bound(g: Graph, caller: str) -> None:
    bound = effective_bound(NU2_BRUTEFORCE_MAX_EDGES)
    if g.m > bound:
        raise BoundExceededError(
            f"{caller} supports |E| <= {bound}, got |E|={g.m}"
        )


def nu2_bruteforce(g: Graph) -> PackingResult:
    """Exact nu2 by exhaustive search; witness is the lex-smallest maximum.

    Include-first depth-first search over the lexicographically sorted edge
    list.  Any branch that cannot strictly beat the incumbent is cut, so the
    first completed leaf of each size is kept — which makes the final
    witness the lexicographically smallest maximum 2-packing.
    """
    _check_edge_bound(g, "nu2_bruteforce")
    edges = g.edges
    m = len(edges)
    free = [2] * g.n  # residual incidences allowed per vertex
    chosen: list[Edge] = []
    best: tuple[Edge, ...] = ()
    best_size = -1

    def dfs(i: int, cap: int) -> None:
        nonlocal best, best_size
        if len(chosen) + min(m - i, cap >> 1) <= best_size:
            return
        if i == m:
            best_size = len(chosen)
            best = tuple(chosen)
            return
        u, v = edges[i]
        if free[u] and free[v]:
            free[u] -= 1
            free[v] -= 1
            chosen.append(edges[i])
            dfs(i + 1, cap - 2)
            chosen.pop()
            free[u] += 1
            free[v] += 1
        dfs(i + 1, cap)

    dfs(0, 2 * g.n)
    return PackingResult(best_size, TwoPacking(g, frozenset(best)), "oracle")


def enumerate_max_2packings(g: Graph) -> list[TwoPacking]:
    """Every maximum 2-packing, in lexicographic edge-set order."""
    _check_edge_bound(g, "enumerate_max_2packings")
    target = nu2_bruteforce(g).nu2
    edges = g.edges
    m = len(edges)
    free = [2] * g.n
    chosen: list[Edge] = []
    found: list[TwoPacking] = []

    def dfs(i: int, cap: int) -> None:
        if len(chosen) == target:
            found.append(TwoPacking(g, frozenset(chosen)))
            return
        if len(chosen) + min(m - i, cap >> 1) < target:
            return
        u, v = edges[i]
        if free[u] and free[v]:
            free[u] -= 1
            free[v] -= 1
            chosen.append(edges[i])
            dfs(i + 1, cap - 2)
            chosen.pop()
            free[u] += 1
            free[v] += 1
        dfs(i + 1, cap)

    dfs(0, 2 * g.n)
    return found


def nu2_matching(g: Graph) -> PackingResult:
    """Exact nu2 via the gadget reduction to maximum matching.

    Auxiliary graph: vertex v gets copies 2v and 2v+1; edge number i of g
    gets gadget nodes a=2n+2i, b=2n+2i+1 with edge (a,b), a joined to both
    copies of one endpoint and b to both copies of the other.  An edge is
    packed exactly when its gadget pair is matched outward to vertex
    copies, and at most two gadgets can claim the copies of any vertex.
    """
    n = g.n
    m = g.m
    if m == 0:
        return PackingResult(0, TwoPacking(g, frozenset()), "matching")
    aux_edges: list[tuple[int, int]] = []
    for i, (u, v) in enumerate(g.edges):
        a = 2 * n + 2 * i
        b = a + 1
        aux_edges.append((a, b))
        aux_edges.append((a, 2 * u))
        aux_edges.append((a, 2 * u + 1))
        aux_edges.append((b, 2 * v))
        aux_edges.append((b, 2 * v + 1))
    aux = Graph(2 * n + 2 * m, aux_edges)
    matched = maximum_matching(aux)
    mate: dict[int, int] = {}
    for a, b in matched:
        mate[a] = b
        mate[b] = a
    packed: list[Edge] = []
    for i, e in enumerate(g.edges):
        a = 2 * n + 2 * i
        b = a + 1
        if mate.get(a) == b:
            continue
        assert a in mate or b in mate, "exposed gadget pair contradicts maximality"
        if a in mate and b in mate:
            packed.append(e)
    nu2 = len(matched) - m
    assert len(packed) == nu2, "gadget decode disagrees with matching size"
    witness = TwoPacking(g, frozenset(packed))
    assert is_2packing(g, witness.edges)
    return PackingResult(nu2, witness, "matching")
