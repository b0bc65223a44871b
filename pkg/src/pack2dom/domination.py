"""Exact domination number, vertex cover number, and independence number.

gamma is solved as minimum set cover over closed neighborhoods with branch
and bound (branch on an uncovered vertex with the fewest candidate
dominators; lower bound from a greedy packing of disjoint closed
neighborhoods).  beta is a branch-and-reduce vertex cover solver with
degree-1 and triangle-degree-2 reductions and a closed-form finish once
maximum degree drops to 2; alpha is its complement.  All witnesses are
validated before they are returned.

Subset-enumeration references (``gamma_bruteforce`` and the test-side
cover oracle) certify the branch-and-bound solvers on small instances.
"""
from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .errors import BoundExceededError, GraphError
from .graph import Graph, _bits
from .limits import (
    EXACT_SOLVER_MAX_N,
    GAMMA_BRUTEFORCE_MAX_N,
    effective_bound,
)


class DominatingSet(NamedTuple):
    parent: Graph
    vertices: frozenset[int]


class VertexCover(NamedTuple):
    parent: Graph
    vertices: frozenset[int]


class IndependentSet(NamedTuple):
    parent: Graph
    vertices: frozenset[int]


class GammaResult(NamedTuple):
    gamma: int
    witness: DominatingSet


class BetaResult(NamedTuple):
    beta: int
    witness: VertexCover


class AlphaResult(NamedTuple):
    alpha: int
    witness: IndependentSet


def _vertex_mask(g: Graph, vertices) -> int:
    mask = 0
    for v in vertices:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def is_dominating_set(g: Graph, vertices) -> bool:
    """True iff the closed neighborhoods of the set cover all of V."""
    mask = _vertex_mask(g, vertices)
    covered = mask
    for v in _bits(mask):
        covered |= g.neighbor_masks[v]
    return covered == (1 << g.n) - 1


def is_vertex_cover(g: Graph, vertices) -> bool:
    mask = _vertex_mask(g, vertices)
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges)


def is_independent_set(g: Graph, vertices) -> bool:
    mask = _vertex_mask(g, vertices)
    return all(g.neighbor_masks[v] & mask == 0 for v in _bits(mask))


def _check_n_bound(g: Graph, default: int, caller: str) -> None:
    bound = effective_bound(default)
    if g.n > bound:
        raise BoundExceededError(f"{caller} supports n <= {bound}, got n={g.n}")


# -- domination --------------------------------------------------------------


def gamma_exact(g: Graph) -> GammaResult:
    _check_n_bound(g, EXACT_SOLVER_MAX_N, "gamma_exact")
    n = g.n
    if n == 0:
        return GammaResult(0, DominatingSet(g, frozenset()))
    closed = tuple(g.neighbor_masks[v] | 1 << v for v in range(n))
    full = (1 << n) - 1

    # Greedy incumbent: repeatedly take the vertex covering the most new ground.
    covered = 0
    incumbent: list[int] = []
    while covered != full:
        pick = max(range(n), key=lambda v: ((closed[v] & ~covered).bit_count(), -v))
        incumbent.append(pick)
        covered |= closed[pick]
    best = incumbent
    best_size = len(best)

    def lower_bound(covered: int) -> int:
        # Uncovered vertices with pairwise disjoint closed neighborhoods all
        # need distinct dominators.
        count = 0
        blocked = 0
        todo = full & ~covered
        for u in _bits(todo):
            if closed[u] & blocked == 0:
                count += 1
                blocked |= closed[u]
        return count

    chosen: list[int] = []

    def dfs(covered: int) -> None:
        nonlocal best, best_size
        if covered == full:
            if len(chosen) < best_size:
                best = list(chosen)
                best_size = len(chosen)
            return
        if len(chosen) + lower_bound(covered) >= best_size:
            return
        # Branch on the uncovered vertex with the fewest candidate dominators
        # (lowest index wins ties); every dominator of it is a candidate.
        pick = -1
        pick_options = n + 1
        todo = full & ~covered
        for u in _bits(todo):
            options = closed[u].bit_count()
            if options < pick_options:
                pick, pick_options = u, options
        for v in _bits(closed[pick]):
            chosen.append(v)
            dfs(covered | closed[v])
            chosen.pop()

    dfs(0)
    witness = DominatingSet(g, frozenset(best))
    assert is_dominating_set(g, witness.vertices)
    assert len(witness.vertices) == best_size
    return GammaResult(best_size, witness)


def gamma_bruteforce(g: Graph) -> int:
    """Minimum dominating set size by subset enumeration in increasing size."""
    _check_n_bound(g, GAMMA_BRUTEFORCE_MAX_N, "gamma_bruteforce")
    n = g.n
    if n == 0:
        return 0
    closed = tuple(g.neighbor_masks[v] | 1 << v for v in range(n))
    full = (1 << n) - 1
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return k
    raise AssertionError("V(G) always dominates")


# -- vertex cover / independence ---------------------------------------------


def beta_exact(g: Graph) -> BetaResult:
    _check_n_bound(g, EXACT_SOLVER_MAX_N, "beta_exact")
    n = g.n
    masks = g.neighbor_masks

    # Incumbent: both endpoints of a greedy maximal matching (2-approximation).
    seed: list[int] = []
    taken = 0
    for u, v in g.edges:
        if not (taken >> u & 1 or taken >> v & 1):
            seed.extend((u, v))
            taken |= 1 << u | 1 << v
    best = list(seed)
    best_size = len(best)

    def greedy_matching_lb(present: int) -> int:
        size = 0
        used = 0
        for v in _bits(present):
            if used >> v & 1:
                continue
            free = masks[v] & present & ~used
            if free:
                used |= 1 << v | free & -free
                size += 1
        return size

    chosen: list[int] = []

    def finish_low_degree(present: int) -> None:
        # All degrees <= 2: components are paths and cycles with closed-form
        # covers (alternate vertices; one extra on an odd cycle).
        nonlocal best, best_size
        extra: list[int] = []
        remaining = present
        while remaining:
            start = -1
            for v in _bits(remaining):
                if (masks[v] & present).bit_count() <= 1:
                    start = v  # path endpoint (or isolated vertex)
                    break
            is_cycle = start < 0
            if is_cycle:
                start = (remaining & -remaining).bit_length() - 1
            walk = [start]
            seen = 1 << start
            cur = start
            while True:
                nxt = masks[cur] & present & ~seen
                if not nxt:
                    break
                cur = (nxt & -nxt).bit_length() - 1
                walk.append(cur)
                seen |= 1 << cur
            extra.extend(walk[1::2])
            if is_cycle and len(walk) % 2 == 1:
                extra.append(walk[-1])
            remaining &= ~seen
        if len(chosen) + len(extra) < best_size:
            best = chosen + extra
            best_size = len(best)

    def dfs(present: int) -> None:
        nonlocal best, best_size
        base_len = len(chosen)
        # Reductions loop; every forced vertex lands in `chosen`.
        while True:
            if len(chosen) >= best_size:
                del chosen[base_len:]
                return
            reduced = False
            max_deg = 0
            max_v = -1
            for v in _bits(present):
                nb = masks[v] & present
                d = nb.bit_count()
                if d == 0:
                    present &= ~(1 << v)
                elif d == 1:
                    w = nb.bit_length() - 1
                    chosen.append(w)
                    present &= ~(1 << v | 1 << w)
                    reduced = True
                    break
                elif d == 2:
                    x = nb & -nb
                    y = nb ^ x
                    xi = x.bit_length() - 1
                    yi = y.bit_length() - 1
                    if masks[xi] >> yi & 1:  # triangle: take both neighbors
                        chosen.extend((xi, yi))
                        present &= ~(1 << v | x | y)
                        reduced = True
                        break
                    if d > max_deg:
                        max_deg, max_v = d, v
                elif d > max_deg:
                    max_deg, max_v = d, v
            if reduced:
                continue
            if max_deg == 0:
                if len(chosen) < best_size:
                    best = list(chosen)
                    best_size = len(best)
                del chosen[base_len:]
                return
            if max_deg <= 2:
                finish_low_degree(present)
                del chosen[base_len:]
                return
            break
        if len(chosen) + greedy_matching_lb(present) >= best_size:
            del chosen[base_len:]
            return
        v = max_v
        nb = masks[v] & present
        # Branch 1: v in the cover.
        chosen.append(v)
        dfs(present & ~(1 << v))
        chosen.pop()
        # Branch 2: v excluded, so all its neighbors are in the cover.
        marker = len(chosen)
        chosen.extend(_bits(nb))
        dfs(present & ~(nb | 1 << v))
        del chosen[marker:]
        del chosen[base_len:]

    dfs((1 << n) - 1)
    witness = VertexCover(g, frozenset(best))
    assert is_vertex_cover(g, witness.vertices)
    assert len(witness.vertices) == best_size
    # Gallai: the complement must be independent of size n - beta.
    assert is_independent_set(g, set(range(n)) - witness.vertices)
    return BetaResult(best_size, witness)


def alpha_exact(g: Graph) -> AlphaResult:
    beta, cover = beta_exact(g)
    complement = frozenset(range(g.n)) - cover.vertices
    witness = IndependentSet(g, complement)
    assert is_independent_set(g, complement)
    return AlphaResult(g.n - beta, witness)
