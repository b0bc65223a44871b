"""The extremal tree family: generator, linear-time recognizer, closed forms.

A family member is a spider built around one center c: two fixed pendant
2-paths forming a 5-vertex central path through c, plus s >= 1 further
pendant 2-paths at c, plus t >= 1 pendant leaves at c.  Writing r = s + 4,
these trees have domination number r - 1 and 2-packing number r, and they
are exactly the connected graphs (with more edges than their 2-packing
number) where those two invariants differ by one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .errors import GraphError
from .graph import Graph

REJECT_NOT_A_TREE = "not-a-tree"
REJECT_NO_CENTER = "no-center"
REJECT_BAD_LEG = "bad-leg"
REJECT_TOO_FEW_2LEGS = "too-few-2-legs"
REJECT_NO_LEAF_LEG = "no-leaf-leg"


@dataclass(frozen=True)
class FamilyParams:
    """The (s, t) pair naming a family member; r = s + 4 is implied."""

    s: int
    t: int
    r: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise GraphError(f"family parameters need s >= 1 and t >= 1, got ({self.s},{self.t})")
        if self.r == -1:
            object.__setattr__(self, "r", self.s + 4)
        elif self.r != self.s + 4:
            raise GraphError(f"inconsistent family parameters: r={self.r} != s+4={self.s + 4}")


class FamilyRejection(NamedTuple):
    reason: str


RecognitionResult = Union[FamilyParams, FamilyRejection]


def generate_family(s: int, t: int) -> tuple[Graph, dict[str, list[int]]]:
    """Member tree plus its role map.

    Vertices: 0..4 the central path (2 is the center), then the s pendant
    2-paths as pairs (p_i, q_i) = (5+i, 5+s+i), then the t leaves
    5+2s..4+2s+t.  The role map serializes as
    {"v": [...5 ids...], "p": [...], "q": [...], "w": [...]}.
    """
    if s < 1 or t < 1:
        raise GraphError(f"generate_family needs s >= 1 and t >= 1, got ({s},{t})")
    p = [5 + i for i in range(s)]
    q = [5 + s + i for i in range(s)]
    w = [5 + 2 * s + i for i in range(t)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 4)]
    edges += [(p[i], q[i]) for i in range(s)]
    edges += [(2, wi) for wi in w]
    edges += [(2, pi) for pi in p]
    graph = Graph(5 + 2 * s + t, edges)
    roles = {"v": [0, 1, 2, 3, 4], "p": p, "q": q, "w": w}
    return graph, roles


def family_invariants(params: FamilyParams) -> tuple[int, int]:
    """Closed-form (domination number, 2-packing number) = (r-1, r)."""
    return params.r - 1, params.r


def recognize(g: Graph) -> RecognitionResult:
    """Decide family membership structurally, without isomorphism search.

    The graph must be a tree with a center whose removal leaves only
    1- or 2-vertex path components, at least three 2-vertex legs (two of
    them form the central path, the rest are the s pendant 2-paths) and at
    least one leaf leg.
    """
    n = g.n
    if n < 2 or g.m != n - 1 or not g.is_connected():
        return FamilyRejection(REJECT_NOT_A_TREE)
    candidates = [v for v in range(n) if g.degree(v) >= 3]
    if not candidates:
        return FamilyRejection(REJECT_NO_CENTER)
    first_rejection: FamilyRejection | None = None
    for center in candidates:
        outcome = _try_center(g, center)
        if isinstance(outcome, FamilyParams):
            return outcome
        if first_rejection is None:
            first_rejection = outcome
    assert first_rejection is not None
    return first_rejection


def _try_center(g: Graph, center: int) -> RecognitionResult:
    masks = g.neighbor_masks
    seen = 1 << center
    two_legs = 0
    one_legs = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        # Component of g - center containing v (g is a tree, so this is a leg).
        comp = [v]
        seen |= 1 << v
        frontier = [v]
        while frontier:
            x = frontier.pop()
            grow = masks[x] & ~seen & ~(1 << center)
            while grow:
                low = grow & -grow
                y = low.bit_length() - 1
                grow ^= low
                seen |= low
                comp.append(y)
                frontier.append(y)
        if len(comp) == 1:
            one_legs += 1
        elif len(comp) == 2:
            two_legs += 1
        else:
            return FamilyRejection(REJECT_BAD_LEG)
    if two_legs < 3:
        return FamilyRejection(REJECT_TOO_FEW_2LEGS)
    if one_legs < 1:
        return FamilyRejection(REJECT_NO_LEAF_LEG)
    return FamilyParams(s=two_legs - 2, t=one_legs)
