"""Streams of connected graphs: builtin exhaustive generation and file ingest.

The builtin generator produces every connected graph on exactly n vertices
once up to isomorphism, in lexicographic canonical-form order.  It works
level by level: every connected graph on k+1 vertices arises from some
connected graph on k vertices by attaching a new vertex to a nonempty
neighbor set (every connected graph has a non-cut vertex), so augmenting
each level and deduplicating by canonical form is exhaustive.  Levels are
cached per process; n is capped because the level sizes explode (11117
connected graphs at n=8 already).

Larger corpora come from external graph6 files, one graph per line.
"""
from __future__ import annotations

import logging
import warnings
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .canon import canonical_graph
from .errors import BoundExceededError, Graph6Error
from .graph import Graph
from .graph6 import parse_graph6, to_graph6
from .limits import BUILTIN_ENUMERATION_MAX_N

log = logging.getLogger(__name__)


class GraphStream:
    """Single-consumer iterable of graphs with a running emission count.

    ``canonical`` is True when every emitted graph is already canonically
    labeled (builtin streams), letting consumers reuse the labels as ids.
    """

    def __init__(
        self,
        source: str,
        factory: Callable[[], Iterable[Graph]],
        canonical: bool = False,
    ):
        self.source = source
        self.canonical = canonical
        self.count = 0
        self._factory = factory

    def __iter__(self) -> Iterator[Graph]:
        for g in self._factory():
            self.count += 1
            yield g


@lru_cache(maxsize=None)
def _connected_g6_level(n: int) -> tuple[str, ...]:
    """Sorted canonical graph6 strings of all connected graphs on n vertices."""
    if n == 1:
        return (to_graph6(Graph(1)),)
    previous = _connected_g6_level(n - 1)
    k = n - 1
    found: set[str] = set()
    for g6 in previous:
        parent = parse_graph6(g6)
        base_edges = parent.edges
        for attach in range(1, 1 << k):
            edges = list(base_edges)
            rest = attach
            while rest:
                low = rest & -rest
                edges.append((low.bit_length() - 1, k))
                rest ^= low
            found.add(to_graph6(canonical_graph(Graph(n, edges))))
    return tuple(sorted(found))


def enumerate_connected(n: int) -> GraphStream:
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    if not 1 <= n <= BUILTIN_ENUMERATION_MAX_N:
        raise BoundExceededError(
            f"builtin enumeration supports 1 <= n <= {BUILTIN_ENUMERATION_MAX_N}, got n={n}"
        )

    def generate() -> Iterator[Graph]:
        for g6 in _connected_g6_level(n):
            yield parse_graph6(g6)

    return GraphStream(f"builtin:n={n}", generate, canonical=True)


def ingest_graph6(path: str | Path, expect_connected: bool = True) -> GraphStream:
    """Stream a graph6 file, one graph per line (LF or CRLF).

    Malformed lines raise with their line number.  When a connected corpus
    is expected, disconnected graphs are skipped with a warning instead of
    failing the whole ingest.
    """
    path = Path(path)
    if not path.is_file():
        raise Graph6Error(f"cannot read graph6 corpus: {path}")

    def generate() -> Iterator[Graph]:
        skipped = 0
        with path.open("r", encoding="ascii", newline="") as handle:
            for lineno, line in enumerate(handle, start=1):
                stripped = line.rstrip("\r\n")
                try:
                    g = parse_graph6(stripped)
                except Graph6Error as exc:
                    raise Graph6Error(f"{path}:{lineno}: {exc}") from None
                if expect_connected and not g.is_connected():
                    skipped += 1
                    log.warning("%s:%d: skipping disconnected graph", path, lineno)
                    continue
                yield g
        if skipped:
            warnings.warn(
                f"{path}: skipped {skipped} disconnected graph(s)", stacklevel=2
            )

    return GraphStream(f"file:{path}", generate, canonical=False)
