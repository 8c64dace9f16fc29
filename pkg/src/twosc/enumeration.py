"""Exhaustive small-graph generation, one representative per isomorphism class.

Graphs on k+1 vertices are produced by attaching a new vertex with every
possible neighborhood to every k-vertex class representative, keeping
one canonical form per class.  The published class counts are pinned
here and checked by the test suite; connected counts additionally get a
record-for-record cross-check against an externally generated catalog.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_masks
from .core import Graph, GraphError, component_masks

GENERATOR_MAX = 8

# Unlabeled simple graphs on 1..8 vertices, and the connected ones.
ALL_GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


class RangeError(GraphError):
    """Vertex count outside what the built-in generator supports."""


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on n vertices (any connectivity)."""
    if not 1 <= n <= GENERATOR_MAX:
        raise RangeError(f"generator supports 1..{GENERATOR_MAX} vertices, got {n}")
    if n == 1:
        return (Graph((0,)),)
    seen: dict[tuple[int, ...], None] = {}
    for parent in graph_classes(n - 1):
        base = parent.adj
        for mask in range(1 << (n - 1)):
            adj = [m | ((mask >> v & 1) << (n - 1)) for v, m in enumerate(base)]
            adj.append(mask)
            seen.setdefault(canonical_masks(adj), None)
    return tuple(Graph(masks) for masks in sorted(seen))


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of the connected graphs on n vertices."""
    return tuple(
        g for g in graph_classes(n) if len(component_masks(g.adj, n)) == 1
    )


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield exactly one representative per connected isomorphism class."""
    yield from connected_classes(n)
