"""Canonical labeling for small graphs.

The canonical order of a graph maximizes, lexicographically, the bit
string read off column by column (each new vertex's adjacencies to the
vertices placed before it).  Two graphs are isomorphic iff they have the
same vertex count and the same canonical form.

The search keeps, level by level, every partial order that attains the
maximal bit prefix, and collapses partial orders that are exchangeable:
two prefixes over the same vertex set are interchangeable whenever every
unplaced vertex sees the same adjacency pattern toward both.  The
collapse is what keeps highly symmetric graphs (complete, edgeless,
vertex-transitive) from exploding into factorially many states.

Each state carries, per unplaced vertex, the bit pattern of its
adjacencies to the placed prefix, so extending a state costs one
shift-or per vertex instead of a rescan.  For at most 8 vertices (the
enumeration hot path) all patterns of a state are packed into 8-bit
lanes of a single integer.
"""

from __future__ import annotations

from typing import Sequence

from .core import Graph, bits


def _canonical_order_packed(adj: Sequence[int], n: int) -> tuple[int, ...]:
    """Pattern-packed search; needs n <= 8 so each pattern fits one byte."""
    rng = range(n)
    row_exp = []
    for v in rng:
        e = 0
        for u in bits(adj[v]):
            e |= 1 << (u << 3)
        row_exp.append(e)
    low7 = int.from_bytes(b"\x7f" * n, "little")
    states: dict[tuple[int, int], tuple[tuple[int, ...], int, int, int]] = {}
    for v in rng:
        pats = row_exp[v]  # byte u holds adj(u, v); byte v is already 0
        states.setdefault((1 << v, pats), ((v,), 1 << v, pats, 0xFF << (v << 3)))
    pool = list(states.values())
    for _ in range(1, n):
        best = -1
        grown: list[tuple[tuple[int, ...], int, int, int]] = []
        for order, mask, pats, pb in pool:
            for v in rng:
                if mask >> v & 1:
                    continue
                p = pats >> (v << 3) & 0xFF
                if p < best:
                    continue
                if p > best:
                    best = p
                    grown = []
                grown.append((order + (v,), mask | 1 << v, pats, pb | 0xFF << (v << 3)))
        states = {}
        for order, mask, pats, pb in grown:
            v = order[-1]
            new_pats = (((pats & low7) << 1) | row_exp[v]) & ~pb
            states.setdefault((mask, new_pats), (order, mask, new_pats, pb))
        pool = list(states.values())
    return pool[0][0]


def _canonical_order_wide(adj: Sequence[int], n: int) -> tuple[int, ...]:
    """Tuple-per-vertex variant for graphs too large to byte-pack."""
    rng = range(n)
    states: dict[tuple[int, tuple[int, ...]], tuple[tuple[int, ...], int, tuple[int, ...]]] = {}
    for v in rng:
        pats = tuple(-1 if u == v else adj[u] >> v & 1 for u in rng)
        states.setdefault((1 << v, pats), ((v,), 1 << v, pats))
    pool = list(states.values())
    for _ in range(1, n):
        best = -1
        grown: list[tuple[tuple[int, ...], int, tuple[int, ...]]] = []
        for order, mask, pats in pool:
            for v in rng:
                p = pats[v]
                if p < 0 or p < best:  # placed slots carry -1
                    continue
                if p > best:
                    best = p
                    grown = []
                grown.append((order + (v,), mask | 1 << v, pats))
        states = {}
        for order, mask, pats in grown:
            v = order[-1]
            av = adj[v]
            new_pats = tuple(
                -1 if (mask >> u & 1) else pats[u] << 1 | (av >> u & 1) for u in rng
            )
            states.setdefault((mask, new_pats), (order, mask, new_pats))
        pool = list(states.values())
    return pool[0][0]


def canonical_order(adj: Sequence[int]) -> tuple[int, ...]:
    """A vertex order achieving the maximal column-major adjacency code."""
    n = len(adj)
    if n <= 1:
        return tuple(range(n))
    if n <= 8:
        return _canonical_order_packed(adj, n)
    return _canonical_order_wide(adj, n)


def canonical_masks(adj: Sequence[int]) -> tuple[int, ...]:
    """Adjacency masks of the canonically relabeled graph (a full invariant)."""
    n = len(adj)
    order = canonical_order(adj)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        m = 0
        for u in bits(adj[v]):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return Graph(canonical_masks(g.adj))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_masks(g.adj) == canonical_masks(h.adj)
