"""The six graph operations whose effect on the domination chromatic
number is bounded: vertex/edge removal, edge/vertex contraction,
k-subdivision, and cycle extending.

Vertex ids are compacted order-preservingly after removal, and a merged
vertex takes the smaller original id's slot; the ``*_index_map`` helpers
expose those deterministic mappings so colorings can be transferred.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CycleSpec, Graph


def _drop_slot(mask: int, v: int) -> int:
    """Remove bit position v from a bitset, shifting higher bits down."""
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


def removal_index_map(n: int, v: int) -> tuple[int | None, ...]:
    """Old vertex id -> id in the graph with v removed (None for v)."""
    return tuple(None if w == v else w - (w > v) for w in range(n))


def contraction_index_map(n: int, u: int, v: int) -> tuple[int, ...]:
    """Old vertex id -> id after merging u and v into min(u, v)'s slot."""
    u, v = sorted((u, v))
    return tuple(u if w == v else w - (w > v) for w in range(n))


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete v and all incident edges; remaining ids compact downward."""
    if g.n < 2:
        raise ValueError("cannot remove a vertex from a graph of order 1")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    masks = [
        _drop_slot(g.adj[w] & ~(1 << v), v) for w in range(g.n) if w != v
    ]
    return Graph(g.n - 1, masks)


def remove_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Delete one edge, keeping every vertex."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    masks = list(g.adj)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, masks)


def _contract(g: Graph, u: int, v: int) -> Graph:
    u, v = sorted((u, v))
    merged = (g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)
    masks = []
    for w in range(g.n):
        if w == v:
            continue
        if w == u:
            mask = merged
        else:
            mask = g.adj[w]
            if (mask >> v) & 1:
                mask = (mask & ~(1 << v)) | (1 << u)
        masks.append(_drop_slot(mask, v))
    return Graph(g.n - 1, masks)


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract an edge; parallels collapse and no loop appears."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge; use contract_vertices")
    return _contract(g, u, v)


def contract_vertices(g: Graph, u: int, v: int) -> Graph:
    """Merge a non-adjacent vertex pair into one vertex."""
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is an edge; use contract_edge")
    return _contract(g, u, v)


@dataclass(frozen=True)
class SubdivisionMap:
    """Correspondence between edges of g and superedges of its k-subdivision.

    ``superedges[(u, v)]`` (u < v) is the full path u, x_1, ..., x_{k-1}, v
    in the subdivided graph; base vertices keep their ids.
    """

    path_length: int
    base_vertex_map: tuple[int, ...]
    superedges: dict[tuple[int, int], tuple[int, ...]]

    def internal_vertices(self) -> set[int]:
        base = set(self.base_vertex_map)
        return {x for path in self.superedges.values() for x in path if x not in base}


def subdivide(g: Graph, k: int) -> tuple[Graph, SubdivisionMap]:
    """Replace every edge with a path of length k; k = 1 reproduces g exactly.

    Internal vertex ids are assigned in sorted edge order, so the result
    is deterministic: edge number t gets ids n + t(k-1) .. n + (t+1)(k-1) - 1.
    """
    if k < 1:
        raise ValueError("path length must be at least 1")
    n2 = g.n + g.m * (k - 1)
    masks = [0] * n2
    superedges: dict[tuple[int, int], tuple[int, ...]] = {}
    nxt = g.n
    for u, v in g.edges():
        path = [u] + list(range(nxt, nxt + k - 1)) + [v]
        nxt += k - 1
        for a, b in zip(path, path[1:]):
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        superedges[(u, v)] = tuple(path)
    smap = SubdivisionMap(k, tuple(range(g.n)), superedges)
    return Graph(n2, masks), smap


def cycle_extend(g: Graph, c: CycleSpec) -> Graph:
    """Add a hub adjacent to exactly the vertices of the cycle c."""
    c.validate(g)
    hub_mask = 0
    for v in c.vertices:
        hub_mask |= 1 << v
    hub_bit = 1 << g.n
    masks = [
        g.adj[w] | (hub_bit if (hub_mask >> w) & 1 else 0) for w in range(g.n)
    ]
    masks.append(hub_mask)
    return Graph(g.n + 1, masks)
