"""Immutable simple graphs on small vertex sets.

Vertices are the integers 0..n-1 and every neighborhood is a Python int
bitset, so set intersection, union and containment are single integer
operations.  That keeps the solver and the exhaustive corpus sweeps
allocation-light without reaching for numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

GRAPH6_MAX_ORDER = 62  # single-byte graph6 headers only
GENERATOR_MAX_ORDER = 7  # 2^21 candidate edge masks is the exhaustive limit


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph, immutable once constructed.

    ``adj[v]`` is the open-neighborhood bitset of ``v``; ``closed[v]``
    additionally contains ``v`` itself.  Construction validates symmetry
    and loop-freeness, so any reachable instance is a simple graph.
    """

    __slots__ = ("n", "m", "adj", "closed")

    def __init__(self, n: int, neighbor_masks: Sequence[int]):
        masks = tuple(neighbor_masks)
        if n < 1:
            raise ValueError("graph order must be at least 1")
        if len(masks) != n:
            raise ValueError(f"expected {n} neighbor masks, got {len(masks)}")
        full = (1 << n) - 1
        degree_sum = 0
        for v, mask in enumerate(masks):
            if mask & ~full:
                raise ValueError(f"neighbor mask of vertex {v} mentions vertices >= {n}")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            degree_sum += mask.bit_count()
        for v, mask in enumerate(masks):
            for u in iter_bits(mask):
                if not (masks[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.m = degree_sum // 2
        self.adj = masks
        self.closed = tuple(mask | (1 << v) for v, mask in enumerate(masks))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max(mask.bit_count() for mask in self.adj)

    @property
    def min_degree(self) -> int:
        return min(mask.bit_count() for mask in self.adj)

    def neighbors(self, v: int) -> set[int]:
        return set(iter_bits(self.adj[v]))

    def closed_neighbors(self, v: int) -> set[int]:
        return set(iter_bits(self.closed[v]))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u},{v}) out of range for order {self.n}")
        return u != v and bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            base = u + 1
            while rest:
                low = rest & -rest
                out.append((u, base + low.bit_length() - 1))
                rest ^= low
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CycleSpec:
    """A cycle given by its vertex sequence (cyclically consecutive = adjacent)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("cycle length must be at least 3")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle repeats a vertex")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless this is a cycle of ``g``."""
        for v in self.vertices:
            if not 0 <= v < g.n:
                raise ValueError(f"cycle vertex {v} out of range for order {g.n}")
        seq = self.vertices
        for a, b in zip(seq, seq[1:] + seq[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"consecutive cycle vertices {a} and {b} are not adjacent")


def from_edges(n: int, edges) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate pairs collapse."""
    masks = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for order {n}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks)


def make_named(family: str, n: int) -> Graph:
    """Standard labeled families: path, cycle, complete, star (hub = 0, n leaves)."""
    if family == "path":
        if n < 1:
            raise ValueError("path needs n >= 1")
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return from_edges(n, [(i, j) for j in range(n) for i in range(j)])
    if family == "star":
        if n < 1:
            raise ValueError("star needs at least 1 leaf")
        return from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
    raise ValueError(f"unknown family {family!r}; expected path/cycle/complete/star")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (orders 1..62, single-byte header form).

    The body packs the upper triangle column-by-column, bit (i, j) for
    i < j in the order (0,1), (0,2), (1,2), (0,3), ..., six bits per byte
    (most significant first), each byte offset by 63, padded with zeros.
    """
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for idx, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)!r} outside graph6 range 63..126", idx)
    if s[0] == "~":
        raise Graph6Error(f"multi-byte order header (n > {GRAPH6_MAX_ORDER}) unsupported", 0)
    n = ord(s[0]) - 63
    if n < 1:
        raise Graph6Error("graph order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) < 1 + nbytes:
        raise Graph6Error(f"truncated body: expected {1 + nbytes} bytes, got {len(s)}", len(s))
    if len(s) > 1 + nbytes:
        raise Graph6Error("trailing garbage after graph6 body", 1 + nbytes)
    masks = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + t // 6]) - 63
            if (byte >> (5 - t % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            t += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, masks)


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line; inverse of :func:`parse_graph6`."""
    if g.n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 encoder supports n <= {GRAPH6_MAX_ORDER}, got {g.n}")
    out = [chr(63 + g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        out.append(chr(63 + (group << (6 - filled))))
    return "".join(out)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability of every vertex from vertex 0."""
    full = (1 << g.n) - 1
    reach = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach == full


def cut_vertices(g: Graph) -> set[int]:
    """Vertices whose removal disconnects ``g`` (lowpoint DFS)."""
    if not is_connected(g):
        raise ValueError("cut_vertices requires a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    adj = g.adj
    timer = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        children = 0
        for u in iter_bits(adj[v]):
            if disc[u] == -1:
                children += 1
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if parent != -1 and low[u] >= disc[v]:
                    cuts.add(v)
            elif u != parent:
                low[v] = min(low[v], disc[u])
        if parent == -1 and children >= 2:
            cuts.add(v)

    dfs(0, -1)
    return cuts


def bridges(g: Graph) -> set[tuple[int, int]]:
    """Edges whose removal disconnects ``g``, as (u, v) pairs with u < v."""
    if not is_connected(g):
        raise ValueError("bridges requires a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[tuple[int, int]] = set()
    adj = g.adj
    timer = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        for u in iter_bits(adj[v]):
            if disc[u] == -1:
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] > disc[v]:
                    out.add((v, u) if v < u else (u, v))
            elif u != parent:
                low[v] = min(low[v], disc[u])

    dfs(0, -1)
    return out


def enumerate_cycles(g: Graph, max_len: int) -> list[CycleSpec]:
    """All cycles of length 3..max_len, each reported once.

    The reported rotation starts at the cycle's minimum vertex and runs
    toward the smaller of its two cycle-neighbors, which deduplicates
    rotations and reflections.
    """
    if not 3 <= max_len <= g.n:
        raise ValueError(f"need 3 <= max_len <= {g.n}, got {max_len}")
    adj = g.adj
    out: list[CycleSpec] = []

    for s in range(g.n):
        above = -1 << (s + 1)  # vertices strictly greater than s
        path = [s]

        def extend(used: int) -> None:
            u = path[-1]
            if len(path) >= 3 and (adj[u] >> s) & 1 and path[1] < u:
                out.append(CycleSpec(tuple(path)))
            if len(path) == max_len:
                return
            rest = adj[u] & above & ~used
            while rest:
                low = rest & -rest
                rest ^= low
                path.append(low.bit_length() - 1)
                extend(used | low)
                path.pop()

        for v1 in iter_bits(adj[s] & above):
            path = [s, v1]
            extend((1 << s) | (1 << v1))
    return out


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All labeled simple connected graphs of order ``n``, in ascending
    edge-mask order (bit t of the mask is the t-th pair (0,1),(0,2),(1,2),...).

    Connectivity here is decided by union-find, independently of the
    traversal in :func:`is_connected`.
    """
    if not 1 <= n <= GENERATOR_MAX_ORDER:
        raise ValueError(
            f"corpus generator supports 1 <= n <= {GENERATOR_MAX_ORDER}, got {n}"
        )
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        masks = [0] * n
        parent = list(range(n))
        components = n
        rest = code
        t = 0
        while rest:
            if rest & 1:
                i, j = pairs[t]
                masks[i] |= 1 << j
                masks[j] |= 1 << i
                ri = i
                while parent[ri] != ri:
                    parent[ri] = parent[parent[ri]]
                    ri = parent[ri]
                rj = j
                while parent[rj] != rj:
                    parent[rj] = parent[parent[rj]]
                    rj = parent[rj]
                if ri != rj:
                    parent[rj] = ri
                    components -= 1
            rest >>= 1
            t += 1
        if components == 1:
            yield Graph(n, masks)
