"""Immutable simple graphs on vertices ``0..n-1`` backed by adjacency bitmasks.

Vertex sets are passed around either as iterables of ids or, internally, as
``int`` bitmasks where bit ``v`` marks membership of vertex ``v``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidVertexSetError

MAX_VERTICES = 1 << 16


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Instances are hashable
    and compare equal iff they have the same labelled adjacency.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int] = ()):
        adj = tuple(adj) if adj != () else (0,) * n
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full or a >> v & 1:
                raise ValueError(f"bad adjacency mask for vertex {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self._n = n
        self._adj = adj
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee a symmetric irreflexive relation
        g = object.__new__(cls)
        g._n = n
        g._adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexSetError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def check_set(g: Graph, s: Iterable[int] | int) -> int:
    """Return ``s`` as a bitmask, raising if it names a vertex outside ``g``."""
    if isinstance(s, int):
        mask = s
        if mask < 0 or mask >> g.n:
            raise InvalidVertexSetError(f"vertex mask {mask:#x} out of range for n={g.n}")
        return mask
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidVertexSetError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def induced_subgraph_labeled(g: Graph, s: Iterable[int] | int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``s`` plus the label map ``new id -> parent id``.

    New ids follow ascending parent ids.
    """
    mask = check_set(g, s)
    labels = tuple(bits(mask))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        a = 0
        for u in bits(g.adj[v] & mask):
            a |= 1 << index[u]
        adj.append(a)
    return Graph._trusted(len(labels), tuple(adj)), labels


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> Graph:
    return induced_subgraph_labeled(g, s)[0]


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by least vertex."""
    remaining = g.vertex_mask if within is None else within
    adj = g.adj
    comps = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    # the null graph counts as connected
    return len(component_masks(g)) <= 1


def is_coconnected(g: Graph) -> bool:
    return is_connected(complement(g))


def _disjoint_masks(g: Graph, a, b) -> tuple[int, int]:
    am, bm = check_set(g, a), check_set(g, b)
    if am & bm:
        raise InvalidVertexSetError("vertex sets must be disjoint")
    return am, bm


def is_complete_to(g: Graph, a: Iterable[int] | int, b: Iterable[int] | int) -> bool:
    am, bm = _disjoint_masks(g, a, b)
    return all(g.adj[v] & bm == bm for v in bits(am))


def is_anticomplete_to(g: Graph, a: Iterable[int] | int, b: Iterable[int] | int) -> bool:
    am, bm = _disjoint_masks(g, a, b)
    return all(not g.adj[v] & bm for v in bits(am))


def is_clique(g: Graph, s: int) -> bool:
    return all((g.adj[v] | 1 << v) & s == s for v in bits(s))


def is_stable(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


def bipartition(g: Graph) -> tuple[int, int] | None:
    """A 2-colouring ``(side0, side1)`` as bitmasks, or ``None`` if ``g`` has an odd cycle.

    Each component's least vertex goes to ``side0``.
    """
    side = [-1] * g.n
    for comp in component_masks(g):
        root = (comp & -comp).bit_length() - 1
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    s0 = to_mask(v for v in range(g.n) if side[v] == 0)
    return s0, g.vertex_mask & ~s0


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` with every ``a``-``b`` pair joined."""
    na = a.n
    bmask = ((1 << b.n) - 1) << na
    amask = (1 << na) - 1
    adj = [x | bmask for x in a.adj] + [(x << na) | amask for x in b.adj]
    return Graph._trusted(na + b.n, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    na = a.n
    return Graph._trusted(na + b.n, a.adj + tuple(x << na for x in b.adj))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v, a in enumerate(g.adj):
        m = 0
        for u in bits(a):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    return Graph._trusted(g.n, tuple(adj))


# --- named graphs --------------------------------------------------------


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    full = (1 << k) - 1
    return Graph._trusted(k, tuple(full & ~(1 << v) for v in range(k)))


def empty(k: int) -> Graph:
    return Graph._trusted(k, (0,) * k)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def wheel(rim: int) -> Graph:
    """Cycle on ``0..rim-1`` plus a hub ``rim`` adjacent to all of it."""
    return join(cycle(rim), complete(1))
