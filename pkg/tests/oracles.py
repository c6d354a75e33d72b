"""Brute-force reference implementations used only by the test-suite.

Nothing here calls the search code under test: patterns are matched by
enumerating vertex subsets, modules by checking every subset against the
definition, chromatic numbers by a subset DP, and graph catalogues come from
the networkx atlas. networkx also supplies isomorphism tests where the oracle
needs deduplication.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from bullhorn.graph import Graph

# reference pattern edge lists, labelled exactly as the library's catalogue
PATTERN_EDGES = {
    "P2": (2, [(0, 1)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "P5": (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "triangle": (3, [(0, 1), (0, 2), (1, 2)]),
    "3K1": (3, []),
    "bull": (5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
    "house": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]),
    "chair": (5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
    "gem": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
    "domino": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (2, 5)]),
}


def matrix(g: Graph) -> list[list[bool]]:
    return [[g.has_edge(u, v) for v in range(g.n)] for u in range(g.n)]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


@lru_cache(maxsize=None)
def atlas(n_max: int = 7) -> tuple[Graph, ...]:
    """Every graph with 1..n_max vertices (n_max <= 7), one per isomorphism class."""
    assert n_max <= 7
    return tuple(from_nx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= n_max)


def connected(g: Graph) -> bool:
    return g.n == 0 or nx.is_connected(to_nx(g))


def co_connected(g: Graph) -> bool:
    return g.n == 0 or nx.is_connected(nx.complement(to_nx(g)))


# --- patterns ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _code_table(name: str):
    k, edges = PATTERN_EDGES[name]
    pairs = list(itertools.combinations(range(k), 2))
    table: dict[frozenset, list[tuple[int, ...]]] = {}
    for perm in itertools.permutations(range(k)):
        code = frozenset(tuple(sorted((perm[a], perm[b]))) for a, b in edges)
        table.setdefault(code, []).append(perm)
    return k, pairs, table


def induced_witness(g: Graph, name: str) -> tuple[int, ...] | None:
    """Lexicographically least tuple t such that i -> t[i] embeds the pattern as an induced subgraph."""
    k, pairs, table = _code_table(name)
    mat = matrix(g)
    best = None
    for subset in itertools.combinations(range(g.n), k):
        code = frozenset((a, b) for a, b in pairs if mat[subset[a]][subset[b]])
        for perm in table.get(code, ()):
            cand = tuple(subset[perm[i]] for i in range(k))
            if best is None or cand < best:
                best = cand
    return best


def has_hole(g: Graph, min_len: int, odd_only: bool = False) -> bool:
    mat = matrix(g)
    for size in range(min_len, g.n + 1):
        if odd_only and size % 2 == 0:
            continue
        for subset in itertools.combinations(range(g.n), size):
            if _induces_cycle(mat, subset):
                return True
    return False


def _induces_cycle(mat, subset) -> bool:
    if any(sum(mat[u][v] for v in subset) != 2 for u in subset):
        return False
    # 2-regular: a single cycle iff connected
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        u = stack.pop()
        for v in subset:
            if mat[u][v] and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(subset)


# --- modules ----------------------------------------------------------------


def modules(g: Graph) -> list[frozenset]:
    """All nonempty modules (including singletons and V) by the definition."""
    mat = matrix(g)
    n = g.n
    out = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            inside = set(subset)
            if all(len({mat[x][y] for y in subset}) == 1 for x in range(n) if x not in inside):
                out.append(frozenset(subset))
    return out


def homogeneous_sets(g: Graph) -> list[frozenset]:
    return [m for m in modules(g) if 1 < len(m) < g.n]


def least_pair_module(g: Graph) -> tuple[int, ...] | None:
    """Lex-least sorted list among the smallest modules containing a pair, when proper."""
    mods = modules(g)
    best = None
    for u, v in itertools.combinations(range(g.n), 2):
        smallest = frozenset(range(g.n))
        for m in mods:
            if u in m and v in m:
                smallest &= m
        if len(smallest) < g.n:
            cand = tuple(sorted(smallest))
            if best is None or cand < best:
                best = cand
    return best


def maximal_proper_modules(g: Graph) -> set[frozenset]:
    proper = [m for m in modules(g) if len(m) < g.n]
    return {m for m in proper if not any(m < other for other in proper)}


# --- colouring --------------------------------------------------------------


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in range(g.n) if g.has_edge(u, v)) for u in range(g.n)]


def stable_by_subset(g: Graph) -> list[bool]:
    adj = _adj_masks(g)
    n = g.n
    stable = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        stable[s] = stable[rest] and not adj[low] & rest
    return stable


def chi_by_subset(g: Graph) -> list[int]:
    """chi[S] for every vertex subset S: peel off a stable set containing the lowest vertex."""
    n = g.n
    stable = stable_by_subset(g)
    chi = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        best = n + 1
        sub = rest
        while True:
            piece = sub | low
            if stable[piece]:
                c = chi[s ^ piece] + 1
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return chi


def omega_by_subset(g: Graph) -> list[int]:
    adj = _adj_masks(g)
    n = g.n
    om = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        om[s] = max(om[rest], 1 + om[rest & adj[low]])
    return om


def chromatic_number(g: Graph) -> int:
    return chi_by_subset(g)[-1] if g.n else 0


def is_k_critical(g: Graph, k: int) -> bool:
    """chi(G) = k and every proper induced subgraph is (k-1)-colourable, checked on every subset."""
    chi = chi_by_subset(g)
    full = (1 << g.n) - 1
    return chi[full] == k and all(chi[s] <= k - 1 for s in range(full))


def is_perfect(g: Graph) -> bool:
    """chi = omega on every induced subgraph."""
    chi, om = chi_by_subset(g), omega_by_subset(g)
    return all(c == w for c, w in zip(chi, om))


def independence_number(g: Graph) -> int:
    stable = stable_by_subset(g)
    return max(bin(s).count("1") for s in range(1 << g.n) if stable[s])


# --- census -----------------------------------------------------------------


def _free_of(g: Graph, names) -> bool:
    return all(induced_witness(g, name) is None for name in names)


def _dedup(graphs: list[Graph]) -> list[Graph]:
    kept: list[tuple[Graph, nx.Graph]] = []
    for g in graphs:
        h = to_nx(g)
        if not any(nx.is_isomorphic(h, other) for _, other in kept):
            kept.append((g, h))
    return [g for g, _ in kept]


def critical_census(k: int, n_max: int, names=("P5", "bull")) -> list[Graph]:
    """Connected k-critical graphs avoiding ``names`` on at most ``n_max`` vertices (n_max <= 8).

    Orders up to 7 come straight from the atlas. Order 8 graphs are built by
    adding a vertex to every connected (k-1)-colourable class member on 7
    vertices, since deleting any vertex of a k-critical graph leaves one.
    """
    assert n_max <= 8
    found = [g for g in atlas(min(n_max, 7)) if connected(g) and _free_of(g, names) and is_k_critical(g, k)]
    if n_max == 8:
        parents = [
            g for g in atlas(7)
            if g.n == 7 and connected(g) and _free_of(g, names) and chromatic_number(g) <= k - 1
        ]
        children = []
        for p in parents:
            for s in range(1, 1 << 7):
                edges = list(p.edges()) + [(v, 7) for v in range(7) if s >> v & 1]
                child = Graph.from_edges(8, edges)
                if _free_of(child, names) and is_k_critical(child, k):
                    children.append(child)
        found.extend(_dedup(children))
    return found
