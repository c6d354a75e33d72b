"""Canonical labelling of small graphs.

Equitable colour refinement followed by an individualisation search over
every leaf of the refinement tree, keeping the lexicographically largest
relabelled adjacency. Branches are pruned when the candidate vertex is a twin
of, or in the same orbit (under automorphisms already discovered that fix the
current path) as, a vertex already explored. Good for n up to about a dozen
vertices, which is all the enumerator needs.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    changed = True
    while changed:
        changed = False
        s = 0
        while s < len(cells):
            wmask = 0
            for v in cells[s]:
                wmask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    for key in sorted(groups):
                        out.append(groups[key])
            if split:
                cells = out
                changed = True
            s += 1
    return cells


def _twin_classes(adj, n: int) -> list[int]:
    """``rep[v]`` is the least vertex that is a (true or false) twin of ``v``."""
    rep = list(range(n))
    for v in range(n):
        for u in range(v):
            if rep[u] != u:
                continue
            mask = ~(1 << u | 1 << v)
            if adj[u] & mask == adj[v] & mask:
                rep[v] = u
                break
    return rep


class _Search:
    __slots__ = ("adj", "n", "twin", "best_code", "best_perm", "autos")

    def __init__(self, adj, n):
        self.adj = adj
        self.n = n
        self.twin = _twin_classes(adj, n)
        self.best_code = None
        self.best_perm = None
        self.autos: list[list[int]] = []

    def leaf(self, cells):
        perm = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        adj = self.adj
        code = []
        for v in perm:
            m = 0
            a = adj[v]
            while a:
                low = a & -a
                m |= 1 << pos[low.bit_length() - 1]
                a ^= low
            code.append(m)
        code = tuple(code)
        if self.best_code is None or code > self.best_code:
            self.best_code = code
            self.best_perm = perm
        elif code == self.best_code:
            gamma = [0] * self.n
            for a, b in zip(self.best_perm, perm):
                gamma[a] = b
            self.autos.append(gamma)

    def orbits(self, path):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in path):
                for x, y in enumerate(gamma):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return find

    def dfs(self, cells, path):
        cells = _refine(self.adj, cells)
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            self.leaf(cells)
            return
        cell = sorted(cells[target])
        tried: list[int] = []
        tried_twins: set[int] = set()
        n_autos = -1
        find = None
        for v in cell:
            if self.twin[v] in tried_twins:
                continue
            if tried and self.autos:
                if len(self.autos) != n_autos:
                    find = self.orbits(path)
                    n_autos = len(self.autos)
                fv = find(v)
                if any(find(t) == fv for t in tried):
                    continue
            tried.append(v)
            tried_twins.add(self.twin[v])
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self.dfs(child, path + [v])


def canonical_labeling(g: Graph) -> tuple[list[int], Graph]:
    """``(perm, canon)`` where ``perm[i]`` is the vertex of ``g`` placed at position ``i``.

    ``canon`` depends only on the isomorphism class of ``g``.
    """
    n = g.n
    if n <= 1:
        return list(range(n)), g
    search = _Search(g.adj, n)
    search.dfs([list(range(n))], [])
    return search.best_perm, Graph._trusted(n, search.best_code)


def canonical_form(g: Graph) -> Graph:
    return canonical_labeling(g)[1]


def certificate(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that is complete: equal iff isomorphic."""
    c = canonical_form(g)
    return c.n, c.adj


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(x.bit_count() for x in a.adj) != sorted(x.bit_count() for x in b.adj):
        return False
    return certificate(a) == certificate(b)


def automorphisms_brute(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by backtracking over adjacency-preserving partial maps."""
    n = g.n
    adj = g.adj
    out: list[tuple[int, ...]] = []
    img = [-1] * n

    def extend(v, used):
        if v == n:
            out.append(tuple(img))
            return
        for w in range(n):
            if used >> w & 1 or adj[w].bit_count() != adj[v].bit_count():
                continue
            if all((adj[v] >> u & 1) == (adj[w] >> img[u] & 1) for u in range(v)):
                img[v] = w
                extend(v + 1, used | 1 << w)
        img[v] = -1

    extend(0, 0)
    return out


__all__ = [
    "canonical_labeling",
    "canonical_form",
    "certificate",
    "is_isomorphic",
    "automorphisms_brute",
]
