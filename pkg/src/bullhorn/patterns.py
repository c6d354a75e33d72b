"""Induced-subgraph detection for small forbidden patterns and holes.

Fixed patterns are matched by backtracking over bitmask candidate sets. Each
reference graph is labelled so that every vertex after the first (in the
connected patterns) has an earlier neighbour, which keeps the candidate sets
small from the second step on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph, bits, complement, complete, cycle, empty, induced_subgraph, path


class PatternKind(enum.Enum):
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    C4 = "C4"
    TRIANGLE = "triangle"
    THREE_K1 = "3K1"
    BULL = "bull"
    HOUSE = "house"
    CHAIR = "chair"
    GEM = "gem"
    DOMINO = "domino"
    HOLE = "hole"
    ODD_HOLE = "odd_hole"

    @property
    def is_fixed(self) -> bool:
        return self not in (PatternKind.HOLE, PatternKind.ODD_HOLE)

    @classmethod
    def parse(cls, name: str) -> "PatternKind":
        key = name.strip().lower().replace("-", "_")
        for kind in cls:
            if kind.value.lower() == key or kind.name.lower() == key:
                return kind
        aliases = {"k3": cls.TRIANGLE, "3k1": cls.THREE_K1, "oddhole": cls.ODD_HOLE}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown pattern {name!r}")


def _reference(kind: PatternKind) -> Graph:
    if kind is PatternKind.P2:
        return path(2)
    if kind is PatternKind.P3:
        return path(3)
    if kind is PatternKind.P4:
        return path(4)
    if kind is PatternKind.P5:
        return path(5)
    if kind is PatternKind.C4:
        return cycle(4)
    if kind is PatternKind.TRIANGLE:
        return complete(3)
    if kind is PatternKind.THREE_K1:
        return empty(3)
    if kind is PatternKind.BULL:
        # pendant 0, triangle 1-2-4, pendant 3
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])
    if kind is PatternKind.HOUSE:
        # square 0-1-2-3, roof 4 over the edge 0-1
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
    if kind is PatternKind.CHAIR:
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    if kind is PatternKind.GEM:
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
    if kind is PatternKind.DOMINO:
        # 6-cycle 0..5 with the chord 2-5 splitting it into two squares
        return Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(2, 5)])
    raise ValueError(f"{kind.value} has no fixed reference graph")


@lru_cache(maxsize=None)
def reference_graph(kind: PatternKind) -> Graph:
    return _reference(kind)


@dataclass(frozen=True)
class Embedding:
    """Witness that ``pattern`` occurs induced on ``vertices`` of some graph.

    For fixed patterns ``vertices[i]`` is the image of reference vertex ``i``.
    For holes the vertices are listed in cyclic order.
    """

    pattern: PatternKind
    vertices: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        """Re-check the witness directly against the definition of the pattern."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        if self.pattern.is_fixed:
            ref = reference_graph(self.pattern)
            if ref.n != len(vs):
                return False
            return all(
                g.has_edge(vs[i], vs[j]) == ref.has_edge(i, j)
                for i in range(ref.n)
                for j in range(i + 1, ref.n)
            )
        k = len(vs)
        if k < 4 or (self.pattern is PatternKind.ODD_HOLE and k % 2 == 0):
            return False
        return all(
            g.has_edge(vs[i], vs[j]) == ((j - i) % k in (1, k - 1))
            for i in range(k)
            for j in range(i + 1, k)
        )

    def as_dict(self) -> dict:
        return {"pattern": self.pattern.value, "vertices": list(self.vertices)}


# --- fixed-pattern backtracking -----------------------------------------

Plan = tuple[tuple[int, tuple[int, ...], tuple[int, ...], int], ...]


def _plan(ref: Graph, order: Sequence[int]) -> Plan:
    """Steps ``(pattern vertex, adjacent earlier steps, nonadjacent earlier steps, degree)``."""
    steps = []
    for pos, p in enumerate(order):
        earlier = order[:pos]
        adj_steps = tuple(i for i, q in enumerate(earlier) if ref.has_edge(p, q))
        non_steps = tuple(i for i, q in enumerate(earlier) if not ref.has_edge(p, q))
        steps.append((p, adj_steps, non_steps, ref.degree(p)))
    return tuple(steps)


@lru_cache(maxsize=None)
def _natural_plan(kind: PatternKind) -> Plan:
    ref = reference_graph(kind)
    return _plan(ref, list(range(ref.n)))


@lru_cache(maxsize=None)
def _anchored_plans(kind: PatternKind) -> tuple[Plan, ...]:
    """One plan per pattern vertex, starting there and growing in BFS order."""
    ref = reference_graph(kind)
    plans = []
    for start in range(ref.n):
        order = [start]
        seen = {start}
        i = 0
        while len(order) < ref.n:
            if i < len(order):
                for q in ref.neighbors(order[i]):
                    if q not in seen:
                        seen.add(q)
                        order.append(q)
                i += 1
            else:
                q = min(set(range(ref.n)) - seen)
                seen.add(q)
                order.append(q)
        plans.append(_plan(ref, order))
    return tuple(plans)


def _degree_masks(g: Graph, upto: int) -> list[int]:
    masks = [0] * (upto + 1)
    for v, a in enumerate(g.adj):
        d = min(a.bit_count(), upto)
        masks[d] |= 1 << v
    # masks[d] -> vertices of degree >= d
    for d in range(upto - 1, -1, -1):
        masks[d] |= masks[d + 1]
    return masks


def _search(adj: Sequence[int], plan: Plan, img: list[int], avail: int, degmask: list[int]) -> bool:
    depth = len(img)
    if depth == len(plan):
        return True
    _, adj_steps, non_steps, deg = plan[depth]
    cand = avail & degmask[deg]
    for j in adj_steps:
        cand &= adj[img[j]]
    for j in non_steps:
        cand &= ~adj[img[j]]
    while cand:
        low = cand & -cand
        img.append(low.bit_length() - 1)
        if _search(adj, plan, img, avail & ~low, degmask):
            return True
        img.pop()
        cand ^= low
    return False


def _unpermute(plan: Plan, img: list[int]) -> tuple[int, ...]:
    out = [0] * len(plan)
    for (p, *_), v in zip(plan, img):
        out[p] = v
    return tuple(out)


def find_induced(g: Graph, kind: PatternKind) -> Embedding | None:
    """Lexicographically least induced copy of a fixed pattern, if any.

    The witness minimises the tuple of images of the reference vertices
    taken in reference order.
    """
    if not kind.is_fixed:
        return find_hole(g, 5, kind is PatternKind.ODD_HOLE)
    plan = _natural_plan(kind)
    if len(plan) > g.n:
        return None
    img: list[int] = []
    if _search(g.adj, plan, img, g.vertex_mask, _degree_masks(g, len(plan))):
        return Embedding(kind, _unpermute(plan, img))
    return None


def find_induced_through(g: Graph, kind: PatternKind, v: int) -> Embedding | None:
    """Some induced copy of ``kind`` that uses vertex ``v`` (not necessarily lex-least)."""
    plans = _anchored_plans(kind)
    if len(plans[0]) > g.n:
        return None
    degmask = _degree_masks(g, len(plans[0]))
    avail = g.vertex_mask & ~(1 << v)
    adj = g.adj
    dv = adj[v].bit_count()
    for plan in plans:
        if plan[0][3] > dv:
            continue
        img = [v]
        if _search(adj, plan, img, avail, degmask):
            return Embedding(kind, _unpermute(plan, img))
    return None


def contains_through(adj: Sequence[int], n: int, kinds: Iterable[PatternKind], v: int) -> bool:
    """Fast membership test used by the enumerator: does any pattern embed through ``v``?"""
    full = (1 << n) - 1
    avail = full & ~(1 << v)
    dv = adj[v].bit_count()
    degmask = None
    for kind in kinds:
        plans = _anchored_plans(kind)
        if len(plans[0]) > n:
            continue
        if degmask is None:
            degmask = [full] + [0] * 6
            for u in range(n):
                d = min(adj[u].bit_count(), 6)
                for e in range(1, d + 1):
                    degmask[e] |= 1 << u
        for plan in plans:
            if plan[0][3] > dv:
                continue
            if _search(adj, plan, [v], avail, degmask):
                return True
    return False


# --- holes ----------------------------------------------------------------


def find_hole(g: Graph, min_len: int = 5, odd_only: bool = False) -> Embedding | None:
    """A chordless cycle of length >= ``min_len`` (odd if ``odd_only``), in cyclic order.

    Cycles are grown as induced paths from their least vertex; the first one
    found in ascending DFS order is returned. Exponential in the worst case,
    intended for n <= 20.
    """
    if min_len < 4:
        raise ValueError("min_len must be at least 4")
    adj = g.adj
    kind = PatternKind.ODD_HOLE if odd_only else PatternKind.HOLE
    for s in range(g.n):
        above = g.vertex_mask & ~((1 << (s + 1)) - 1)
        s_nbrs = adj[s] & above
        for p1 in bits(s_nbrs):
            # vertices adjacent to s other than p1 may only close the cycle
            found = _grow_hole(adj, [s, p1], above & ~adj[s], s_nbrs & ~(1 << p1),
                               1 << s | 1 << p1, min_len, odd_only)
            if found:
                return Embedding(kind, tuple(found))
    return None


def _grow_hole(adj, walk, free, closers, blocked, min_len, odd_only):
    # walk: induced path from the cycle's least vertex; blocked: walk plus the
    # neighbourhoods of its interior vertices
    tail = walk[-1]
    length = len(walk) + 1
    if length >= 4 and length >= min_len and (not odd_only or length % 2):
        # closing vertex: adjacent to tail and s, nonadjacent to interior
        close = adj[tail] & closers & ~blocked
        if close:
            c = (close & -close).bit_length() - 1
            return walk + [c]
    ext = adj[tail] & free & ~blocked
    newly_blocked = blocked | adj[tail]
    for x in bits(ext):
        walk.append(x)
        found = _grow_hole(adj, walk, free, closers, newly_blocked | 1 << x, min_len, odd_only)
        if found:
            return found
        walk.pop()
    return None


def odd_hole_or_antihole(g: Graph) -> Embedding | None:
    """Witness of imperfection: an odd hole in ``g`` or in its complement.

    An antihole witness is returned with pattern ``ODD_HOLE`` and its vertex
    order is a hole of the complement.
    """
    hole = find_hole(g, 5, True)
    if hole is not None:
        return hole
    return find_hole(complement(g), 5, True)


def is_free(g: Graph, family: Iterable[PatternKind]) -> tuple[bool, Embedding | None]:
    """Whether ``g`` has none of ``family`` as an induced subgraph, with the first witness found."""
    for kind in family:
        emb = find_induced(g, kind)
        if emb is not None:
            return False, emb
    return True, None


def matches_reference(g: Graph, kind: PatternKind, vertices: Sequence[int]) -> bool:
    return Embedding(kind, tuple(vertices)).validate(g)


def induced_on(g: Graph, emb: Embedding) -> Graph:
    return induced_subgraph(g, emb.vertices)
