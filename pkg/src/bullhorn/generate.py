"""Exhaustive generation of small graphs inside a hereditary class.

Graphs on ``n + 1`` vertices are produced by attaching a new vertex to every
graph on ``n`` vertices in every possible way, discarding children that
contain a forbidden pattern through the new vertex and merging isomorphic
children by canonical form. Every graph arises this way from one of its
vertex-deleted subgraphs; for connected graphs a non-cut vertex always exists,
so generating connected children of connected parents is complete too.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_form
from .graph import Graph, complement, is_connected
from .patterns import PatternKind, contains_through


def _children(parent: Graph, connected: bool) -> Iterator[tuple[int, ...]]:
    n = parent.n
    adj = parent.adj
    bit = 1 << n
    start = 1 if connected and n > 0 else 0
    for s in range(start, 1 << n):
        child = list(adj)
        t = s
        while t:
            low = t & -t
            child[low.bit_length() - 1] |= bit
            t ^= low
        child.append(s)
        yield tuple(child)


def extend_level(
    parents: Iterable[Graph],
    forbidden: Sequence[PatternKind] = (),
    connected: bool = True,
    keep: Callable[[Graph], bool] | None = None,
    complement_forbidden: Sequence[PatternKind] = (),
    rejected: list[Graph] | None = None,
) -> list[Graph]:
    """Canonical graphs one vertex larger than ``parents`` that stay in the class.

    ``keep`` is an optional extra hereditary predicate evaluated once per new
    isomorphism class; classes it turns down are appended to ``rejected``
    when given. ``complement_forbidden`` lists patterns whose complements are
    forbidden (checked on the complement of the child).
    """
    seen: set[Graph] = set()
    out: list[Graph] = []
    for parent in parents:
        n = parent.n
        full = (1 << (n + 1)) - 1
        for child_adj in _children(parent, connected):
            if forbidden and contains_through(child_adj, n + 1, forbidden, n):
                continue
            if complement_forbidden:
                co = tuple(full & ~a & ~(1 << v) for v, a in enumerate(child_adj))
                if contains_through(co, n + 1, complement_forbidden, n):
                    continue
            canon = canonical_form(Graph._trusted(n + 1, child_adj))
            if canon in seen:
                continue
            seen.add(canon)
            if keep is None or keep(canon):
                out.append(canon)
            elif rejected is not None:
                rejected.append(canon)
    out.sort(key=lambda g: g.adj)
    if rejected is not None:
        rejected.sort(key=lambda g: g.adj)
    return out


def generate(
    n_max: int,
    forbidden: Sequence[PatternKind] = (),
    connected: bool = True,
    keep: Callable[[Graph], bool] | None = None,
    complement_forbidden: Sequence[PatternKind] = (),
) -> dict[int, list[Graph]]:
    """All graphs with ``1 <= n <= n_max`` vertices in the class, by level.

    Each graph appears exactly once, in its canonical labelling.
    """
    levels: dict[int, list[Graph]] = {}
    if n_max < 1:
        return levels
    k1 = Graph(1)
    levels[1] = [k1] if keep is None or keep(k1) else []
    for n in range(2, n_max + 1):
        levels[n] = extend_level(levels[n - 1], forbidden, connected, keep, complement_forbidden)
    return levels


def all_graphs(n_max: int) -> dict[int, list[Graph]]:
    """Every graph up to isomorphism on ``1..n_max`` vertices, connected or not."""
    return generate(n_max, connected=False)


def connected_only(levels: dict[int, list[Graph]]) -> dict[int, list[Graph]]:
    return {n: [g for g in gs if is_connected(g)] for n, gs in levels.items()}


def complements(graphs: Iterable[Graph]) -> list[Graph]:
    return [canonical_form(complement(g)) for g in graphs]
