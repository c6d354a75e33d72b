"""Vertex-criticality checks, enumeration of k-critical graphs in a hereditary class, and critical blowups."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .budget import desk_budget
from .canon import automorphisms_brute, canonical_form
from .coloring import chromatic_number, k_colorable
from .errors import BudgetExceededError, DecompositionError
from .generate import extend_level
from .graph import Graph, complement, delete_vertex, is_connected
from .modular import blowup_with_blocks, clique_skeleton, is_prime
from .patterns import PatternKind

DEFAULT_ENUMERATION_BUDGET = 10


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    chi: int
    is_critical: bool
    failing_vertex: int | None
    per_vertex_chi: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "chi": self.chi,
            "is_critical": self.is_critical,
            "failing_vertex": self.failing_vertex,
            "per_vertex_chi": list(self.per_vertex_chi),
        }


def is_k_critical(g: Graph, k: int) -> CriticalityReport:
    """Check chi(g) == k and chi(g - v) == k - 1 for every vertex ``v``.

    Vertex deletions suffice because every proper induced subgraph lies
    inside some ``g - v`` and chi is monotone under induced subgraphs.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    chi = chromatic_number(g).k
    per_vertex = tuple(chromatic_number(delete_vertex(g, v)).k for v in range(g.n))
    failing = None
    if chi == k:
        failing = next((v for v, c in enumerate(per_vertex) if c != k - 1), None)
    critical = chi == k and failing is None
    return CriticalityReport(k, chi, critical, failing, per_vertex)


@dataclass
class EnumerationRun:
    """Result of :func:`enumerate_critical`.

    ``found`` holds the k-critical graphs in canonical form, smallest first.
    ``counts_by_n`` counts them per order; ``class_counts_by_n`` counts the
    connected, (k-1)-colourable class members that were extended.
    """

    class_filter: tuple[PatternKind, ...]
    k: int
    n_max: int
    found: list[Graph] = field(default_factory=list)
    counts_by_n: dict[int, int] = field(default_factory=dict)
    class_counts_by_n: dict[int, int] = field(default_factory=dict)
    wall_time: float = 0.0

    def summary(self) -> dict:
        return {
            "filter": [p.value for p in self.class_filter],
            "k": self.k,
            "n_max": self.n_max,
            "found": len(self.found),
            "counts_by_n": {str(n): c for n, c in sorted(self.counts_by_n.items())},
            "class_counts_by_n": {str(n): c for n, c in sorted(self.class_counts_by_n.items())},
            "wall_time": round(self.wall_time, 3),
        }


def enumerate_critical(
    class_filter: Sequence[PatternKind],
    k: int,
    n_max: int,
    budget: int | None = None,
) -> EnumerationRun:
    """All connected k-critical graphs on at most ``n_max`` vertices avoiding ``class_filter``.

    Generation grows connected graphs one vertex at a time inside the class
    and also keeps only (k-1)-colourable graphs, which is hereditary and holds
    for every proper induced subgraph of a k-critical graph. A k-critical
    graph minus any vertex is connected, so each one is met as a child of a
    kept graph; such children have chromatic number exactly k and are tested
    for criticality.
    """
    limit = desk_budget(DEFAULT_ENUMERATION_BUDGET) if budget is None else budget
    if n_max > limit:
        raise BudgetExceededError(n_max, limit)
    if k < 1:
        raise ValueError("k must be at least 1")
    started = time.perf_counter()
    kinds = tuple(class_filter)
    run = EnumerationRun(kinds, k, n_max)

    def colourable(g: Graph) -> bool:
        return k_colorable(g, k - 1) is not None

    level: list[Graph] = []
    for n in range(1, n_max + 1):
        if n == 1:
            k1 = Graph(1)
            kept, overflow = ([k1], []) if colourable(k1) else ([], [k1])
        else:
            overflow = []
            kept = extend_level(level, kinds, connected=True, keep=colourable, rejected=overflow)
        found = [g for g in overflow if is_k_critical(g, k).is_critical]
        run.found.extend(found)
        run.counts_by_n[n] = len(found)
        run.class_counts_by_n[n] = len(kept)
        level = kept
        if not level:
            for m in range(n + 1, n_max + 1):
                run.counts_by_n[m] = 0
                run.class_counts_by_n[m] = 0
            break
    run.wall_time = time.perf_counter() - started
    return run


def _max_weight_clique_through(adj: tuple[int, ...], weight: list[int], v: int, allowed: int) -> int:
    best = 0

    def grow(total: int, cand: int) -> None:
        nonlocal best
        if total > best:
            best = total
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            grow(total + weight[u], cand & adj[u])

    grow(weight[v], adj[v] & allowed)
    return best


def critical_blowups(base: Graph, k: int, mult_cap: int) -> list[Graph]:
    """k-critical blowups of a prime ``base`` with clique sizes in ``1..mult_cap``.

    Multiplicity vectors are enumerated once per orbit of the base's
    automorphism group, pruned by the requirement that the heaviest clique is
    at most k (a clique of weight > k would already force chi > k).
    Results are canonical forms, deduplicated.
    """
    if mult_cap < 1:
        raise ValueError("mult_cap must be at least 1")
    if not is_prime(base):
        raise DecompositionError("prime")
    n = base.n
    autos = [a for a in automorphisms_brute(base) if any(a[i] != i for i in range(n))]
    adj = base.adj
    weight = [0] * n
    seen: set[Graph] = set()
    out: list[Graph] = []

    def assign(v: int) -> None:
        if v == n:
            mult = tuple(weight)
            # keep only the lexicographically least vector of each orbit
            for a in autos:
                image = [0] * n
                for i in range(n):
                    image[a[i]] = mult[i]
                if tuple(image) < mult:
                    return
            g, blocks = blowup_with_blocks(base, mult)
            if _blowup_is_critical(g, blocks, k):
                canon = canonical_form(g)
                if canon not in seen:
                    seen.add(canon)
                    out.append(canon)
            return
        earlier = (1 << v) - 1
        for m in range(1, mult_cap + 1):
            weight[v] = m
            if _max_weight_clique_through(adj, weight, v, earlier) > k:
                break
            assign(v + 1)
        weight[v] = 0

    assign(0)
    out.sort(key=lambda g: (g.n, g.adj))
    return out


def _blowup_is_critical(g: Graph, blocks: list[tuple[int, ...]], k: int) -> bool:
    if chromatic_number(g).k != k:
        return False
    # vertices inside one clique are twins, so one deletion per block suffices
    for block in blocks:
        if chromatic_number(delete_vertex(g, block[0])).k != k - 1:
            return False
    return True


def check_clique_skeleton_criticality(g: Graph) -> bool:
    """Whether the clique skeleton of a co-connected k-critical graph is again k-critical."""
    if not is_connected(g):
        raise DecompositionError("connected")
    if not is_connected(complement(g)):
        raise DecompositionError("co-connected")
    k = chromatic_number(g).k
    if not is_k_critical(g, k).is_critical:
        raise DecompositionError(f"{k}-critical")
    return is_k_critical(clique_skeleton(g), k).is_critical

