"""Perfect divisibility, 2-divisibility and minimal non-perfect-divisibility at desk scale.

Two notions are supported. ``STANDARD``: a graph H with an edge is split
into A and B with H[A] perfect and omega(H[B]) < omega(H). ``PAPER_LITERAL``:
both omega(H[A]) and omega(H[B]) are below omega(H), which is what the
literature calls 2-divisibility. C5 is perfectly divisible under the first
and not under the second.

Everything works on per-subset tables (clique number and perfection of every
induced subgraph), so a full sweep of an n-vertex graph costs O(3^n).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .budget import desk_budget
from .coloring import clique_number, clique_numbers_by_subset
from .errors import BudgetExceededError, BullhornError
from .graph import Graph, bits, induced_subgraph, to_mask
from .patterns import odd_hole_or_antihole

DEFAULT_BUDGET = 9


class Variant(enum.Enum):
    STANDARD = "standard"
    PAPER_LITERAL = "paper_literal"

    @classmethod
    def parse(cls, name: "str | Variant") -> "Variant":
        if isinstance(name, Variant):
            return name
        key = name.strip().lower().replace("-", "_")
        if key in ("paper", "literal", "paper_literal", "2-divisible", "two_divisible"):
            return cls.PAPER_LITERAL
        if key == "standard":
            return cls.STANDARD
        raise ValueError(f"unknown variant {name!r}")


class DivisibilityDomainError(BullhornError, ValueError):
    """Divisibility is only defined for graphs with at least one edge."""


@dataclass(frozen=True)
class DivisibilityWitness:
    variant: Variant
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        """Re-check with direct clique search and odd hole/antihole detection."""
        a, b = to_mask(self.part_a), to_mask(self.part_b)
        if a & b or a | b != g.vertex_mask:
            return False
        omega = clique_number(g).omega
        omega_b = clique_number(induced_subgraph(g, b)).omega
        if omega_b >= omega:
            return False
        sub_a = induced_subgraph(g, a)
        if self.variant is Variant.STANDARD:
            return is_perfect(sub_a)
        return clique_number(sub_a).omega < omega

    def as_dict(self) -> dict:
        return {"variant": self.variant.value, "part_a": list(self.part_a), "part_b": list(self.part_b)}


class DivisibilityResult(NamedTuple):
    divisible: bool
    failing_subgraph: tuple[int, ...] | None


@dataclass(frozen=True)
class MnpdReport:
    is_mnpd: bool
    failing_subgraph: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        fs = None if self.failing_subgraph is None else list(self.failing_subgraph)
        return {"is_mnpd": self.is_mnpd, "failing_subgraph": fs}


def is_perfect(g: Graph) -> bool:
    """No odd hole and no odd antihole."""
    return odd_hole_or_antihole(g) is None


def _minimally_imperfect(adj, s: int) -> bool:
    # assuming every proper subset of s is perfect: s is an odd hole or antihole
    size = s.bit_count()
    if size < 5 or size % 2 == 0:
        return False
    degs = {(adj[v] & s).bit_count() for v in bits(s)}
    if degs != {2} and degs != {size - 3}:
        return False
    # 2-regular or co-2-regular; must also be a single cycle
    nbr = adj if degs == {2} else [~a for a in adj]
    start = s & -s
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= nbr[v] & s & ~(1 << v)
        frontier = nxt & ~seen
        seen |= frontier
    return seen == s


def perfect_by_subset(g: Graph) -> list[bool]:
    """``perfect[S]`` for every subset: all proper subsets perfect and S not an odd (anti)hole."""
    n = g.n
    adj = g.adj
    perfect = [True] * (1 << n)
    for s in range(1, 1 << n):
        if s.bit_count() < 5:
            continue
        ok = True
        t = s
        while t:
            low = t & -t
            if not perfect[s ^ low]:
                ok = False
                break
            t ^= low
        perfect[s] = ok and not _minimally_imperfect(adj, s)
    return perfect


class _Tables:
    __slots__ = ("g", "omega", "perfect")

    def __init__(self, g: Graph):
        self.g = g
        self.omega = clique_numbers_by_subset(g)
        self.perfect = perfect_by_subset(g)

    def split(self, s: int, variant: Variant) -> int | None:
        """Least (as a bitmask) part B of a valid split of G[s], or ``None``."""
        omega, perfect = self.omega, self.perfect
        target = omega[s]
        standard = variant is Variant.STANDARD
        # enumerate submasks b of s in increasing order
        b = 0
        while True:
            if omega[b] < target:
                a = s ^ b
                if (perfect[a] if standard else omega[a] < target):
                    return b
            if b == s:
                return None
            b = ((b | ~s) + 1) & s


def divisible_partition(g: Graph, variant: Variant | str = Variant.STANDARD) -> DivisibilityWitness | None:
    """A split of ``V(g)`` witnessing divisibility of ``g`` itself, if one exists."""
    variant = Variant.parse(variant)
    if g.m == 0:
        raise DivisibilityDomainError("graph has no edge")
    tables = _Tables(g)
    b = tables.split(g.vertex_mask, variant)
    if b is None:
        return None
    return DivisibilityWitness(variant, tuple(bits(g.vertex_mask ^ b)), tuple(bits(b)))


def _check_budget(g: Graph, budget: int | None) -> None:
    limit = desk_budget(DEFAULT_BUDGET) if budget is None else budget
    if g.n > limit:
        raise BudgetExceededError(g.n, limit)


def is_perfectly_divisible(
    g: Graph, variant: Variant | str = Variant.STANDARD, budget: int | None = None
) -> DivisibilityResult:
    """Whether every induced subgraph with an edge splits; the first failure (by bitmask) otherwise."""
    variant = Variant.parse(variant)
    _check_budget(g, budget)
    tables = _Tables(g)
    for s in range(1, 1 << g.n):
        if tables.omega[s] >= 2 and tables.split(s, variant) is None:
            return DivisibilityResult(False, tuple(bits(s)))
    return DivisibilityResult(True, None)


def is_mnpd(g: Graph, budget: int | None = None) -> MnpdReport:
    """Not perfectly divisible (standard), while every proper induced subgraph is."""
    _check_budget(g, budget)
    if g.n == 0:
        return MnpdReport(False)
    tables = _Tables(g)
    full = g.vertex_mask
    for s in range(1, full):
        if tables.omega[s] >= 2 and tables.split(s, Variant.STANDARD) is None:
            return MnpdReport(False, tuple(bits(s)))
    return MnpdReport(tables.omega[full] >= 2 and tables.split(full, Variant.STANDARD) is None)
