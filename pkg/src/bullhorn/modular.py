"""Modules, the maximal-module partition, skeletons, blowups and clique skeletons.

A module is a vertex set that every outside vertex sees entirely or not at
all; a homogeneous set is a module of size strictly between 1 and n. The
smallest module containing a seed set is found by repeatedly absorbing
splitters (outside vertices that see part of the set), which gives an O(n^3)
search over seed pairs for everything below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DecompositionError
from .graph import Graph, bits, check_set, complement, induced_subgraph, is_connected, to_mask


def is_module(g: Graph, s: Iterable[int] | int) -> bool:
    mask = check_set(g, s)
    return all(g.adj[x] & mask in (0, mask) for x in bits(g.vertex_mask & ~mask))


def is_homogeneous(g: Graph, s: Iterable[int] | int) -> bool:
    mask = check_set(g, s)
    return 1 < mask.bit_count() < g.n and is_module(g, mask)


def module_closure(g: Graph, seed: int) -> int:
    """Smallest module containing the vertex mask ``seed``."""
    adj = g.adj
    mask = seed
    outside = g.vertex_mask & ~mask
    grew = True
    while grew:
        grew = False
        for x in bits(outside):
            seen = adj[x] & mask
            if seen and seen != mask:
                mask |= 1 << x
                grew = True
        outside = g.vertex_mask & ~mask
    return mask


def find_homogeneous_set(g: Graph) -> tuple[int, ...] | None:
    """A homogeneous set of ``g``, or ``None`` if ``g`` is prime.

    Candidates are the module closures of vertex pairs; the proper one whose
    sorted vertex list is lexicographically least is returned.
    """
    n = g.n
    full = g.vertex_mask
    best = None
    for u in range(n):
        for v in range(u + 1, n):
            m = module_closure(g, 1 << u | 1 << v)
            if m == full:
                continue
            cand = tuple(bits(m))
            if best is None or cand < best:
                best = cand
    return best


def is_prime(g: Graph) -> bool:
    return find_homogeneous_set(g) is None


@dataclass(frozen=True)
class ModulePartition:
    """Maximal modules (ordered by least vertex) and the quotient on one vertex per block.

    Quotient vertex ``p`` stands for ``blocks[p]``.
    """

    blocks: tuple[tuple[int, ...], ...]
    quotient: Graph

    def block_of(self) -> list[int]:
        owner = [0] * sum(len(b) for b in self.blocks)
        for p, block in enumerate(self.blocks):
            for v in block:
                owner[v] = p
        return owner

    def as_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "quotient": {"n": self.quotient.n, "edges": [list(e) for e in self.quotient.edges()]},
        }


def _require_decomposable(g: Graph) -> None:
    if not is_connected(g):
        raise DecompositionError("connected")
    if not is_connected(complement(g)):
        raise DecompositionError("co-connected")


def maximal_modules(g: Graph) -> ModulePartition:
    """Partition of a connected, co-connected graph into its maximal modules.

    Two vertices share a maximal module exactly when the closure of the pair
    is proper, so blocks are the classes of that relation.
    """
    _require_decomposable(g)
    n = g.n
    full = g.vertex_mask
    owner = list(range(n))
    for u in range(n):
        if owner[u] != u:
            continue
        for v in range(u + 1, n):
            if owner[v] == v and module_closure(g, 1 << u | 1 << v) != full:
                owner[v] = u
    reps = [v for v in range(n) if owner[v] == v]
    blocks = tuple(tuple(v for v in range(n) if owner[v] == r) for r in reps)
    index = {r: p for p, r in enumerate(reps)}
    qadj = [0] * len(reps)
    for p, r in enumerate(reps):
        for v in bits(g.adj[r]):
            qadj[p] |= 1 << index[owner[v]]
        # edges inside the block (a module with internal edges) are not quotient edges
        qadj[p] &= ~(1 << p)
    return ModulePartition(blocks, Graph._trusted(len(reps), tuple(qadj)))


def skeleton(g: Graph) -> Graph:
    return maximal_modules(g).quotient


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    multiplicity: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicity) != self.base.n:
            raise ValueError("one multiplicity per base vertex is required")
        if any(k < 1 for k in self.multiplicity):
            raise ValueError("multiplicities must be positive")


def blowup_with_blocks(
    base: Graph, multiplicity: Sequence[int] | Mapping[int, int]
) -> tuple[Graph, list[tuple[int, ...]]]:
    """Blowup plus, for each base vertex, the ids of its clique (consecutive, in base order)."""
    if isinstance(multiplicity, Mapping):
        mult = tuple(multiplicity.get(v, 1) for v in range(base.n))
    else:
        mult = tuple(multiplicity)
    spec = BlowupSpec(base, mult)
    blocks = []
    start = 0
    for k in spec.multiplicity:
        blocks.append(tuple(range(start, start + k)))
        start += k
    block_mask = [to_mask(b) for b in blocks]
    adj = []
    for p, block in enumerate(blocks):
        around = 0
        for q in bits(base.adj[p]):
            around |= block_mask[q]
        for v in block:
            adj.append(around | (block_mask[p] & ~(1 << v)))
    return Graph._trusted(start, tuple(adj)), blocks


def blowup(spec: BlowupSpec | Graph, multiplicity: Sequence[int] | None = None) -> Graph:
    """Substitute a clique of size ``multiplicity[v]`` for every base vertex ``v``.

    Accepts either a :class:`BlowupSpec` or ``(base, multiplicity)``.
    """
    if isinstance(spec, BlowupSpec):
        return blowup_with_blocks(spec.base, spec.multiplicity)[0]
    if multiplicity is None:
        raise TypeError("multiplicity is required when passing a base graph")
    return blowup_with_blocks(spec, multiplicity)[0]


def clique_skeleton(g: Graph) -> Graph:
    """Blowup of the skeleton where each maximal module becomes a clique of its chromatic number.

    One level of substitution suffices: a module replaced by a clique of size
    chi(G[S]) is already the fixed point of the recursive construction.
    """
    from .coloring import chromatic_number

    partition = maximal_modules(g)
    sizes = []
    for block in partition.blocks:
        sizes.append(chromatic_number(induced_subgraph(g, block)).k)
    return blowup(partition.quotient, sizes)
