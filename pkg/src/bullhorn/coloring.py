"""Exact colouring and clique computations on small graphs.

``k_colorable`` is a DSATUR-ordered backtracking search; ``chromatic_number``
brackets it between the clique number and a greedy DSATUR colouring.
``chi_via_structure`` colours (P5, bull)-free graphs by recursing through
components, co-components and maximal modules down to a prime skeleton.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInClassError
from .graph import (
    Graph,
    bipartition,
    bits,
    complement,
    component_masks,
    induced_subgraph_labeled,
)


@dataclass(frozen=True)
class Coloring:
    """``assignment[v]`` is the colour of vertex ``v``; colours are ``0..k-1``, all used."""

    assignment: tuple[int, ...]
    k: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if set(self.assignment) != set(range(self.k)):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges())

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return [tuple(c) for c in out]

    def as_dict(self) -> dict:
        return {"k": self.k, "assignment": list(self.assignment)}


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: tuple[int, ...]


def _normalise(colors: list[int]) -> Coloring:
    # relabel colours in order of first appearance
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return Coloring(tuple(out), len(remap))


# --- clique number ----------------------------------------------------------


def clique_number(g: Graph) -> CliqueResult:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    adj = g.adj
    best: list[int] = []

    def colour_bound(p: int) -> list[tuple[int, int]]:
        # greedy sequential colouring of p; returns (vertex, colour index) in
        # nondecreasing colour order
        order = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                order.append((v, colour))
                uncoloured ^= low
                q &= ~low & ~adj[v]
        return order

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        order = colour_bound(p)
        for v, c in reversed(order):
            if len(r) + c <= len(best):
                return
            r.append(v)
            np_ = p & adj[v]
            if np_:
                expand(r, np_)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    if g.n:
        expand([], g.vertex_mask)
    return CliqueResult(len(best), tuple(sorted(best)))


def clique_numbers_by_subset(g: Graph) -> list[int]:
    """``omega[S]`` for every vertex subset ``S`` given as a bitmask (2^n table)."""
    n = g.n
    adj = g.adj
    omega = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        a = omega[rest]
        b = 1 + omega[rest & adj[v]]
        omega[s] = a if a > b else b
    return omega


# --- colouring ----------------------------------------------------------------


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    adj = g.adj
    colors = [-1] * n
    class_masks: list[int] = []
    uncoloured = g.vertex_mask
    for _ in range(n):
        best_v, best_key = -1, None
        for v in bits(uncoloured):
            sat = sum(1 for m in class_masks if m & adj[v])
            key = (sat, (adj[v] & uncoloured).bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        v = best_v
        for c, m in enumerate(class_masks):
            if not m & adj[v]:
                break
        else:
            c = len(class_masks)
            class_masks.append(0)
        class_masks[c] |= 1 << v
        colors[v] = c
        uncoloured &= ~(1 << v)
    return colors


def k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists.

    The returned colouring uses exactly as many colours as it needs, which may
    be fewer than ``k``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    if n == 0:
        return Coloring((), 0)
    if k == 0:
        return None
    adj = g.adj
    colors = [-1] * n
    class_masks = [0] * k

    def pick(uncoloured: int, used: int) -> tuple[int, int]:
        best_v, best_sat, best_deg = -1, -1, -1
        for v in bits(uncoloured):
            a = adj[v]
            sat = 0
            for c in range(used):
                if class_masks[c] & a:
                    sat += 1
            if sat > best_sat or (sat == best_sat and (a & uncoloured).bit_count() > best_deg):
                best_v, best_sat, best_deg = v, sat, (a & uncoloured).bit_count()
        return best_v, best_sat

    def search(uncoloured: int, used: int) -> bool:
        if not uncoloured:
            return True
        v, sat = pick(uncoloured, used)
        if sat >= k:
            return False
        a = adj[v]
        rest = uncoloured & ~(1 << v)
        for c in range(used):
            if not class_masks[c] & a:
                class_masks[c] |= 1 << v
                colors[v] = c
                if search(rest, used):
                    return True
                class_masks[c] &= ~(1 << v)
        if used < k:
            class_masks[used] |= 1 << v
            colors[v] = used
            if search(rest, used + 1):
                return True
            class_masks[used] &= ~(1 << v)
        colors[v] = -1
        return False

    if search(g.vertex_mask, 0):
        return _normalise(colors)
    return None


def chromatic_number(g: Graph) -> Coloring:
    """An optimal colouring; ``k`` is the chromatic number (0 for the null graph)."""
    if g.n == 0:
        return Coloring((), 0)
    lower = clique_number(g).omega
    greedy = _normalise(_dsatur_greedy(g))
    if greedy.k == lower:
        return greedy
    for k in range(lower, greedy.k):
        found = k_colorable(g, k)
        if found is not None:
            return found
    return greedy


# --- structural colouring ---------------------------------------------------


def _lift(sub_colours: Coloring, labels: tuple[int, ...], out: list[int], offset: int = 0) -> None:
    for i, c in enumerate(sub_colours.assignment):
        out[labels[i]] = c + offset


def chi_via_structure(g: Graph) -> Coloring:
    """Optimal colouring of a (P5, bull)-free graph via its modular structure.

    Disconnected graphs are coloured per component, joins per co-component
    with disjoint palettes. A connected and co-connected graph is reduced to
    its clique skeleton: each maximal module is coloured recursively and then
    stands for a clique of that many vertices over the prime skeleton. A
    prime (P5, bull)-free skeleton is bipartite or 3K1-free. Over a
    bipartite skeleton the blowup is coloured greedily from opposite ends of a
    palette sized by the heaviest edge; over a 3K1-free skeleton the blowup is
    coloured by exact search.

    Raises :class:`NotInClassError` if ``g`` contains an induced P5 or bull.
    """
    from .patterns import PatternKind, is_free

    ok, witness = is_free(g, [PatternKind.P5, PatternKind.BULL])
    if not ok:
        raise NotInClassError(witness)
    return _chi_structural(g)


def _chi_structural(g: Graph) -> Coloring:
    from .modular import blowup_with_blocks, maximal_modules
    from .patterns import PatternKind, find_induced

    n = g.n
    if n <= 1:
        return Coloring((0,) * n, n)
    out = [0] * n
    comps = component_masks(g)
    if len(comps) > 1:
        for comp in comps:
            sub, labels = induced_subgraph_labeled(g, comp)
            _lift(_chi_structural(sub), labels, out)
        return _normalise(out)
    cocomps = component_masks(complement(g))
    if len(cocomps) > 1:
        offset = 0
        for comp in cocomps:
            sub, labels = induced_subgraph_labeled(g, comp)
            col = _chi_structural(sub)
            _lift(col, labels, out, offset)
            offset += col.k
        return _normalise(out)

    partition = maximal_modules(g)
    module_colourings = []
    sizes = []
    for block in partition.blocks:
        sub, labels = induced_subgraph_labeled(g, block)
        col = _chi_structural(sub)
        module_colourings.append((col, labels))
        sizes.append(col.k)
    skeleton = partition.quotient
    blown, blocks = blowup_with_blocks(skeleton, sizes)

    sides = bipartition(skeleton)
    if sides is not None:
        heaviest = max(sizes[u] + sizes[v] for u, v in skeleton.edges())
        palette = []
        for p in range(skeleton.n):
            if sides[0] >> p & 1:
                palette.append(list(range(sizes[p])))
            else:
                palette.append(list(range(heaviest - sizes[p], heaviest)))
    elif find_induced(skeleton, PatternKind.THREE_K1) is None:
        col = chromatic_number(blown)
        palette = [[col.assignment[v] for v in blocks[p]] for p in range(skeleton.n)]
    else:
        raise AssertionError("prime (P5, bull)-free skeleton is neither bipartite nor 3K1-free")

    for p, (col, labels) in enumerate(module_colourings):
        colours = palette[p]
        for i, c in enumerate(col.assignment):
            out[labels[i]] = colours[c]
    return _normalise(out)
