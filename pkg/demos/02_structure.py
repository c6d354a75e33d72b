"""Modules, skeletons and the bull-free trichotomy.

Run with ``python demos/02_structure.py``.
"""

from bullhorn.graph import Graph, complement, cycle, join, path
from bullhorn.graph_io import encode_graph6
from bullhorn.modular import clique_skeleton, find_homogeneous_set, is_prime, maximal_modules
from bullhorn.structure import classify_bull_house_free, classify_bull_p5_free

# a C5 with one vertex blown up into an induced P3
g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                         (0, 5), (5, 6), (5, 1), (6, 1), (5, 4), (6, 4)])
print("homogeneous set:", find_homogeneous_set(g))
part = maximal_modules(g)
print("maximal modules:", part.blocks)
print("quotient is C5:", encode_graph6(part.quotient), "prime:", is_prime(part.quotient))
sk = clique_skeleton(g)
print("clique skeleton has", sk.n, "vertices (the P3 block shrinks to a K2)")

# certificates name a branch and carry the evidence for it
for name, h in [("C5", cycle(5)), ("P4 + K1 joined", join(path(4), Graph(1)))]:
    cert = classify_bull_p5_free(h)
    print(name, "->", cert.branch.value, cert.vertices, "valid:", cert.validate(h))

# the two classes are complementary: (P5, bull)-free <-> (house, bull)-free
h = cycle(5)
print("complement side:", classify_bull_house_free(complement(h)).branch.value)

# outside the class the certificate carries the offending subgraph
cert = classify_bull_p5_free(path(5))
print("P5:", cert.branch.value, cert.witness)
