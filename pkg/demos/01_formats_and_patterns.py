"""Reading graphs and looking for the forbidden shapes.

Run with ``python demos/01_formats_and_patterns.py``.
"""

from bullhorn import PatternKind, find_hole, find_induced, reference_graph
from bullhorn.graph import cycle, path, petersen, wheel
from bullhorn.graph_io import decode_graph6, encode_dimacs, encode_graph6

# graph6 is the line format used everywhere in the package
g = petersen()
line = encode_graph6(g)
print("Petersen graph6:", line)
assert decode_graph6(line) == g
print(encode_dimacs(cycle(4)))

# each fixed pattern has a labelled reference copy
for kind in (PatternKind.BULL, PatternKind.HOUSE, PatternKind.P5):
    ref = reference_graph(kind)
    print(kind.value, "reference edges:", ref.edges())

# the witness maps reference vertex i to vertices[i]
emb = find_induced(path(6), PatternKind.P5)
print("P5 in P6:", emb.vertices)
print("bull in W5:", find_induced(wheel(5), PatternKind.BULL))

# holes of length >= 5; the Petersen graph has plenty
hole = find_hole(petersen(), min_len=5, odd_only=True)
print("odd hole in Petersen:", hole.vertices)
