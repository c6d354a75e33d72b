"""Chromatic number, vertex-criticality and the small census.

Run with ``python demos/03_coloring_and_criticality.py``. The k=4 census
up to 8 vertices takes around ten seconds.
"""

import time

from bullhorn import PatternKind
from bullhorn.coloring import chi_via_structure, chromatic_number, clique_number
from bullhorn.critical import critical_blowups, enumerate_critical, is_k_critical
from bullhorn.graph import complete, cycle, wheel
from bullhorn.graph_io import encode_graph6

w = wheel(5)
col = chromatic_number(w)
print("chi(W5) =", col.k, col.assignment, "omega =", clique_number(w).omega)
print("structural route agrees:", chi_via_structure(w).k == col.k)

rep = is_k_critical(w, 4)
print("W5 4-critical:", rep.is_critical, "chi after deletions:", rep.per_vertex_chi)

# blowing up C5 by cliques, looking for 4-critical results
for h in critical_blowups(cycle(5), 4, 4):
    print("4-critical blowup of C5:", encode_graph6(h), h.n, "vertices")
print("K2 gives only K3 for k=3:", critical_blowups(complete(2), 3, 3) == [complete(3)])

for k, n_max in ((3, 9), (4, 8)):
    t = time.perf_counter()
    run = enumerate_critical((PatternKind.P5, PatternKind.BULL), k, n_max)
    print(f"k={k}, n<={n_max}: {len(run.found)} graphs", [encode_graph6(g) for g in run.found],
          f"({time.perf_counter() - t:.1f}s)")
