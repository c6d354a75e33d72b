"""Perfect divisibility under both readings of the definition.

Run with ``python demos/04_divisibility.py``.
"""

from bullhorn.divisibility import Variant, divisible_partition, is_mnpd, is_perfect, is_perfectly_divisible
from bullhorn.graph import complement, cycle, path

c5 = cycle(5)
print("C5 perfect:", is_perfect(c5))

# standard: one side perfect, the other with smaller clique number
wit = divisible_partition(c5, Variant.STANDARD)
print("standard partition of C5:", wit.part_a, wit.part_b, "valid:", wit.validate(c5))
print("standard:", is_perfectly_divisible(c5, Variant.STANDARD))

# the literal reading asks both sides to drop the clique number, which C5 cannot do
print("literal:", is_perfectly_divisible(c5, Variant.PAPER_LITERAL))

for g, name in ((path(6), "P6"), (complement(cycle(7)), "co-C7")):
    print(name, "perfectly divisible:", is_perfectly_divisible(g).divisible, "MNPD:", is_mnpd(g).is_mnpd)
