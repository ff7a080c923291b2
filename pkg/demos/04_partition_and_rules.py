"""
The 4-cycle partition and its rule suite
========================================

Relative to an induced 4-cycle, every other vertex falls into one of the
trace blocks A1..A4 (one cycle neighbor), B1..B4 (consecutive pair),
X1/X2 (opposite pair), D (all four), or T (none).  Class members satisfy
the rules R1..R15 over these blocks; violations come with an explicit
five-vertex witness inducing a forbidden pattern.
"""

from chibind import Graph, build_partition, check_properties, in_class
from chibind.partition import render_report

# a class member: 4-cycle, a pendant in A1, a B2 vertex, a dominating
# vertex in D, and an untouched vertex in T
g = Graph(
    9,
    [(0, 1), (1, 2), (2, 3), (3, 0)]
    + [(4, 0)]
    + [(5, 1), (5, 2)]
    + [(6, 0), (6, 1), (6, 2), (6, 3)]
    + [(7, 1), (7, 3)]
    + [(6, 7)],  # X is complete to D in class members
)
print("in class:", in_class(g)[0])
part = build_partition(g, (0, 1, 2, 3))
for name, block in part.blocks().items():
    if block:
        print(f"  {name}: {sorted(block)}")

reports = check_properties(g, part)
print("rule statuses:",
      {s: sum(1 for r in reports if r.status == s)
       for s in ("holds", "violated", "not-applicable")})

# now a mutant: two adjacent vertices that both miss the whole cycle
bad = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])
part = build_partition(bad, (0, 1, 2, 3))
for line in render_report(check_properties(bad, part)):
    if "violated" in line:
        print(line)
