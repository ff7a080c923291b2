"""
Graphs, codecs, and the pattern catalog
=======================================

Build a few graphs, serialize them, and probe for the forbidden patterns
that define the class this library is about: P2+P3 (an edge plus a
three-vertex path, disjoint) and its complement.
"""

from chibind import (
    Graph,
    complement,
    encode_graph6,
    find_induced,
    in_class,
    pattern_graph,
    to_edge_list,
)
from chibind.graphs import cycle, path

# a 6-vertex path contains P2+P3 (take the two ends and the far triple)
p6 = path(6)
ok, witness = in_class(p6)
print("P6 in class?", ok, "- witness:", witness)

# the 4-cycle is fine, and so is anything on at most 4 vertices
print("C4 in class?", in_class(cycle(4))[0])

# the class is closed under complementation
g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 2), (6, 1)])
print("g in class:", in_class(g)[0], "| complement:", in_class(complement(g))[0])

# serialization: graph6 one-liners and a plain edge list
print("graph6 of C4:", encode_graph6(cycle(4)))
print("edge list of C4:")
print(to_edge_list(cycle(4)), end="")

# the catalog holds every named small graph used by the structure checks
banner = pattern_graph("BANNER")
print("banner:", banner, "contains C4 at", find_induced(banner, "C4"))
h2 = pattern_graph("H2")
print("H2 is a 5-cycle with a pendant:", sorted(h2.degree(v) for v in range(6)))
