"""
Exact oracles
=============

Clique number, stability number, chromatic number (with a proper-coloring
witness), clique cover number, and maximum matching.  Everything here is
exact: the chromatic solver either proves its answer or raises a timeout.
"""

from chibind import (
    chi_alpha2,
    chromatic_number,
    clique_number,
    complement,
    exact_stats,
    max_clique,
    max_matching,
    stability_number,
)
from chibind.graphs import Graph, cycle, join, complete

c5 = cycle(5)
print("C5:", exact_stats(c5))

# chromatic witnesses are proper and use exactly the reported count
chi, witness = chromatic_number(c5)
print("chi(C5) =", chi, "witness:", witness)

# joining with a clique shifts both invariants by its size
g = join(c5, complete(3))
print("C5 join K3: omega =", clique_number(g), " chi =", chromatic_number(g)[0])

# duality: chi(G) equals the clique cover number of the complement
print("alpha(C5) =", stability_number(c5), "= omega of the complement:",
      clique_number(complement(c5)))

# matchings run on general graphs (blossoms handled), here a triangle
# with two pendants where the greedy pairing is suboptimal
g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
print("matching:", max_matching(g))

# when no three vertices are pairwise nonadjacent, coloring reduces to a
# matching computation on the complement
print("chi via matching for C5:", chi_alpha2(c5))
