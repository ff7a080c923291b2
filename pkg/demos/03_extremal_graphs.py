"""
Extremal graphs and the tightness table
=======================================

The bound ``chi <= max(w + 3, floor(3w/2) - 1)`` is best possible for the
class.  This script rebuilds every witness family and verifies the numbers
with the exact oracles: the Schläfli graph (w=6, chi=9), its complement
(w=3, chi=6), the Clebsch complement (w=5, chi=8), clique joins of these,
the three-clique family g_k (w=k+1, chi=ceil(3k/2)), and the Grötzsch
graph for the w=2 corner.
"""

from chibind import (
    bound,
    chi_alpha2,
    chromatic_number,
    clique_number,
    complement,
    clebsch_complement,
    g_k,
    grotzsch,
    in_class,
    join_kt,
    schlafli,
    stability_number,
    tightness_report,
)

q = schlafli()
print("Schläfli graph:", q, "regular of degree", q.degree(0))
print("  omega =", clique_number(q), " alpha =", stability_number(q),
      " chi =", chromatic_number(q)[0], " in class:", in_class(q)[0])

qbar = complement(q)
print("its complement: omega =", clique_number(qbar),
      " chi =", chromatic_number(qbar)[0])

h = clebsch_complement()
print("Clebsch complement:", h, " omega =", clique_number(h),
      " chi =", chi_alpha2(h))

print("join with K2 shifts both numbers:",
      clique_number(join_kt(h, 2)), chromatic_number(join_kt(h, 2))[0])

for k in (2, 5, 9):
    g = g_k(k)
    print(f"g_{k}: n={g.n} omega={clique_number(g)} chi={chi_alpha2(g)} "
          f"(bound at that clique number: {bound(clique_number(g))})")

gr = grotzsch()
print("Grötzsch graph: omega =", clique_number(gr),
      " chi =", chromatic_number(gr)[0], " in class:", in_class(gr)[0])

print("\ntightness table, one witness per clique number:")
for row in tightness_report(12):
    print(f"  k={row.k:2d}  {row.witness:24s} n={row.n:2d} "
          f"omega={row.omega:2d} chi={row.chi:2d} bound={row.bound:2d}")
