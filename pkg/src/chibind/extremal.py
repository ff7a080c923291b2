"""Generators for the tight examples: the Schläfli graph, the Clebsch
complement, the three-clique family ``g_k``, clique joins, and the Grötzsch
graph, plus the tightness table that checks each witness against the bound.

The Schläfli graph is built from the 27-lines model: vertices ``a1..a6``,
``b1..b6`` and ``c_ij`` (i < j) with the meeting rules ``a_i ~ b_j`` iff
``i != j``, ``a_i ~ c_jk`` and ``b_i ~ c_jk`` iff ``i in {j, k}``, and
``c_ij ~ c_kl`` iff the index pairs are disjoint.  That meeting graph is
10-regular; its complement is the 16-regular Schläfli graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .engine import bound
from .graphs import Graph, GraphError, complement, complete, cycle, induced, join
from .oracles import chi_alpha2, chromatic_number, clique_number, stability_number


def schlafli() -> Graph:
    """16-regular Schläfli graph on 27 vertices."""
    names = [("a", i) for i in range(1, 7)] + [("b", i) for i in range(1, 7)]
    names += [("c", (i, j)) for i, j in combinations(range(1, 7), 2)]
    index = {name: k for k, name in enumerate(names)}

    def meets(x, y) -> bool:
        (kx, vx), (ky, vy) = x, y
        if kx > ky:
            (kx, vx), (ky, vy) = (ky, vy), (kx, vx)
        if kx == "a" and ky == "a":
            return False
        if kx == "b" and ky == "b":
            return False
        if kx == "a" and ky == "b":
            return vx != vy
        if ky == "c" and kx in ("a", "b"):
            return vx in vy
        return not (set(vx) & set(vy))

    meet_edges = [
        (index[x], index[y]) for x, y in combinations(names, 2) if meets(x, y)
    ]
    return complement(Graph(27, meet_edges))


def clebsch_complement() -> Graph:
    """Complement of the Clebsch graph: the subgraph of the Schläfli graph
    induced on the neighborhood of vertex 0 (16 vertices, 10-regular)."""
    q = schlafli()
    h, _ = induced(q, q.neighbors(0))
    return h


def g_k(k: int) -> Graph:
    """Three k-cliques ``Q1 = {a_i}``, ``Q2 = {b_i}``, ``S = {s_i}`` wired
    so that ``a_i ~ b_i`` is the only Q1-Q2 matching edge and each ``s_i``
    is complete to ``(Q1 u Q2) - {a_i, b_i}`` and misses ``a_i, b_i``.

    Vertices: ``a_i -> i``, ``b_i -> k + i``, ``s_i -> 2k + i`` (0-based i).
    """
    if k < 2:
        raise GraphError(f"g_k needs k >= 2, got {k}")
    edges = []
    for block in range(3):
        off = block * k
        edges.extend((off + i, off + j) for i, j in combinations(range(k), 2))
    for i in range(k):
        edges.append((i, k + i))
    for i in range(k):
        s = 2 * k + i
        for j in range(k):
            if j != i:
                edges.append((s, j))
                edges.append((s, k + j))
    return Graph(3 * k, edges)


def join_kt(base: Graph, t: int) -> Graph:
    """``base`` joined with a t-clique (every new vertex sees everything)."""
    if t < 0:
        raise GraphError(f"join_kt needs t >= 0, got {t}")
    return join(base, complete(t))


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: triangle-free-preserving chromatic increment."""
    n = g.n
    edges = list(g.edges())
    for v in range(n):
        for u in g.neighbors(v):
            edges.append((n + v, u))
    w = 2 * n
    edges.extend((n + v, w) for v in range(n))
    return Graph(2 * n + 1, edges)


def grotzsch() -> Graph:
    """11-vertex triangle-free graph with chromatic number 4 (the
    Mycielskian of the 5-cycle)."""
    return mycielskian(cycle(5))


NAMED_GRAPHS = (
    "schlafli",
    "schlafli-complement",
    "clebsch-complement",
    "clebsch-complement-minus-v",
    "grotzsch",
)


def named_graph(name: str, k: int | None = None) -> Graph:
    """Resolve a generator name as used by the CLI: one of
    ``schlafli``, ``schlafli-complement``, ``clebsch-complement``,
    ``clebsch-complement-minus-v``, ``grotzsch``, or ``g<k>`` (e.g. ``g7``).
    """
    if name == "schlafli":
        return schlafli()
    if name == "schlafli-complement":
        return complement(schlafli())
    if name == "clebsch-complement":
        return clebsch_complement()
    if name == "clebsch-complement-minus-v":
        h = clebsch_complement()
        g, _ = induced(h, range(1, h.n))
        return g
    if name == "grotzsch":
        return grotzsch()
    if name.startswith("g") and name[1:].isdigit():
        return g_k(int(name[1:]))
    raise GraphError(f"unknown named graph {name!r}")


@dataclass(frozen=True)
class TightnessRow:
    k: int
    witness: str
    n: int
    omega: int
    chi: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.omega == self.k and self.chi == self.bound


class TightnessFailure(AssertionError):
    """A tightness row did not reach the bound."""


def tightness_report(k_max: int, timeout_ms: int | None = None) -> list[TightnessRow]:
    """For each clique number ``k`` in ``3..k_max``, build a class member
    with ``omega = k`` and verify ``chi = max(k + 3, floor(3k/2) - 1)``
    exactly.  Witness schedule: the Schläfli complement joined with a
    clique for k <= 4, the Clebsch complement joined with a clique for
    5 <= k <= 7, the Schläfli graph joined with a clique for k in {8, 9},
    and ``g_(k-1)`` for k >= 10.
    """
    if not (3 <= k_max <= 15):
        raise GraphError(f"tightness_report supports 3 <= k_max <= 15, got {k_max}")
    q = schlafli()
    qbar = complement(q)
    h = clebsch_complement()
    rows = []
    for k in range(3, k_max + 1):
        if k <= 4:
            g, name = join_kt(qbar, k - 3), f"schlafli-complement+K{k - 3}"
        elif k <= 7:
            g, name = join_kt(h, k - 5), f"clebsch-complement+K{k - 5}"
        elif k <= 9:
            g, name = join_kt(q, k - 6), f"schlafli+K{k - 6}"
        else:
            g, name = g_k(k - 1), f"g{k - 1}"
        omega = clique_number(g)
        if stability_number(g) <= 2:
            chi = chi_alpha2(g)
        else:
            chi, _ = chromatic_number(g, timeout_ms=timeout_ms)
        row = TightnessRow(k=k, witness=name, n=g.n, omega=omega, chi=chi, bound=bound(k))
        if not row.ok:
            raise TightnessFailure(f"tightness row failed: {row}")
        rows.append(row)
    return rows
