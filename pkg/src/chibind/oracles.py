"""Exact ground-truth computations: clique number, stability number,
chromatic number, clique cover number, and maximum matching.

These are the verification oracles for everything else in the library, so
they favor correctness and determinism over raw speed.  All searches use
fixed vertex orders; ties are always broken toward the lowest index, and a
result for a given graph is identical across runs.

The chromatic solver does iterative deepening on the color count ``k``
starting from ``max(omega, ceil(n / alpha))``.  Each ``k``-colorability
test preassigns the lexicographically smallest maximum clique, branches on
the most color-constrained vertex, introduces new colors in index order,
and prunes with the stable-set capacity bound (no color class can exceed
the stability number).  Exact universal-vertex and dominated-vertex
eliminations run first; both preserve the chromatic number.

Timeouts raise :class:`ChromaticTimeout`: an oracle either answers exactly
or refuses, it never approximates.
"""

from __future__ import annotations

import time
import warnings
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, bits, complement, delete_vertices

DESK_SCALE_N = 40


class ChromaticTimeout(RuntimeError):
    """Wall budget exhausted before the exact answer was proved."""


class PreconditionError(ValueError):
    """Oracle called outside its supported domain."""


@dataclass(frozen=True)
class ExactStats:
    omega: int
    alpha: int
    chi: int
    theta: int


# -- maximum clique ----------------------------------------------------------


def _color_sort(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set; returns (vertex, bound) pairs
    in nondecreasing bound order.  The bound is the usual branch-and-bound
    upper limit: a clique meets each color class at most once."""
    order: list[tuple[int, int]] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append((v, color))
            avail &= ~(g.adj_mask(v) | low)
            rest ^= low
    return order


def _max_clique_size(g: Graph, cand: int, floor: int = 0) -> int:
    """Largest clique size within the candidate mask.  ``floor`` seeds the
    incumbent: the result is exact whenever it exceeds the floor."""
    best = floor

    def expand(cand_mask: int, size: int):
        nonlocal best
        if size > best:
            best = size
        for v, bound in reversed(_color_sort(g, cand_mask)):
            if size + bound <= best:
                return
            expand(cand_mask & g.adj_mask(v), size + 1)
            cand_mask &= ~(1 << v)

    expand(cand, 0)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique_size(g, g.full_mask()) if g.n else 0


def max_clique(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest maximum clique, as a sorted tuple."""
    if g.n < 1:
        raise PreconditionError("max_clique needs at least one vertex")
    size = _max_clique_size(g, g.full_mask())
    chosen: list[int] = []
    cand = g.full_mask()
    need = size
    while need:
        for v in bits(cand):
            sub = cand & g.adj_mask(v)
            if _max_clique_size(g, sub, need - 2) >= need - 1:
                chosen.append(v)
                # later picks may only use higher indices: a usable lower
                # index would have been accepted on an earlier scan
                cand = sub & ~((1 << (v + 1)) - 1)
                need -= 1
                break
        else:  # pragma: no cover - search invariant
            raise AssertionError("clique reconstruction failed")
    return tuple(chosen)


def stability_number(g: Graph) -> int:
    return clique_number(complement(g))


def max_stable_set(g: Graph) -> tuple[int, ...]:
    return max_clique(complement(g))


# -- exact chromatic number --------------------------------------------------


def _dsatur_heuristic(g: Graph) -> list[int]:
    """Deterministic DSATUR greedy coloring (upper bound witness)."""
    n = g.n
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        pick = -1
        key = None
        for v in range(n):
            if colors[v] != -1:
                continue
            cand = (len(neighbor_colors[v]), g.degree(v), -v)
            if key is None or cand > key:
                key = cand
                pick = v
        c = 0
        while c in neighbor_colors[pick]:
            c += 1
        colors[pick] = c
        for u in g.neighbors(pick):
            neighbor_colors[u].add(c)
    return colors


def _k_colorable(
    g: Graph,
    k: int,
    clique: tuple[int, ...],
    alpha: int,
    deadline: float | None,
) -> list[int] | None:
    """Backtracking k-colorability with clique preassignment, new-color
    symmetry breaking, and capacity pruning.  Returns a coloring or None."""
    n = g.n
    if len(clique) > k:
        return None
    all_colors = (1 << k) - 1
    colors = [-1] * n
    allowed = [all_colors] * n
    class_size = [0] * k
    uncolored = n
    max_used = -1
    nodes = 0

    def assign(v: int, c: int, trail: list[tuple[int, int]]) -> bool:
        nonlocal uncolored, max_used
        colors[v] = c
        class_size[c] += 1
        uncolored -= 1
        if c > max_used:
            max_used = c
        if class_size[c] > alpha:
            return False
        bit = 1 << c
        for u in g.neighbors(v):
            if colors[u] == -1 and allowed[u] & bit:
                trail.append((u, allowed[u]))
                allowed[u] &= ~bit
                if allowed[u] == 0:
                    return False
        return True

    def capacity_ok() -> bool:
        spare = 0
        for c in range(k):
            spare += alpha - class_size[c]
            if spare >= uncolored:
                return True
        return spare >= uncolored

    def solve() -> bool:
        nonlocal nodes, max_used, uncolored
        nodes += 1
        if deadline is not None and nodes % 256 == 0:
            if time.monotonic() > deadline:
                raise ChromaticTimeout(
                    f"k-colorability search timed out at k={k}"
                )
        if uncolored == 0:
            return True
        if not capacity_ok():
            return False
        # most constrained vertex; ties by saturation degree then index
        pick = -1
        key = None
        for v in range(n):
            if colors[v] != -1:
                continue
            cand = (allowed[v].bit_count(), -g.degree(v), v)
            if key is None or cand < key:
                key = cand
                pick = v
        cap = min(k - 1, max_used + 1)
        options = allowed[pick] & ((1 << (cap + 1)) - 1)
        saved_max = max_used
        for c in bits(options):
            trail: list[tuple[int, int]] = []
            ok = assign(pick, c, trail)
            if ok and solve():
                return True
            for u, old in trail:
                allowed[u] = old
            class_size[c] -= 1
            colors[pick] = -1
            uncolored += 1
            max_used = saved_max
        return False

    for i, v in enumerate(sorted(clique)):
        trail: list[tuple[int, int]] = []
        if not assign(v, i, trail):
            return None
    return list(colors) if solve() else None


def _strip_reducible(g: Graph):
    """Peel universal and dominated vertices; both removals are exact for
    the chromatic number.  Returns the core graph, its original labels,
    and a replay stack to reconstruct a coloring of the input."""
    labels = list(range(g.n))
    ops: list[tuple] = []
    cur = g
    changed = True
    while changed and cur.n:
        changed = False
        full = cur.full_mask()
        for v in range(cur.n):
            if cur.adj_mask(v) == full & ~(1 << v):
                ops.append(("universal", labels[v]))
                cur, kept = delete_vertices(cur, [v])
                labels = [labels[i] for i in kept]
                changed = True
                break
        if changed:
            continue
        for u in range(cur.n):
            mu = cur.adj_mask(u)
            for v in range(cur.n):
                if u == v or cur.has_edge(u, v):
                    continue
                if mu & ~cur.adj_mask(v) == 0:
                    ops.append(("dominated", labels[u], labels[v]))
                    cur, kept = delete_vertices(cur, [u])
                    labels = [labels[i] for i in kept]
                    changed = True
                    break
            if changed:
                break
    return cur, labels, ops


def chromatic_number(
    g: Graph,
    *,
    max_n: int = DESK_SCALE_N,
    timeout_ms: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a proper coloring witness.

    Raises :class:`ChromaticTimeout` when ``timeout_ms`` elapses before the
    value is proved; never returns an unproved number.
    """
    if g.n > max_n:
        warnings.warn(
            f"chromatic_number on n={g.n} exceeds the desk-scale default "
            f"({max_n}); this may be slow",
            stacklevel=2,
        )
    if g.n == 0:
        return 0, ()
    deadline = (
        time.monotonic() + timeout_ms / 1000.0 if timeout_ms is not None else None
    )

    core, labels, ops = _strip_reducible(g)
    core_chi, core_colors = _chromatic_core(core, deadline)

    colors = {labels[i]: core_colors[i] for i in range(core.n)}
    total = core_chi
    for op in reversed(ops):
        if op[0] == "universal":
            colors[op[1]] = total
            total += 1
        else:
            _, u, v = op
            colors[u] = colors[v]
    witness = tuple(colors[v] for v in range(g.n))
    _assert_proper(g, witness, total)
    return total, witness


def _chromatic_core(g: Graph, deadline: float | None) -> tuple[int, list[int]]:
    if g.n == 0:
        return 0, []
    if g.m == 0:
        return 1, [0] * g.n
    clique = max_clique(g)
    omega = len(clique)
    alpha = stability_number(g)
    lower = max(omega, -(-g.n // alpha))
    heur = _dsatur_heuristic(g)
    upper = max(heur) + 1
    if upper == lower:
        return upper, heur
    for k in range(lower, upper):
        if deadline is not None and time.monotonic() > deadline:
            raise ChromaticTimeout("chromatic search timed out")
        sol = _k_colorable(g, k, clique, alpha, deadline)
        if sol is not None:
            return k, sol
    return upper, heur


def _assert_proper(g: Graph, colors: tuple[int, ...], count: int):
    used = set(colors)
    if len(colors) != g.n or (g.n and (max(used) + 1 != count or len(used) != count)):
        raise AssertionError("coloring witness has wrong color count")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise AssertionError(f"improper coloring at edge ({u},{v})")


def theta(g: Graph, **kwargs) -> tuple[int, tuple[int, ...]]:
    """Clique cover number via the complement's chromatic number; the
    witness assigns each vertex a clique index."""
    return chromatic_number(complement(g), **kwargs)


def exact_stats(g: Graph, timeout_ms: int | None = None) -> ExactStats:
    chi, _ = chromatic_number(g, timeout_ms=timeout_ms)
    th, _ = theta(g, timeout_ms=timeout_ms)
    return ExactStats(
        omega=clique_number(g),
        alpha=stability_number(g),
        chi=chi,
        theta=th,
    )


# -- maximum matching (general graphs) ---------------------------------------


def max_matching(g: Graph) -> tuple[tuple[int, int], ...]:
    """Maximum-cardinality matching via augmenting paths with blossom
    contraction; works on arbitrary (non-bipartite) graphs."""
    n = g.n
    match = [-1] * n

    def find_augmenting(root: int) -> int:
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_blossom = [False] * n
        queue = deque([root])
        in_queue[root] = True

        def lca(u: int, v: int) -> int:
            seen = [False] * n
            a = u
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            b = v
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, anchor: int, child: int):
            while base[v] != anchor:
                in_blossom[base[v]] = True
                in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in g.neighbors(v):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    anchor = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, anchor, to)
                    mark_path(to, anchor, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = anchor
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending at `to`
                        while to != -1:
                            prev = parent[to]
                            nxt = match[prev]
                            match[to] = prev
                            match[prev] = to
                            to = nxt
                        return 1
                    if not in_queue[match[to]]:
                        in_queue[match[to]] = True
                        queue.append(match[to])
        return 0

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return tuple(
        (v, match[v]) for v in range(n) if match[v] != -1 and v < match[v]
    )


def matching_size_bruteforce(g: Graph) -> int:
    """Independent exhaustive oracle for matchings (small n only)."""
    if g.n > 16:
        raise PreconditionError("brute-force matcher limited to n <= 16")
    edges = list(g.edges())

    def best(idx: int, used: int) -> int:
        if idx == len(edges):
            return 0
        u, v = edges[idx]
        take = 0
        if not (used >> u & 1) and not (used >> v & 1):
            take = 1 + best(idx + 1, used | 1 << u | 1 << v)
        skip = best(idx + 1, used)
        return max(take, skip)

    return best(0, 0)


# -- chromatic number for stability number at most 2 -------------------------


def chi_alpha2(g: Graph) -> int:
    """Exact chromatic number when no three vertices are pairwise
    nonadjacent: color classes have size at most 2, so the optimum pairs up
    as many nonadjacent vertices as possible and
    ``chi = n - matching_number(complement)``."""
    a = stability_number(g)
    if a > 2:
        raise PreconditionError(f"chi_alpha2 requires alpha <= 2, got {a}")
    return g.n - len(max_matching(complement(g)))
