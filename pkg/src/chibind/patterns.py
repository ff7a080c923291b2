"""Catalog of named small graphs and exact induced-subgraph detection.

The catalog is loaded from ``data/patterns.txt`` (edge lists, shipped with
the package).  Detection is plain backtracking over injective maps with
adjacency and degree pruning; patterns have at most 7 vertices, so nothing
fancier is warranted.  All searches are deterministic: the embedding
returned is the lexicographically first one, reading the image tuple in
pattern-vertex order.
"""

from __future__ import annotations

from importlib import resources
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graphs import Graph, complement, from_edge_list

PATTERN_NAMES = (
    "P2_P3",
    "CO_P2_P3",
    "C4",
    "K23",
    "K2_K3",
    "BANNER",
    "CO_BANNER",
    "H1",
    "CO_H1",
    "H2",
    "CO_H2",
    "H3",
    "CO_H3",
    "P6",
    "K2_K1",
)

CO_PAIRS = {
    "P2_P3": "CO_P2_P3",
    "BANNER": "CO_BANNER",
    "H1": "CO_H1",
    "H2": "CO_H2",
    "H3": "CO_H3",
}


def _load_catalog() -> dict[str, Graph]:
    text = (
        resources.files("chibind").joinpath("data/patterns.txt").read_text()
    )
    catalog: dict[str, Graph] = {}
    block_name = None
    block_lines: list[str] = []

    def flush():
        if block_name is not None:
            catalog[block_name] = from_edge_list("\n".join(block_lines) + "\n")

    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#") or not stripped:
            continue
        if stripped.startswith("name "):
            flush()
            block_name = stripped.split(None, 1)[1]
            block_lines = []
        else:
            block_lines.append(stripped)
    flush()

    missing = set(PATTERN_NAMES) - catalog.keys()
    if missing:
        raise RuntimeError(f"pattern fixtures missing {sorted(missing)}")
    for base, co in CO_PAIRS.items():
        if catalog[co] != complement(catalog[base]):
            raise RuntimeError(f"{co} is not the complement of {base}")
    return catalog


CATALOG: dict[str, Graph] = _load_catalog()


def pattern_graph(name: str) -> Graph:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}") from None


def find_induced(g: Graph, name: str) -> Optional[tuple[int, ...]]:
    """Lexicographically first induced embedding of the named pattern.

    Position ``i`` of the result is the host image of pattern vertex ``i``;
    ``None`` when the pattern does not occur.
    """
    p = pattern_graph(name)
    k = p.n
    if k > g.n:
        return None
    pdeg = [p.degree(i) for i in range(k)]
    image = [0] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        pmask = p.adj_mask(i)
        for v in range(g.n):
            bit = 1 << v
            if used & bit or g.degree(v) < pdeg[i]:
                continue
            ok = True
            for j in range(i):
                if (pmask >> j & 1) != (g.adj_mask(v) >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = v
                used |= bit
                if extend(i + 1):
                    return True
                used &= ~bit
        return False

    return tuple(image) if extend(0) else None


def contains(g: Graph, name: str) -> bool:
    return find_induced(g, name) is not None


def find_all_induced(g: Graph, name: str) -> Iterable[tuple[int, ...]]:
    """All induced embeddings, in lexicographic order of the image tuple."""
    p = pattern_graph(name)
    k = p.n
    if k > g.n:
        return
    image = [0] * k
    used = 0

    def extend(i: int):
        nonlocal used
        if i == k:
            yield tuple(image)
            return
        pmask = p.adj_mask(i)
        for v in range(g.n):
            bit = 1 << v
            if used & bit:
                continue
            if all(
                (pmask >> j & 1) == (g.adj_mask(v) >> image[j] & 1)
                for j in range(i)
            ):
                image[i] = v
                used |= bit
                yield from extend(i + 1)
                used &= ~bit

    yield from extend(0)


def in_class(g: Graph) -> tuple[bool, Optional[tuple[str, tuple[int, ...]]]]:
    """Membership in the self-complementary hereditary class this library
    targets: graphs with no induced P2+P3 and no induced co-(P2+P3).

    On failure the violating pattern name and embedding are returned.
    """
    for name in ("P2_P3", "CO_P2_P3"):
        emb = find_induced(g, name)
        if emb is not None:
            return False, (name, emb)
    return True, None


def is_free(
    g: Graph, names: Sequence[str]
) -> tuple[bool, Optional[tuple[str, tuple[int, ...]]]]:
    """True when none of the named patterns occurs induced; witness otherwise.

    Patterns are probed in catalog order regardless of the order given, so
    the witness is deterministic.
    """
    for name in PATTERN_NAMES:
        if name in names:
            emb = find_induced(g, name)
            if emb is not None:
                return False, (name, emb)
    unknown = set(names) - set(PATTERN_NAMES)
    if unknown:
        raise KeyError(f"unknown patterns {sorted(unknown)}")
    return True, None


# -- exhaustive reference detector (test oracle) -----------------------------


def _isomorphic_small(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test for graphs of at most ~8 vertices."""
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degree(v) for v in a.vertices()) != sorted(
        b.degree(v) for v in b.vertices()
    ):
        return False
    n = a.n
    bdeg = [b.degree(v) for v in range(n)]
    image = [0] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        for v in range(n):
            bit = 1 << v
            if used & bit or bdeg[v] != a.degree(i):
                continue
            if all(
                a.has_edge(i, j) == b.has_edge(image[j], v) for j in range(i)
            ):
                image[i] = v
                used |= bit
                if extend(i + 1):
                    return True
                used &= ~bit
        return False

    return extend(0)


def contains_by_enumeration(g: Graph, name: str) -> bool:
    """Reference oracle: scan every |p|-subset for an induced copy."""
    from .graphs import induced

    p = pattern_graph(name)
    if p.n > g.n:
        return False
    pm = p.m
    for subset in combinations(range(g.n), p.n):
        sub, _ = induced(g, subset)
        if sub.m == pm and _isomorphic_small(sub, p):
            return True
    return False
