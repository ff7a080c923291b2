"""Immutable simple undirected graphs over dense 0-based vertex indices.

Adjacency is stored as one Python-int bitmask per vertex, which gives O(1)
edge queries and word-parallel neighborhood intersection.  Graphs are value
objects: every derived graph (complement, induced subgraph) is a new object,
so certificates and derivation traces can safely hold references.

Two text formats are supported:

* graph6 -- the compact ASCII encoding of simple graphs (bit-exact).
* edge list -- first line ``n m``, then ``m`` lines ``u v`` with 0-based
  endpoints, whitespace separated, LF terminated.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or query."""


class FormatError(GraphError):
    """Malformed serialized graph; carries the byte or line offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Immutable after construction.  ``adj_mask(v)`` exposes the neighborhood
    of ``v`` as a bitmask; set-valued helpers return sorted tuples so every
    traversal in the library is deterministic.
    """

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, tuple(adj))))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Graph is immutable")

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    @property
    def m(self) -> int:
        return sum(self._adj[v].bit_count() for v in range(self.n)) // 2

    def vertices(self) -> range:
        return range(self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = mask_of(vs)
        return all(self._adj[v] & mask == mask & ~(1 << v) for v in vs)

    def is_stable(self, vertices: Iterable[int]) -> bool:
        mask = mask_of(vertices)
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            if self._adj[v] & mask:
                return False
            rest &= rest - 1
        return True

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> tuple[int, ...]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    """Same vertices, exactly the non-edges of ``g``."""
    full = g.full_mask()
    comp = Graph.__new__(Graph)
    adj = tuple((full & ~g.adj_mask(v)) & ~(1 << v) for v in range(g.n))
    object.__setattr__(comp, "n", g.n)
    object.__setattr__(comp, "_adj", adj)
    object.__setattr__(comp, "_hash", hash((g.n, adj)))
    return comp


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices`` plus the order-preserving label map.

    The returned map sends new index ``i`` to the i-th smallest original
    vertex.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [
        (pos[u], pos[v]) for u, v in combinations(vs, 2) if g.has_edge(u, v)
    ]
    return Graph(len(vs), edges), tuple(vs)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    drop = set(vertices)
    return induced(g, (v for v in range(g.n) if v not in drop))


# -- graph6 ----------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (header ``>>graph6<<`` not emitted)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise GraphError(f"graph6 encoding not supported for n={n}")
    data = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj_mask(j)
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                data.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        data.append((acc << (6 - nbits)) + 63)
    return bytes(head + data).decode("ascii")


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; strict about padding and length."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    raw = s.encode("ascii", errors="replace")
    if not raw:
        raise FormatError("empty graph6 string", 0)
    for off, b in enumerate(raw):
        if not (63 <= b <= 126):
            raise FormatError(f"byte {b!r} outside graph6 range", off)
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise FormatError("graph6 n > 258047 not supported", 0)
        if len(raw) < 4:
            raise FormatError("truncated graph6 size header", len(raw))
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
        body_off = 4
    else:
        n = raw[0] - 63
        body = raw[1:]
        body_off = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise FormatError(
            f"truncated graph6 bit-vector: need {need} bytes, got {len(body)}",
            body_off + len(body),
        )
    if len(body) > need:
        raise FormatError("trailing bytes after graph6 bit-vector", body_off + need)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                edges.append((i, j))
            idx += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise FormatError("nonzero padding bits", body_off + need - 1)
    return Graph(n, edges)


# -- edge-list text ----------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty edge list", 0)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected 'n m' header, got {lines[0]!r}", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"non-integer header {lines[0]!r}", 1) from None
    if len(lines) - 1 != m:
        raise FormatError(
            f"header promises {m} edges, file has {len(lines) - 1}", len(lines)
        )
    edges = []
    seen = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {ln!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer endpoints {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"bad edge ({u},{v}) for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


# -- small builders used across the library ---------------------------------


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    edges = list(disjoint_union(a, b).edges())
    edges.extend((u, v + a.n) for u in range(a.n) for v in range(b.n))
    return Graph(a.n + b.n, edges)
