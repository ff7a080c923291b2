"""Vertex partition anchored at an induced 4-cycle, and the rule suite
R1..R15 that class members must satisfy relative to any such cycle.

Given an induced cycle ``c0-c1-c2-c3`` in a host graph, every other vertex
is classified by its neighborhood trace on the cycle:

* ``A_i``  -- sees exactly ``c_i``,
* ``B_i``  -- sees exactly ``{c_i, c_(i+1)}``  (consecutive pair),
* ``X_j``  -- sees exactly ``{c_j, c_(j+2)}``  (opposite pair, j in {0, 1}),
* ``D``    -- sees all four,
* ``T``    -- sees none.

A trace of exactly three cycle vertices is impossible for class members
(the five vertices would induce a co-(P2+P3)); ``build_partition`` raises
:class:`ThreeNeighborsError` with a concrete witness in that case.
Indices are arithmetic modulo 4 throughout.

Each rule ``R1..R15`` is an executable predicate over the blocks.  When a
rule's claim fails, the checker rebuilds the explicit five-vertex set that
the corresponding derivation names and classifies the failure:

* the set induces P2+P3 or co-(P2+P3): the host is out of class and the
  rule reports ``violated`` with that witness;
* otherwise (possible only for the conditional rules R12..R15) the
  configuration itself exhibits the rule's side condition pattern, and the
  rule reports ``not-applicable`` with that pattern as the witness.

Conditional rules: R12a needs K23-freeness, R12b and R13 need K2+K3
freeness, R14 and R15 need co-banner freeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graphs import Graph, GraphError, bits, induced, mask_of
from .patterns import (
    _isomorphic_small,
    find_all_induced,
    find_induced,
    in_class,
    pattern_graph,
)


class ThreeNeighborsError(GraphError):
    """A vertex outside the cycle sees exactly three cycle vertices."""

    def __init__(self, vertex: int, witness: tuple[int, ...], pattern: str):
        super().__init__(
            f"vertex {vertex} has exactly 3 neighbors on the cycle; "
            f"{witness} induces {pattern}"
        )
        self.vertex = vertex
        self.witness = witness
        self.pattern = pattern


@dataclass(frozen=True)
class C4Partition:
    cycle: tuple[int, int, int, int]
    a: tuple[frozenset, frozenset, frozenset, frozenset]
    b: tuple[frozenset, frozenset, frozenset, frozenset]
    x: tuple[frozenset, frozenset]
    d: frozenset
    t: frozenset

    def blocks(self) -> dict[str, frozenset]:
        out = {f"A{i + 1}": self.a[i] for i in range(4)}
        out.update({f"B{i + 1}": self.b[i] for i in range(4)})
        out.update({f"X{j + 1}": self.x[j] for j in range(2)})
        out["D"] = self.d
        out["T"] = self.t
        return out


@dataclass(frozen=True)
class PropertyReport:
    property_id: str
    index: tuple[int, ...]
    status: str  # "holds" | "violated" | "not-applicable"
    claim_holds: bool
    witness: Optional[tuple[int, ...]] = None
    witness_pattern: Optional[str] = None

    def render(self) -> str:
        idx = ",".join(str(i) for i in self.index)
        head = f"{self.property_id}[{idx}]" if idx else self.property_id
        if self.witness is None:
            return f"{head}: {self.status}"
        return (
            f"{head}: {self.status} "
            f"(witness {set(self.witness)} induces {self.witness_pattern})"
        )


def _induces_named(g: Graph, vs: tuple[int, ...], name: str) -> bool:
    sub, _ = induced(g, vs)
    pat = pattern_graph(name)
    return sub.n == pat.n and sub.m == pat.m and _isomorphic_small(sub, pat)


def _forbidden_name(g: Graph, vs: tuple[int, ...]) -> Optional[str]:
    if len(set(vs)) != 5:
        return None
    for name in ("P2_P3", "CO_P2_P3"):
        if _induces_named(g, vs, name):
            return name
    return None


def find_forbidden_five(
    g: Graph, must_include: tuple[int, ...]
) -> Optional[tuple[tuple[int, ...], str]]:
    """Lex-first 5-set containing ``must_include`` that induces P2+P3 or
    co-(P2+P3); bounded enumeration used for error witnesses."""
    rest = [v for v in range(g.n) if v not in must_include]
    need = 5 - len(must_include)
    for extra in combinations(rest, need):
        vs = tuple(sorted(must_include + extra))
        name = _forbidden_name(g, vs)
        if name:
            return vs, name
    return None


def build_partition(g: Graph, cycle: tuple[int, int, int, int]) -> C4Partition:
    """Classify every vertex outside the given induced 4-cycle by its trace."""
    if len(set(cycle)) != 4:
        raise GraphError(f"cycle vertices must be distinct: {cycle}")
    c0, c1, c2, c3 = cycle
    wanted = [(c0, c1), (c1, c2), (c2, c3), (c3, c0)]
    for u, v in wanted:
        if not g.has_edge(u, v):
            raise GraphError(f"{cycle} is not a 4-cycle: missing edge ({u},{v})")
    for u, v in ((c0, c2), (c1, c3)):
        if g.has_edge(u, v):
            raise GraphError(f"{cycle} is not induced: chord ({u},{v})")

    a: list[set] = [set(), set(), set(), set()]
    b: list[set] = [set(), set(), set(), set()]
    x: list[set] = [set(), set()]
    d: set = set()
    t: set = set()
    for v in range(g.n):
        if v in cycle:
            continue
        trace = tuple(i for i in range(4) if g.has_edge(v, cycle[i]))
        if len(trace) == 3:
            found = find_forbidden_five(g, (v,))
            witness, pattern = found if found else ((), "?")
            raise ThreeNeighborsError(v, witness, pattern)
        if len(trace) == 0:
            t.add(v)
        elif len(trace) == 4:
            d.add(v)
        elif len(trace) == 1:
            a[trace[0]].add(v)
        elif (trace[1] - trace[0]) % 4 == 2:
            x[trace[0]].add(v)
        else:
            # consecutive pair {c_i, c_(i+1)}; trace is sorted, so the pair
            # (3, 0) appears as (0, 3)
            i = 3 if trace == (0, 3) else trace[0]
            b[i].add(v)
    return C4Partition(
        cycle=tuple(cycle),
        a=tuple(frozenset(s) for s in a),
        b=tuple(frozenset(s) for s in b),
        x=tuple(frozenset(s) for s in x),
        d=frozenset(d),
        t=frozenset(t),
    )


def all_c4_partitions(g: Graph) -> Iterator[tuple[tuple[int, ...], C4Partition]]:
    """Every induced-C4 embedding with its partition, in embedding order."""
    for emb in find_all_induced(g, "C4"):
        yield emb, build_partition(g, emb)


# -- rule checking -----------------------------------------------------------


class _Checker:
    def __init__(self, g: Graph, p: C4Partition):
        self.g = g
        self.p = p
        self.c = p.cycle
        self.am = [mask_of(s) for s in p.a]
        self.bm = [mask_of(s) for s in p.b]
        self.xm = [mask_of(s) for s in p.x]
        self.dm = mask_of(p.d)
        self.tm = mask_of(p.t)
        self.k23_free = find_induced(g, "K23") is None
        self.k2k3_free = find_induced(g, "K2_K3") is None
        self.cobanner_free = find_induced(g, "CO_BANNER") is None

    # helpers ----------------------------------------------------------

    def adj(self, v: int) -> int:
        return self.g.adj_mask(v)

    def first_adjacent_pair(self, mask: int) -> Optional[tuple[int, int]]:
        for v in bits(mask):
            nb = self.adj(v) & mask
            if nb:
                return v, bits(nb)[0]
        return None

    def first_nonadjacent_pair(self, mask: int) -> Optional[tuple[int, int]]:
        vs = bits(mask)
        for i, v in enumerate(vs):
            for u in vs[i + 1:]:
                if not self.g.has_edge(v, u):
                    return v, u
        return None

    # claim evaluators: return None when the claim holds, otherwise a list
    # of candidate witness sets (most specific first) ---------------------

    def r1(self, i):
        pair = self.first_adjacent_pair(self.am[i] | self.tm)
        if pair is None:
            return None
        p, q = pair
        c = self.c
        return [(p, q, c[(i + 1) % 4], c[(i + 2) % 4], c[(i + 3) % 4])]

    def _at_most_one_nonneighbor(self, src: int, env: int, wit):
        for p in bits(src):
            non = env & ~self.adj(p) & ~(1 << p)
            if non.bit_count() >= 2:
                q, r = bits(non)[:2]
                return wit(p, q, r)
        return None

    def _at_most_one_neighbor(self, src: int, env: int, wit):
        for p in bits(src):
            nb = self.adj(p) & env & ~(1 << p)
            if nb.bit_count() >= 2:
                q, r = bits(nb)[:2]
                return wit(p, q, r)
        return None

    def r2(self, i):
        c = self.c
        i1, i2, i3 = (i + 1) % 4, (i + 2) % 4, (i + 3) % 4

        def wit_a(p, q, r):
            if not self.g.has_edge(q, r):
                return [(p, c[i], q, c[i2], r)]
            return [(q, r, p, c[i], c[i3])]

        out = self._at_most_one_nonneighbor(
            self.am[i] | self.bm[i], self.am[i2] | self.bm[i1], wit_a
        )
        if out:
            return out

        def wit_b(p, q, r):
            if not self.g.has_edge(q, r):
                return [(p, c[i1], q, c[i3], r)]
            return [(q, r, p, c[i1], c[i2])]

        return self._at_most_one_nonneighbor(
            self.am[i1] | self.bm[i], self.bm[i3] | self.am[i3], wit_b
        )

    def r3(self, i):
        c = self.c
        i1, i2, i3 = (i + 1) % 4, (i + 2) % 4, (i + 3) % 4
        for p in bits(self.am[i] | self.bm[i] | self.tm):
            s = self.adj(p) & (self.dm | self.bm[i2])
            pair = self.first_nonadjacent_pair(s)
            if pair:
                return [(p, pair[0], c[i2], pair[1], c[i3])]
        for p in bits(self.am[i]):
            s = self.adj(p) & self.bm[i1]
            pair = self.first_nonadjacent_pair(s)
            if pair:
                return [(p, pair[0], c[i2], pair[1], c[i1])]
        for p in bits(self.am[i]):
            nb = self.adj(p) & self.bm[i2]
            if nb.bit_count() >= 2:
                q, r = bits(nb)[:2]
                return [(p, c[i], c[i3], q, r)]
            nb = self.adj(p) & self.bm[i1]
            if nb.bit_count() >= 2:
                q, r = bits(nb)[:2]
                return [(p, c[i], c[i1], q, r)]
        return None

    def r4(self, j):
        c = self.c
        env = self.bm[(j + 1) % 4] | self.bm[(j + 3) % 4] | self.dm
        for bb in bits(self.bm[j]):
            for bb2 in bits(self.adj(bb) & self.bm[(j + 2) % 4]):
                diff = (self.adj(bb) ^ self.adj(bb2)) & env
                if not diff:
                    continue
                v = bits(diff)[0]
                if self.adj(bb) >> v & 1:
                    side, other, jj = bb, bb2, j
                else:
                    side, other, jj = bb2, bb, (j + 2) % 4
                if (1 << v) & (self.bm[(jj + 1) % 4] | self.dm):
                    return [(side, c[(jj + 1) % 4], c[(jj + 2) % 4], other, v)]
                return [(side, c[jj], c[(jj + 3) % 4], other, v)]
        return None

    def r5(self, j):
        pair = self.first_adjacent_pair(self.xm[j])
        if pair is None:
            return None
        c = self.c
        return [(c[j], c[j + 1], c[j + 2], pair[0], pair[1])]

    def r6(self):
        c = self.c
        for bi in range(4):
            for xj in range(2):
                for bb in bits(self.bm[bi]):
                    for xx in bits(self.adj(bb) & self.xm[xj]):
                        if bi % 4 in (xj, xj + 1):
                            mid = (c[xj], c[xj + 1], c[xj + 2])
                        else:
                            mid = (c[xj + 2], c[(xj + 3) % 4], c[xj])
                        return [mid + (xx, bb)]
        return None

    def r7(self):
        dvs = bits(self.dm)
        for p, q, r in combinations(dvs, 3):
            e = (
                self.g.has_edge(p, q),
                self.g.has_edge(p, r),
                self.g.has_edge(q, r),
            )
            if sum(e) == 1:
                edge = [(p, q), (p, r), (q, r)][e.index(True)]
                lone = ({p, q, r} - set(edge)).pop()
                return [edge + (lone, self.c[1], self.c[3])]
        return None

    def r8(self):
        c = self.c
        for j in range(2):
            for xx in bits(self.xm[j]):
                non = self.dm & ~self.adj(xx)
                if non:
                    dd = bits(non)[0]
                    return [(c[j], c[j + 1], c[j + 2], xx, dd)]
        return None

    def _a_pairs(self, j):
        for p in bits(self.am[j]):
            for q in bits(self.adj(p) & self.am[(j + 2) % 4]):
                yield p, q

    def r9a(self, j):
        c = self.c
        for p, q in self._a_pairs(j):
            both = self.adj(p) | self.adj(q)
            for side in ((j + 1) % 4, (j + 3) % 4):
                anti = self.am[side] & ~both
                if anti.bit_count() >= 2:
                    r, s = bits(anti)[:2]
                    return [(p, q, r, c[side], s)]
        return None

    def r9b(self, j):
        c = self.c
        k = 1 - j
        for p, q in self._a_pairs(j):
            compl = self.xm[k] & self.adj(p) & self.adj(q)
            if compl.bit_count() >= 2:
                xx, xx2 = bits(compl)[:2]
                return [(p, xx, c[(j + 1) % 4], xx2, q)]
        return None

    def r9c(self, j):
        c = self.c
        k = 1 - j
        for p, q in self._a_pairs(j):
            miss = (self.dm | self.xm[k]) & ~(self.adj(p) | self.adj(q))
            if miss:
                r = bits(miss)[0]
                return [(p, q, c[(j + 1) % 4], r, c[(j + 3) % 4])]
        return None

    def r10(self, i, j):
        c = self.c
        i2, i3 = (i + 2) % 4, (i + 3) % 4
        for p in bits(self.am[i]):
            for q in bits(self.adj(p) & self.am[(i + 1) % 4]):
                for xx in bits(self.xm[j]):
                    px = self.g.has_edge(p, xx)
                    qx = self.g.has_edge(q, xx)
                    if px and qx:
                        return [(q, xx, c[i], c[(i + 1) % 4], p)]
                    if not px and not qx:
                        return [(p, q, xx, c[i2], c[i3])]
        return None

    def r11(self, j):
        c = self.c
        for src in (self.am[j], self.am[(j + 2) % 4]):
            for v in bits(src):
                nb = self.adj(v) & self.xm[j]
                if nb.bit_count() >= 2:
                    xx, xx2 = bits(nb)[:2]
                    return [(c[j], xx, c[j + 2], xx2, v)]
        return None

    def r12a(self, i):
        c = self.c
        i1, i2, i3 = (i + 1) % 4, (i + 2) % 4, (i + 3) % 4

        def wit1(p, q, r):
            return [(p, c[i], c[i3], q, r)]

        out = self._at_most_one_neighbor(
            self.bm[i], self.am[i3] | self.bm[i2], wit1
        )
        if out:
            return out

        def wit2(p, q, r):
            return [(p, c[i1], c[i2], q, r)]

        return self._at_most_one_neighbor(
            self.bm[i], self.am[i2] | self.bm[i2], wit2
        )

    def r12b(self, i):
        c = self.c
        i1, i2, i3 = (i + 1) % 4, (i + 2) % 4, (i + 3) % 4

        def wit1(p, q, r):
            return [(p, c[i], q, c[i2], r)]

        out = self._at_most_one_nonneighbor(
            self.am[i] | self.bm[i], self.bm[i1] | self.bm[i2], wit1
        )
        if out:
            return out

        def wit2(p, q, r):
            return [(p, c[i1], q, c[i3], r)]

        return self._at_most_one_nonneighbor(
            self.am[i1] | self.bm[i], self.bm[i3] | self.bm[i2], wit2
        )

    def r13(self, i):
        c = self.c
        left = self.am[i] | self.bm[i] | self.tm
        right = self.am[(i + 1) % 4] | self.bm[i]

        def wit(p, q, r):
            return [(c[(i + 2) % 4], c[(i + 3) % 4], p, q, r)]

        out = self._at_most_one_neighbor(left, right, wit)
        if out:
            return out
        return self._at_most_one_neighbor(right, left, wit)

    def r14(self, i):
        c = self.c
        pair = self.first_adjacent_pair(self.am[i] | self.bm[i])
        if pair:
            return [(pair[0], pair[1], c[i], c[(i + 3) % 4], c[(i + 2) % 4])]
        pair = self.first_adjacent_pair(self.am[(i + 1) % 4] | self.bm[i])
        if pair:
            p, q = pair
            return [(p, q, c[(i + 1) % 4], c[(i + 2) % 4], c[(i + 3) % 4])]
        return None

    def r15(self, i):
        c = self.c
        i1, i2, i3 = (i + 1) % 4, (i + 2) % 4, (i + 3) % 4
        left = self.am[i] | self.bm[i] | self.am[i1]
        for p in bits(left):
            non = self.bm[i2] & ~self.adj(p)
            if non:
                q = bits(non)[0]
                if (1 << p) & (self.am[i] | self.bm[i]):
                    return [(q, c[i2], c[i3], c[i], p)]
                return [(q, c[i2], c[i3], c[i1], p)]
        if left and self.bm[i2].bit_count() >= 2:
            q, q2 = bits(self.bm[i2])[:2]
            p = bits(left)[0]
            if self.g.has_edge(q, q2):
                return [(q, q2, c[i2], c[i1], c[i])]
            return [(p, q, c[i2], q2, c[i3])]
        return None


_CONDITIONS = {
    "R12a": ("K23", "k23_free"),
    "R12b": ("K2_K3", "k2k3_free"),
    "R13": ("K2_K3", "k2k3_free"),
    "R14": ("CO_BANNER", "cobanner_free"),
    "R15": ("CO_BANNER", "cobanner_free"),
}


def _classify(
    g: Graph,
    checker: _Checker,
    prop_id: str,
    index: tuple[int, ...],
    candidates,
) -> PropertyReport:
    cond = _CONDITIONS.get(prop_id)
    cond_ok = getattr(checker, cond[1]) if cond else True
    if candidates is None:
        status = "holds" if cond_ok else "not-applicable"
        return PropertyReport(prop_id, index, status, claim_holds=True)
    # the claim failed: prefer a class-forbidden witness
    tried = [tuple(sorted(set(cand))) for cand in candidates]
    for cand in tried:
        name = _forbidden_name(g, cand)
        if name:
            return PropertyReport(prop_id, index, "violated", False, cand, name)
    ok, wit = in_class(g)
    if not ok:
        name, emb = wit
        return PropertyReport(
            prop_id, index, "violated", False, tuple(sorted(emb)), name
        )
    # host is in class, so the failure only shows the side condition failing
    pattern_witness = None
    pattern_name = None
    if cond:
        for cand in tried:
            if len(cand) == pattern_graph(cond[0]).n and _induces_named(
                g, cand, cond[0]
            ):
                pattern_witness, pattern_name = cand, cond[0]
                break
        if pattern_witness is None:
            emb = find_induced(g, cond[0])
            if emb is not None:
                pattern_witness, pattern_name = tuple(sorted(emb)), cond[0]
    return PropertyReport(
        prop_id, index, "not-applicable", False, pattern_witness, pattern_name
    )


def check_properties(g: Graph, p: C4Partition) -> list[PropertyReport]:
    """One report per rule instance; see the module docstring for the
    status semantics."""
    ch = _Checker(g, p)
    reports: list[PropertyReport] = []

    def add(prop_id, index, candidates):
        reports.append(_classify(g, ch, prop_id, index, candidates))

    for i in range(4):
        add("R1", (i,), ch.r1(i))
    for i in range(4):
        add("R2", (i,), ch.r2(i))
    for i in range(4):
        add("R3", (i,), ch.r3(i))
    for j in range(2):
        add("R4", (j,), ch.r4(j))
    for j in range(2):
        add("R5", (j,), ch.r5(j))
    add("R6", (), ch.r6())
    add("R7", (), ch.r7())
    add("R8", (), ch.r8())
    for j in range(2):
        add("R9a", (j,), ch.r9a(j))
    for j in range(2):
        add("R9b", (j,), ch.r9b(j))
    for j in range(2):
        add("R9c", (j,), ch.r9c(j))
    for i in range(4):
        for j in range(2):
            add("R10", (i, j), ch.r10(i, j))
    for j in range(2):
        add("R11", (j,), ch.r11(j))
    for i in range(4):
        add("R12a", (i,), ch.r12a(i))
    for i in range(4):
        add("R12b", (i,), ch.r12b(i))
    for i in range(4):
        add("R13", (i,), ch.r13(i))
    for i in range(4):
        add("R14", (i,), ch.r14(i))
    for i in range(4):
        add("R15", (i,), ch.r15(i))
    return reports


def render_report(reports: list[PropertyReport]) -> list[str]:
    return [r.render() for r in reports]
