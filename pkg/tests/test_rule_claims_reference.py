"""Dual-route check of the rule suite's claim evaluation.

The checker in ``chibind.partition`` works over bitmasks with per-rule
witness construction.  This file re-states every claim independently, as
direct quantified comprehensions over the block sets, and compares the
claim verdicts (not the witnesses) on random hosts, including hosts far
outside the class.  Any transcription slip in either route shows up as a
verdict mismatch.
"""

import random
from itertools import combinations

from chibind.graphs import Graph
from chibind.partition import ThreeNeighborsError, build_partition, check_properties
from chibind.patterns import find_all_induced
from conftest import random_graph


def reference_claims(g: Graph, part) -> dict[tuple, bool]:
    """Straight-from-the-statement evaluation of every rule claim."""
    c = part.cycle
    A = [set(s) for s in part.a]
    B = [set(s) for s in part.b]
    X = [set(s) for s in part.x]
    D = set(part.d)
    T = set(part.t)
    adj = g.has_edge

    def stable(vs):
        return all(not adj(u, v) for u, v in combinations(sorted(vs), 2))

    def clique(vs):
        return all(adj(u, v) for u, v in combinations(sorted(vs), 2))

    def anticomplete(us, vs):
        return all(not adj(u, v) for u in us for v in vs if u != v)

    def complete(us, vs):
        return all(adj(u, v) for u in us for v in vs if u != v)

    def nbrs(p, vs):
        return {v for v in vs if v != p and adj(p, v)}

    def nonnbrs(p, vs):
        return {v for v in vs if v != p and not adj(p, v)}

    out = {}
    for i in range(4):
        i1, i2, i3 = (i + 1) % 4, (i + 2) % 4, (i + 3) % 4
        out[("R1", i)] = stable(A[i] | T)
        out[("R2", i)] = all(
            len(nonnbrs(p, A[i2] | B[i1])) <= 1 for p in A[i] | B[i]
        ) and all(
            len(nonnbrs(p, B[i3] | A[i3])) <= 1 for p in A[i1] | B[i]
        )
        out[("R3", i)] = (
            all(clique(nbrs(p, D | B[i2])) for p in A[i] | B[i] | T)
            and all(clique(nbrs(p, B[i1])) for p in A[i])
            and all(len(nbrs(p, B[i2])) <= 1 for p in A[i])
            and all(len(nbrs(p, B[i1])) <= 1 for p in A[i])
        )
        out[("R10", i, 0)] = all(
            sum((adj(p, x), adj(q, x))) == 1
            for p in A[i]
            for q in A[i1]
            if adj(p, q)
            for x in X[0]
        )
        out[("R10", i, 1)] = all(
            sum((adj(p, x), adj(q, x))) == 1
            for p in A[i]
            for q in A[i1]
            if adj(p, q)
            for x in X[1]
        )
        out[("R12a", i)] = all(
            len(nbrs(p, A[i3] | B[i2])) <= 1 for p in B[i]
        ) and all(len(nbrs(p, A[i2] | B[i2])) <= 1 for p in B[i])
        out[("R12b", i)] = all(
            len(nonnbrs(p, B[i1] | B[i2])) <= 1 for p in A[i] | B[i]
        ) and all(
            len(nonnbrs(p, B[i3] | B[i2])) <= 1 for p in A[i1] | B[i]
        )
        out[("R13", i)] = all(
            len(nbrs(p, A[i1] | B[i])) <= 1 for p in A[i] | B[i] | T
        ) and all(len(nbrs(p, A[i] | B[i] | T)) <= 1 for p in A[i1] | B[i])
        out[("R14", i)] = stable(A[i] | B[i]) and stable(A[i1] | B[i])
        left = A[i] | B[i] | A[i1]
        out[("R15", i)] = complete(left, B[i2]) and (
            not left or len(B[i2]) <= 1
        )
    for j in range(2):
        j1, j2, j3 = (j + 1) % 4, (j + 2) % 4, (j + 3) % 4
        out[("R4", j)] = all(
            nbrs(b, B[j1] | B[j3] | D) == nbrs(b2, B[j1] | B[j3] | D)
            for b in B[j]
            for b2 in B[j2]
            if adj(b, b2)
        )
        out[("R5", j)] = stable(X[j])
        pairs = [
            (p, q) for p in A[j] for q in A[j2] if adj(p, q)
        ]
        out[("R9a", j)] = all(
            len([r for r in A[side] if not adj(r, p) and not adj(r, q)]) <= 1
            for p, q in pairs
            for side in (j1, j3)
        )
        out[("R9b", j)] = all(
            len([x for x in X[1 - j] if adj(x, p) and adj(x, q)]) <= 1
            for p, q in pairs
        )
        out[("R9c", j)] = all(
            adj(r, p) or adj(r, q) for p, q in pairs for r in D | X[1 - j]
        )
        out[("R11", j)] = all(
            len(nbrs(v, X[j])) <= 1 for v in A[j] | A[j2]
        )
    out[("R6",)] = anticomplete(B[0] | B[1] | B[2] | B[3], X[0] | X[1])
    out[("R7",)] = all(
        sum((adj(p, q), adj(p, r), adj(q, r))) != 1
        for p, q, r in combinations(sorted(D), 3)
    )
    out[("R8",)] = complete(X[0] | X[1], D)
    return out


def test_claim_verdicts_match_reference(rng):
    hosts = 0
    while hosts < 200:
        g = random_graph(rng, rng.randint(5, 10), rng.choice([0.3, 0.5, 0.7]))
        for emb in find_all_induced(g, "C4"):
            try:
                part = build_partition(g, emb)
            except ThreeNeighborsError:
                break
            hosts += 1
            expected = reference_claims(g, part)
            got = {
                (r.property_id, *r.index): r.claim_holds
                for r in check_properties(g, part)
            }
            assert got == expected, (list(g.edges()), emb)
            break  # one embedding per host keeps the sweep broad


def test_claim_verdicts_match_on_mutants():
    from conftest import RULE_MUTANTS, mutant_graph

    for rule in RULE_MUTANTS:
        g = mutant_graph(rule)
        part = build_partition(g, (0, 1, 2, 3))
        expected = reference_claims(g, part)
        got = {
            (r.property_id, *r.index): r.claim_holds
            for r in check_properties(g, part)
        }
        assert got == expected, rule
