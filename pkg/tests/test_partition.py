import random
from collections import Counter

import pytest

from chibind.graphs import Graph, GraphError, cycle, induced
from chibind.partition import (
    ThreeNeighborsError,
    all_c4_partitions,
    build_partition,
    check_properties,
    find_forbidden_five,
    render_report,
)
from chibind.patterns import _isomorphic_small, in_class, pattern_graph
from conftest import CYCLE_EDGES, RULE_MUTANTS, mutant_graph, random_graph


def in_class_sample(rng, n, p):
    while True:
        g = random_graph(rng, n, p)
        if in_class(g)[0]:
            return g


def test_bare_cycle_blocks_empty():
    part = build_partition(cycle(4), (0, 1, 2, 3))
    assert all(not s for s in part.a + part.b + part.x)
    assert not part.d and not part.t
    reports = check_properties(cycle(4), part)
    assert len(reports) == 55
    assert all(r.status in ("holds", "not-applicable") for r in reports)


def test_block_placement_examples():
    banner = Graph(5, CYCLE_EDGES + [(4, 0)])
    part = build_partition(banner, (0, 1, 2, 3))
    assert part.a == (frozenset({4}), frozenset(), frozenset(), frozenset())
    k23 = Graph(5, CYCLE_EDGES + [(4, 0), (4, 2)])
    part = build_partition(k23, (0, 1, 2, 3))
    assert part.x == (frozenset({4}), frozenset())
    host = Graph(
        9,
        CYCLE_EDGES
        + [(4, 1), (4, 2)]           # B2 slot (sees c1, c2)
        + [(5, 3), (5, 0)]           # B4 slot (sees c3, c0)
        + [(6, 1), (6, 3)]           # X2 slot (sees c1, c3)
        + [(7, 0), (7, 1), (7, 2), (7, 3)]  # D
        + [],                        # vertex 8 is T
    )
    part = build_partition(host, (0, 1, 2, 3))
    assert part.b[1] == frozenset({4})
    assert part.b[3] == frozenset({5})
    assert part.x[1] == frozenset({6})
    assert part.d == frozenset({7})
    assert part.t == frozenset({8})
    blocks = part.blocks()
    assert blocks["B2"] == frozenset({4}) and blocks["X2"] == frozenset({6})


def test_partition_is_a_partition(rng):
    for _ in range(60):
        g = in_class_sample(rng, rng.randint(5, 10), rng.choice([0.4, 0.6]))
        for emb, part in all_c4_partitions(g):
            seen = set(part.cycle)
            for block in (*part.a, *part.b, *part.x, part.d, part.t):
                assert not (block & seen)
                seen |= block
            assert seen == set(range(g.n))
            break


def test_invalid_cycle_rejected():
    g = cycle(4)
    with pytest.raises(GraphError):
        build_partition(g, (0, 1, 2, 2))
    with pytest.raises(GraphError):
        build_partition(g, (0, 2, 1, 3))
    k4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    with pytest.raises(GraphError):
        build_partition(k4, (0, 1, 2, 3))


def test_three_neighbor_vertex_raises_with_witness():
    g = Graph(5, CYCLE_EDGES + [(4, 0), (4, 1), (4, 2)])
    with pytest.raises(ThreeNeighborsError) as err:
        build_partition(g, (0, 1, 2, 3))
    assert err.value.vertex == 4
    witness = err.value.witness
    sub, _ = induced(g, witness)
    assert _isomorphic_small(sub, pattern_graph(err.value.pattern))
    assert err.value.pattern in ("P2_P3", "CO_P2_P3")


def test_find_forbidden_five_is_lex_first():
    g = Graph(5, CYCLE_EDGES + [(4, 0), (4, 1), (4, 2)])
    got = find_forbidden_five(g, (4,))
    assert got is not None
    vs, name = got
    assert 4 in vs and name in ("P2_P3", "CO_P2_P3")


def test_in_class_hosts_never_violate(rng):
    checked = 0
    while checked < 120:
        g = in_class_sample(rng, rng.randint(6, 10), rng.choice([0.35, 0.5, 0.7]))
        for emb, part in all_c4_partitions(g):
            reports = check_properties(g, part)
            bad = [r for r in reports if r.status == "violated"]
            assert not bad, (list(g.edges()), emb, render_report(bad))
            checked += 1
            if checked >= 120:
                break


def test_rotation_invariance(rng):
    host = mutant_graph("R4")
    rotations = [(0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1), (3, 0, 1, 2)]
    multisets = []
    for cyc in rotations:
        part = build_partition(host, cyc)
        reports = check_properties(host, part)
        multisets.append(Counter((r.property_id, r.status) for r in reports))
    assert all(m == multisets[0] for m in multisets)


@pytest.mark.parametrize("rule", sorted(RULE_MUTANTS))
def test_rule_mutants(rule):
    g = mutant_graph(rule)
    part = build_partition(g, (0, 1, 2, 3))
    reports = check_properties(g, part)
    violated = {r.property_id for r in reports if r.status == "violated"}
    assert rule in violated
    assert violated == RULE_MUTANTS[rule][1]
    for r in reports:
        if r.status != "violated":
            continue
        sub, _ = induced(g, r.witness)
        assert _isomorphic_small(sub, pattern_graph(r.witness_pattern))
        assert r.witness_pattern in ("P2_P3", "CO_P2_P3")


def test_conditional_rules_report_not_applicable():
    # in-class host whose only oddity is an A1-B1 edge: the stability claim
    # fails but the host stays in class, so the rule is inapplicable and the
    # witness exhibits the side-condition pattern
    g = Graph(6, CYCLE_EDGES + [(4, 0), (5, 0), (5, 1), (4, 5)])
    assert in_class(g)[0]
    part = build_partition(g, (0, 1, 2, 3))
    reports = check_properties(g, part)
    assert not [r for r in reports if r.status == "violated"]
    r14 = [r for r in reports if r.property_id == "R14" and not r.claim_holds]
    assert r14 and all(r.status == "not-applicable" for r in r14)
    assert any(r.witness_pattern == "CO_BANNER" for r in r14)


def test_render_report_lines():
    g = mutant_graph("R1")
    part = build_partition(g, (0, 1, 2, 3))
    lines = render_report(check_properties(g, part))
    assert len(lines) == 55
    assert any("R1[0]: violated" in ln and "P2_P3" in ln for ln in lines)
