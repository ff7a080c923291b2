"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Sampling is fully seeded; every run checks identical graphs.
"""

import random
import time

import pytest

from chibind.engine import bound, color, color_via_complement, find_certificate
from chibind.extremal import (
    clebsch_complement,
    g_k,
    grotzsch,
    join_kt,
    schlafli,
    tightness_report,
)
from chibind.graphs import Graph, complement, induced
from chibind.oracles import (
    chi_alpha2,
    chromatic_number,
    clique_number,
    stability_number,
)
from chibind.partition import all_c4_partitions, build_partition, check_properties
from chibind.patterns import (
    PATTERN_NAMES,
    contains,
    contains_by_enumeration,
    in_class,
    pattern_graph,
    _isomorphic_small,
)
from chibind.sampling import SamplerConfig, sample_free, sample_in_class
from conftest import RULE_MUTANTS, mutant_graph


def report(criterion: int, ok: bool, detail: str):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {status}: criterion {criterion} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def _class_sample_stream(seed_base: int):
    """Deterministic stream of class members with 8 <= n <= 12."""
    attempt = 0
    probs = (0.15, 0.3, 0.45, 0.6, 0.75)
    while True:
        cfg = SamplerConfig(
            n=12 + attempt % 5,
            edge_prob=probs[attempt % len(probs)],
            seed=seed_base + attempt,
            mode="repair",
        )
        g = sample_in_class(cfg)
        attempt += 1
        if 8 <= g.n <= 12:
            yield g


@pytest.fixture(scope="module")
def class_samples():
    """500 seeded class members with 8 <= n <= 12 (criteria 6 and 7)."""
    stream = _class_sample_stream(900_000)
    return [next(stream) for _ in range(500)]


def test_criterion_1_schlafli_numbers():
    start = time.time()
    q = schlafli()
    ok = q.n == 27 and all(q.degree(v) == 16 for v in range(q.n))
    ok = ok and clique_number(q) == 6 and stability_number(q) == 3
    chi_q, _ = chromatic_number(q)
    qbar = complement(q)
    chi_qbar, _ = chromatic_number(qbar)
    ok = ok and chi_q == 9 and clique_number(qbar) == 3 and chi_qbar == 6
    elapsed = time.time() - start
    ok = ok and elapsed <= 300
    report(
        1,
        ok,
        f"Schlafli 16-regular on 27, omega=6 alpha=3 chi={chi_q}, "
        f"complement omega=3 chi={chi_qbar} [{elapsed:.1f}s]",
    )


def test_criterion_2_clebsch_complement_numbers():
    start = time.time()
    h = clebsch_complement()
    ok = h.n == 16 and clique_number(h) == 5 and chi_alpha2(h) == 8
    for v in range(16):
        hv, _ = induced(h, [u for u in range(16) if u != v])
        ok = ok and clique_number(hv) == 5 and chi_alpha2(hv) == 8
    for v in (0, 7, 15):  # exact-solver cross-check on 3 of the 16
        hv, _ = induced(h, [u for u in range(16) if u != v])
        ok = ok and chromatic_number(hv)[0] == 8
    elapsed = time.time() - start
    ok = ok and elapsed <= 60
    report(2, ok, f"Clebsch complement: chi=8 and omega=5 for H and all "
                  f"16 single-vertex deletions [{elapsed:.1f}s]")


def test_criterion_3_join_arithmetic():
    q = schlafli()
    qbar = complement(q)
    h = clebsch_complement()
    ok = True
    for t in (1, 2, 3):
        jq = join_kt(q, t)
        ok = ok and clique_number(jq) == t + 6
        ok = ok and chromatic_number(jq)[0] == t + 9
        jqb = join_kt(qbar, t)
        ok = ok and clique_number(jqb) == t + 3
        ok = ok and chromatic_number(jqb)[0] == t + 6
        jh = join_kt(h, t)
        ok = ok and clique_number(jh) == t + 5
        ok = ok and chromatic_number(jh)[0] == t + 8
    report(3, ok, "join with K_t shifts omega and chi by t on all three "
                  "base graphs, t in {1,2,3}")


def test_criterion_4_gk_suite():
    start = time.time()
    ok = True
    for k in range(2, 13):
        g = g_k(k)
        ok = ok and g.n == 3 * k
        ok = ok and clique_number(g) == k + 1
        ok = ok and stability_number(g) == 2
        ok = ok and in_class(g)[0]
        ok = ok and chi_alpha2(g) == -(-3 * k // 2)
    elapsed = time.time() - start
    ok = ok and elapsed <= 60
    report(4, ok, f"g_k suite k=2..12: |V|=3k, omega=k+1, alpha=2, "
                  f"chi=ceil(3k/2), in class [{elapsed:.1f}s]")


def test_criterion_5_tightness_table():
    rows = tightness_report(12)
    ok = len(rows) == 10 and all(r.ok for r in rows)
    detail = ", ".join(f"k={r.k}:chi={r.chi}" for r in rows)
    report(5, ok, f"tightness table k=3..12 all rows reach the bound "
                  f"({detail})")


def test_criterion_6_main_bound_on_samples(class_samples):
    start = time.time()
    failures = []
    omega2_seen = 0
    for idx, g in enumerate(class_samples):
        w = clique_number(g)
        target = bound(w)
        derivation = color(g)
        if any(derivation.coloring[u] == derivation.coloring[v] for u, v in g.edges()):
            failures.append((idx, "improper"))
        if derivation.colors_used > target:
            failures.append((idx, "engine over bound"))
        chi, _ = chromatic_number(g)
        if chi > target:
            failures.append((idx, "exact chi over bound"))
        if w == 2:
            omega2_seen += 1
            if chi > 4:
                failures.append((idx, "omega-2 chi over 4"))
    elapsed = time.time() - start
    ok = not failures and omega2_seen >= 1 and elapsed <= 600
    report(
        6,
        ok,
        f"500 samples (8<=n<=12): proper colorings within "
        f"max(w+3, floor(3w/2)-1); {omega2_seen} omega-2 samples all "
        f"4-colorable; {len(failures)} failures [{elapsed:.1f}s]",
    )


def test_criterion_7_certificate_coverage_on_samples(class_samples):
    failures = 0
    with_c4 = 0
    for g in class_samples:
        if not contains(g, "C4"):
            continue
        with_c4 += 1
        if find_certificate(g) is None and color_via_complement(g) is None:
            failures += 1
    ok = failures == 0 and with_c4 > 0
    report(7, ok, f"every sampled class member containing a 4-cycle "
                  f"({with_c4} of 500) yields a certificate; "
                  f"{failures} failures")


def test_criterion_8_rule_suite():
    start = time.time()
    violations = 0
    used = 0
    stream = _class_sample_stream(910_000)
    while used < 300:
        g = next(stream)
        if not contains(g, "C4"):
            continue
        used += 1
        for emb, part in all_c4_partitions(g):
            reports = check_properties(g, part)
            violations += sum(1 for r in reports if r.status == "violated")
    mutants_ok = True
    for rule, (_, expected) in sorted(RULE_MUTANTS.items()):
        g = mutant_graph(rule)
        part = build_partition(g, (0, 1, 2, 3))
        reports = check_properties(g, part)
        violated = {r.property_id for r in reports if r.status == "violated"}
        if rule not in violated or violated != expected:
            mutants_ok = False
        for r in reports:
            if r.status == "violated" and r.property_id == rule:
                sub, _ = induced(g, r.witness)
                if not _isomorphic_small(sub, pattern_graph(r.witness_pattern)):
                    mutants_ok = False
    elapsed = time.time() - start
    ok = used == 300 and violations == 0 and mutants_ok
    report(
        8,
        ok,
        f"rule suite: {used} class members with C4, {violations} violations "
        f"across all embeddings; 15 rule mutants each report their intended "
        f"violation with a verified witness [{elapsed:.1f}s]",
    )


def test_criterion_9_oracle_equivalence():
    start = time.time()
    rng = random.Random(20260810)
    mismatches = 0
    for _ in range(500):
        n = rng.randint(3, 9)
        p = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
        g = Graph(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < p
            ],
        )
        for name in PATTERN_NAMES:
            if contains(g, name) != contains_by_enumeration(g, name):
                mismatches += 1
    alpha2_checked = 0
    alpha2_bad = 0
    while alpha2_checked < 50:
        n = rng.randint(3, 9)
        g = Graph(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.75
            ],
        )
        if stability_number(g) > 2:
            continue
        alpha2_checked += 1
        if chi_alpha2(g) != chromatic_number(g)[0]:
            alpha2_bad += 1
    elapsed = time.time() - start
    ok = mismatches == 0 and alpha2_bad == 0
    report(
        9,
        ok,
        f"pattern detector vs exhaustive enumeration on 500 graphs x 15 "
        f"patterns: {mismatches} mismatches; chi_alpha2 vs exact on 50 "
        f"instances: {alpha2_bad} mismatches [{elapsed:.1f}s]",
    )


def test_criterion_10_grotzsch():
    g = grotzsch()
    ok = (
        clique_number(g) == 2
        and chromatic_number(g)[0] == 4
        and in_class(g)[0]
    )
    report(10, ok, "Grotzsch graph: omega=2, chi=4, in class")


def test_criterion_11_p6_c4_free_branch():
    collected = 0
    attempt = 0
    bad = 0
    while collected < 100:
        cfg = SamplerConfig(
            n=12 + attempt % 4,
            edge_prob=(0.2, 0.35, 0.5)[attempt % 3],
            seed=770_000 + attempt,
            mode="repair",
        )
        g = sample_free(cfg, ("P6", "C4"))
        attempt += 1
        if not (1 <= g.n <= 12):
            continue
        collected += 1
        w = clique_number(g)
        chi, _ = chromatic_number(g)
        if chi > -(-5 * w // 4):
            bad += 1
    ok = bad == 0
    report(11, ok, f"100 (P6,C4)-free samples: exact chi <= ceil(5w/4); "
                   f"{bad} failures")
