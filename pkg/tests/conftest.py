"""Shared helpers: deterministic random graphs and the R-rule mutants."""

import random

import pytest

from chibind.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


CYCLE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]

# Hand-built minimal hosts, one per rule.  Each entry: extra edges beyond
# the anchor cycle 0-1-2-3, and the full set of rules expected to report
# "violated" (collateral entries are structurally forced: any host failing
# the intended rule's claim also fails the listed companions).
RULE_MUTANTS = {
    "R1": ([(4, 5)], {"R1"}),
    "R2": ([(4, 0), (5, 2), (6, 2)], {"R2"}),
    "R3": (
        [(5, 0), (5, 1), (5, 2), (5, 3), (6, 0), (6, 1), (6, 2), (6, 3),
         (4, 5), (4, 6)],
        {"R3"},
    ),
    "R4": ([(4, 0), (4, 1), (5, 2), (5, 3), (6, 1), (6, 2), (4, 5), (4, 6)],
           {"R4"}),
    "R5": ([(4, 0), (4, 2), (5, 0), (5, 2), (4, 5)], {"R5"}),
    "R6": ([(4, 0), (4, 1), (5, 0), (5, 2), (4, 5)], {"R6"}),
    "R7": (
        [(4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 1), (5, 2), (5, 3),
         (6, 0), (6, 1), (6, 2), (6, 3), (4, 5)],
        {"R7"},
    ),
    "R8": ([(4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 2)], {"R8"}),
    "R9a": ([(4, 0), (5, 2), (4, 5), (6, 1), (7, 1)], {"R9a"}),
    "R9b": (
        [(4, 0), (5, 2), (4, 5), (6, 1), (6, 3), (7, 1), (7, 3),
         (6, 4), (6, 5), (7, 4), (7, 5)],
        {"R9b"},
    ),
    "R9c": ([(4, 0), (5, 2), (4, 5), (6, 0), (6, 1), (6, 2), (6, 3)],
            {"R9c"}),
    "R10": ([(4, 0), (5, 1), (4, 5), (6, 0), (6, 2), (6, 4), (6, 5)],
            {"R10"}),
    "R11": ([(4, 0), (5, 0), (5, 2), (6, 0), (6, 2), (4, 5), (4, 6)],
            {"R11"}),
    "R12a": ([(4, 0), (4, 1), (5, 3), (6, 2), (6, 3), (4, 5), (4, 6), (5, 6)],
             {"R12a", "R14"}),
    "R12b": ([(4, 0), (5, 1), (5, 2), (6, 2), (6, 3)], {"R12b", "R15"}),
    "R13": ([(4, 0), (5, 1), (6, 1), (4, 5), (4, 6)], {"R13"}),
    "R14": ([(4, 0), (5, 0), (4, 5)], {"R14", "R1"}),
    "R15": ([(4, 0), (5, 2), (5, 3), (6, 2), (6, 3), (4, 5), (4, 6)],
            {"R15", "R3"}),
}


def mutant_graph(rule: str) -> Graph:
    extra, _ = RULE_MUTANTS[rule]
    n = 1 + max(max(e) for e in CYCLE_EDGES + extra)
    return Graph(n, CYCLE_EDGES + extra)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
