import random
from itertools import combinations

import pytest

from chibind.graphs import Graph, complement, complete, cycle, empty, join, path
from chibind.oracles import (
    ChromaticTimeout,
    PreconditionError,
    chi_alpha2,
    chromatic_number,
    clique_number,
    exact_stats,
    matching_size_bruteforce,
    max_clique,
    max_matching,
    stability_number,
    theta,
)
from conftest import random_graph


def brute_max_clique_size(g):
    best = 0
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if g.is_clique(sub):
                return r
    return best


def brute_chromatic(g):
    """Reference chromatic number: plain vertex-by-vertex k-coloring."""
    if g.n == 0:
        return 0

    def colorable(k):
        colors = [-1] * g.n

        def place(v):
            if v == g.n:
                return True
            for c in range(min(k, v + 1)):
                if all(colors[u] != c for u in g.neighbors(v) if u < v):
                    colors[v] = c
                    if place(v + 1):
                        return True
            colors[v] = -1
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def test_max_clique_examples():
    assert max_clique(complete(5)) == (0, 1, 2, 3, 4)
    assert max_clique(cycle(5)) == (0, 1)
    assert max_clique(empty(3)) == (0,)
    with pytest.raises(PreconditionError):
        max_clique(empty(0))


def test_max_clique_is_lex_smallest(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), 0.55)
        got = max_clique(g)
        size = brute_max_clique_size(g)
        assert len(got) == size
        assert g.is_clique(got)
        best = min(
            (s for s in combinations(range(g.n), size) if g.is_clique(s))
        )
        assert got == best


def test_clique_alpha_duality(rng):
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert clique_number(g) == stability_number(complement(g))


def test_chromatic_small_examples():
    assert chromatic_number(cycle(5))[0] == 3
    assert chromatic_number(cycle(6))[0] == 2
    assert chromatic_number(complete(4))[0] == 4
    assert chromatic_number(empty(0)) == (0, ())
    assert chromatic_number(empty(5))[0] == 1
    assert chromatic_number(path(2))[0] == 2
    # joins add exactly the clique size
    assert chromatic_number(join(cycle(5), complete(3)))[0] == 6


def test_chromatic_witness_is_proper_and_tight(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        chi, witness = chromatic_number(g)
        assert len(witness) == g.n
        used = set(witness)
        assert used == set(range(chi))
        for u, v in g.edges():
            assert witness[u] != witness[v]
        if g.n:
            assert chi >= clique_number(g)
            assert chi >= -(-g.n // stability_number(g))


def test_chi_theta_duality(rng):
    # chromatic number equals the clique cover number of the complement
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert chromatic_number(g)[0] == theta(complement(g))[0]


def test_chromatic_against_independent_bruteforce(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 8), rng.random())
        assert chromatic_number(g)[0] == brute_chromatic(g), list(g.edges())


def test_chromatic_timeout_is_loud():
    rng = random.Random(5)
    g = random_graph(rng, 30, 0.5)
    with pytest.raises(ChromaticTimeout):
        chromatic_number(g, timeout_ms=0)


def test_chromatic_large_n_warns(rng):
    g = random_graph(rng, 12, 0.3)
    with pytest.warns(UserWarning):
        chromatic_number(g, max_n=10)


def test_matching_examples():
    assert len(max_matching(complete(4))) == 2
    assert len(max_matching(cycle(5))) == 2
    assert max_matching(empty(4)) == ()
    # odd blossom: triangle with two pendants needs the contraction step
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    assert len(max_matching(g)) == 2


def test_matching_against_bruteforce(rng):
    for _ in range(250):
        g = random_graph(rng, rng.randint(0, 11), rng.choice([0.2, 0.4, 0.6]))
        matching = max_matching(g)
        used = set()
        for u, v in matching:
            assert g.has_edge(u, v)
            assert u not in used and v not in used
            used.update((u, v))
        assert len(matching) == matching_size_bruteforce(g)


def test_chi_alpha2():
    assert chi_alpha2(complete(5)) == 5
    g5 = cycle(5)
    assert chi_alpha2(g5) == 3
    with pytest.raises(PreconditionError):
        chi_alpha2(empty(3))


def test_matching_on_extremal_graphs():
    from chibind.extremal import clebsch_complement, g_k

    clebsch = complement(clebsch_complement())
    assert all(clebsch.degree(v) == 5 for v in range(16))
    assert len(max_matching(clebsch)) == 8
    co_g2 = complement(g_k(2))
    assert len(max_matching(co_g2)) == matching_size_bruteforce(co_g2)


def test_chi_alpha2_matches_exact(rng):
    found = 0
    while found < 60:
        g = random_graph(rng, rng.randint(1, 9), 0.75)
        if stability_number(g) <= 2:
            found += 1
            assert chi_alpha2(g) == chromatic_number(g)[0]


def test_exact_stats_invariants(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        s = exact_stats(g)
        assert s.chi >= s.omega
        assert s.theta >= s.alpha
        assert s.chi * s.alpha >= g.n
        assert s.chi == theta(complement(g))[0]
        assert s.omega == stability_number(complement(g))


def test_determinism(rng):
    for _ in range(30):
        g = random_graph(rng, 9, 0.5)
        assert chromatic_number(g) == chromatic_number(g)
        assert max_clique(g) == max_clique(g)
        assert max_matching(g) == max_matching(g)
