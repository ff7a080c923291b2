"""Seeded random generation of class members and fuzz campaigns.

Randomness comes from numpy's PCG64 generator.  A sampler config with seed
``s`` draws its i-th attempt from ``Generator(PCG64(SeedSequence([s, i])))``,
so streams are reproducible from the written-down seed alone and samples
are independent of each other (campaigns may evaluate them in any order).

Two sampling modes:

* ``reject``: draw G(n, p) until the draw is already in class;
* ``repair``: draw G(n, p) once, then repeatedly delete the lowest vertex
  of some forbidden embedding until the remainder is in class (the result
  can have fewer than ``n`` vertices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .engine import bound, color, color_via_complement, find_certificate
from .graphs import Graph, GraphError, delete_vertices, encode_graph6
from .oracles import chromatic_number, clique_number
from .patterns import contains, in_class, is_free


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    edge_prob: float
    seed: int
    mode: str = "reject"  # "reject" | "repair"
    max_attempts: int = 10000

    def __post_init__(self):
        if not (0.0 <= self.edge_prob <= 1.0):
            raise GraphError(f"edge_prob must be in [0,1], got {self.edge_prob}")
        if self.mode not in ("reject", "repair"):
            raise GraphError(f"mode must be reject or repair, got {self.mode!r}")
        if self.n < 0 or self.max_attempts < 1:
            raise GraphError("n must be >= 0 and max_attempts >= 1")
        limit = 14 if self.mode == "reject" else 30
        if self.n > limit:
            raise GraphError(
                f"{self.mode} mode supports n <= {limit}, got {self.n}"
            )


class SamplingFailure(RuntimeError):
    """No in-class sample produced within the attempt budget."""


def _gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def _attempt_rng(seed: int, attempt: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, attempt])))


def _repair(g: Graph, bad: Callable[[Graph], Optional[tuple]]) -> Graph:
    witness = bad(g)
    while witness is not None:
        g, _ = delete_vertices(g, [min(witness)])
        witness = bad(g)
    return g


def sample_in_class(cfg: SamplerConfig) -> Graph:
    """One in-class sample per the config; deterministic in (seed, mode)."""

    def violation(g: Graph):
        ok, wit = in_class(g)
        return None if ok else wit[1]

    return _sample(cfg, violation)


def sample_free(cfg: SamplerConfig, patterns: Sequence[str]) -> Graph:
    """Like :func:`sample_in_class` but for an arbitrary forbidden set."""

    def violation(g: Graph):
        ok, wit = is_free(g, tuple(patterns))
        return None if ok else wit[1]

    return _sample(cfg, violation)


def _sample(cfg: SamplerConfig, violation) -> Graph:
    for attempt in range(cfg.max_attempts):
        rng = _attempt_rng(cfg.seed, attempt)
        g = _gnp(cfg.n, cfg.edge_prob, rng)
        if cfg.mode == "repair":
            return _repair(g, violation)
        if violation(g) is None:
            return g
    raise SamplingFailure(
        f"no sample within {cfg.max_attempts} attempts (n={cfg.n}, "
        f"p={cfg.edge_prob}, seed={cfg.seed})"
    )


# -- fuzz campaign -----------------------------------------------------------


@dataclass(frozen=True)
class FuzzViolation:
    sample_index: int
    graph6: str
    check: str
    detail: str


@dataclass(frozen=True)
class FuzzReport:
    samples: int
    violations: tuple[FuzzViolation, ...]
    fallback_rate: float
    omega2_samples: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def render(self) -> list[str]:
        lines = [
            f"samples: {self.samples}",
            f"violations: {len(self.violations)}",
            f"fallback_rate: {self.fallback_rate:.3f}",
            f"omega<=2 samples: {self.omega2_samples}",
        ]
        lines.extend(
            f"  sample {v.sample_index} [{v.graph6}] {v.check}: {v.detail}"
            for v in self.violations
        )
        return lines


def fuzz_bound(cfg: SamplerConfig, count: int) -> FuzzReport:
    """Sample ``count`` class members and check, per sample: the engine's
    coloring is proper and within the bound, the exact chromatic number is
    within the bound (with ``chi <= 4`` when the clique number is 2), and
    every sample containing an induced 4-cycle yields a certificate from
    the certificate search or the complement route."""
    if count < 1:
        raise GraphError(f"count must be >= 1, got {count}")
    violations: list[FuzzViolation] = []
    fallbacks = 0
    omega2 = 0
    for i in range(count):
        sub = SamplerConfig(
            n=cfg.n,
            edge_prob=cfg.edge_prob,
            seed=_sub_seed(cfg.seed, i),
            mode=cfg.mode,
            max_attempts=cfg.max_attempts,
        )
        g = sample_in_class(sub)
        g6 = encode_graph6(g)

        def bad(check: str, detail: str):
            violations.append(FuzzViolation(i, g6, check, detail))

        derivation = color(g)
        if any(
            derivation.coloring[u] == derivation.coloring[v] for u, v in g.edges()
        ):
            bad("proper", "engine coloring has a monochromatic edge")
        w = clique_number(g) if g.n else 0
        target = bound(w) if w >= 1 else 0
        if g.n and derivation.colors_used > target:
            bad(
                "engine-bound",
                f"colors_used={derivation.colors_used} > bound={target}",
            )
        if derivation.fallback_used:
            fallbacks += 1
        chi, _ = chromatic_number(g)
        if g.n and chi > target:
            bad("exact-bound", f"chi={chi} > bound={target}")
        if w == 2:
            omega2 += 1
            if chi > 4:
                bad("omega2", f"chi={chi} > 4")
        if contains(g, "C4"):
            cert = find_certificate(g)
            if cert is None and color_via_complement(g) is None:
                bad("certificate", "no certificate and complement route failed")
    return FuzzReport(
        samples=count,
        violations=tuple(violations),
        fallback_rate=fallbacks / count,
        omega2_samples=omega2,
    )


def _sub_seed(seed: int, index: int) -> int:
    # fold the sample index into the seed without risking collisions
    # between nearby campaign seeds
    return (seed * 1_000_003 + index) % (1 << 63)
