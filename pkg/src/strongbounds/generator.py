"""Reproducible random strong digraphs for tests and the verify harness."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, from_arcs, is_strong
from .errors import InvalidConfig


@dataclass(frozen=True)
class GeneratorConfig:
    """Identical configs produce identical digraphs (PCG64 stream)."""

    n: int
    p: float
    seed: int
    max_retries: int = 20

    def validate(self) -> None:
        if self.n < 1:
            raise InvalidConfig(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidConfig(f"p must be in [0, 1], got {self.p}")
        if self.max_retries < 0:
            raise InvalidConfig(f"max_retries must be >= 0, got {self.max_retries}")


@dataclass(frozen=True)
class GeneratedDigraph:
    digraph: Digraph
    config: GeneratorConfig
    attempts: int
    augmented: bool


def _sample_arcs(rng: np.random.Generator, n: int, p: float) -> set[tuple[int, int]]:
    draw = rng.random((n, n)) < p
    np.fill_diagonal(draw, False)
    return {(int(a), int(b)) for a, b in np.argwhere(draw)}


def generate_strong_digraph(cfg: GeneratorConfig) -> GeneratedDigraph:
    """Sample each ordered non-loop pair with probability p until strong.

    After max_retries failed resamples, the directed Hamiltonian cycle
    0->1->...->n-1->0 is added to the last sample; the augmentation is
    reported so experiments can filter such samples.
    """
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    arcs: set[tuple[int, int]] = set()
    attempts = 0
    for attempts in range(1, cfg.max_retries + 2):
        arcs = _sample_arcs(rng, cfg.n, cfg.p)
        d = from_arcs(cfg.n, sorted(arcs))
        if is_strong(d):
            return GeneratedDigraph(digraph=d, config=cfg, attempts=attempts, augmented=False)
    cycle = {(v, (v + 1) % cfg.n) for v in range(cfg.n)} if cfg.n > 1 else set()
    d = from_arcs(cfg.n, sorted(arcs | cycle))
    return GeneratedDigraph(digraph=d, config=cfg, attempts=attempts, augmented=True)
