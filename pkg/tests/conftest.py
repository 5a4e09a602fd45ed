"""Shared fixtures: small named graphs and the acceptance corpus.

Corpus entries are (name, builder) pairs rather than graphs so determinism
tests can construct the same instance twice from scratch.
"""

from __future__ import annotations

import pytest

from bergecolor import (
    Graph,
    HyperprismSpec,
    PrismSpec,
    gen_hyperprism,
    gen_lk4_subdivision,
    gen_prism,
    gen_square_free_berge,
)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_minus_star(n: int, t: int) -> Graph:
    """K_n with the edges from vertex 0 to 1..t removed; triad-free and
    square-free for any 0 <= t < n."""
    dropped = {(0, i) for i in range(1, t + 1)}
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in dropped
    ]
    return Graph(n, edges)


EVEN_PRISMS = [
    (2, 2, 2), (2, 2, 4), (2, 4, 4), (4, 4, 4), (2, 4, 6),
    (6, 6, 6), (2, 2, 8), (4, 6, 8), (10, 10, 10), (16, 18, 20),
]
ODD_PRISMS = [
    (3, 3, 3), (3, 3, 5), (3, 5, 5), (5, 5, 5), (3, 5, 7),
    (7, 7, 7), (3, 3, 9), (9, 9, 9), (13, 15, 17),
]
HYPERPRISMS = [
    ((2, 2), (2,), (2,)),
    ((2, 2, 2), (2,), (2,)),
    ((4, 2), (2,), (4,)),
    ((2, 2), (4,), (6,)),
    ((4, 4), (4,), (4,)),
    ((6, 2), (2,), (2,)),
    ((2, 2, 2, 2), (2,), (2,)),
    ((4, 4, 2), (2,), (4,)),
    ((3, 3), (3,), (3,)),
    ((3, 5), (3,), (5,)),
    ((5, 5), (5,), (5,)),
    ((3, 3, 3), (3,), (3,)),
    ((7, 3), (5,), (3,)),
]
LK4S = [
    (2, 2, 2, 2, 2, 2),
    (2, 2, 2, 2, 2, 4),
    (4, 4, 4, 4, 4, 4),
    (2, 4, 2, 4, 2, 4),
    (6, 6, 6, 6, 6, 6),
    (2, 2, 4, 4, 6, 6),
    (3, 3, 3, 2, 2, 2),
    (5, 3, 3, 2, 2, 4),
    (3, 3, 5, 2, 4, 2),
    (2, 2, 2, 4, 4, 4),
]
EVEN_CYCLES = [6, 8, 10, 12, 14, 16]


def build_corpus() -> list[tuple[str, object]]:
    """(name, zero-argument builder) for every acceptance instance."""
    entries: list[tuple[str, object]] = []
    for ls in EVEN_PRISMS + ODD_PRISMS:
        entries.append(
            (f"prism{ls}", lambda ls=ls: gen_prism(PrismSpec(ls)))
        )
    for strips in HYPERPRISMS:
        entries.append(
            (
                f"hyperprism{strips}",
                lambda strips=strips: gen_hyperprism(HyperprismSpec(strips)),
            )
        )
    for ls in LK4S:
        entries.append((f"lk4{ls}", lambda ls=ls: gen_lk4_subdivision(ls)))
    for n in EVEN_CYCLES:
        entries.append((f"C{n}", lambda n=n: cycle(n)))
    for n in range(6, 15):
        for seed in range(6):
            entries.append(
                (
                    f"random(n={n},seed={seed})",
                    lambda n=n, seed=seed: gen_square_free_berge(n, seed),
                )
            )
    for n in range(15, 41):
        for seed in range(3):
            entries.append(
                (
                    f"random(n={n},seed={seed})",
                    lambda n=n, seed=seed: gen_square_free_berge(n, seed),
                )
            )
    for n in range(41, 61):
        entries.append(
            (f"random(n={n},seed=0)", lambda n=n: gen_square_free_berge(n, 0))
        )
    return entries


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_graphs(corpus):
    return [(name, make()) for name, make in corpus]
