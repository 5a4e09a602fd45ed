"""Tests for the instance generators: parameter validation, frozen labelings,
structural invariants, and the determinism of the seeded random family."""

import warnings

import pytest

from bergecolor import (
    GenerationExhausted,
    GeneratorWarning,
    Graph,
    HyperprismSpec,
    PrismSpec,
    SpecError,
    contains_square,
    gen_hyperprism,
    gen_lk4_subdivision,
    gen_prism,
    gen_square_free_berge,
    is_berge,
    line_graph,
    omega,
    sidecar_metadata,
)

from conftest import (
    EVEN_PRISMS,
    HYPERPRISMS,
    LK4S,
    ODD_PRISMS,
    complete,
    cycle,
)
from oracles import contains_induced_prism


# ------------------------------------------------------------ spec validation


@pytest.mark.parametrize(
    "lengths",
    [(1, 2, 3), (2, 2, 3), (0, 2, 2), (-1, 3, 3), (2, 2), (2, 2, 2, 2)],
)
def test_prism_spec_rejected(lengths):
    with pytest.raises(SpecError):
        PrismSpec(lengths)


def test_prism_spec_vertex_count():
    assert PrismSpec((2, 2, 2)).n == 9
    assert PrismSpec((3, 5, 7)).n == 18


@pytest.mark.parametrize(
    "strips",
    [
        ((), (2,), (2,)),
        ((2, 3), (2,), (2,)),
        ((2,), (2,)),
        ((2,), (0,), (2,)),
        ((2,), (3,), (3,)),
    ],
)
def test_hyperprism_spec_rejected(strips):
    with pytest.raises(SpecError):
        HyperprismSpec(strips)


def test_hyperprism_spec_vertex_count():
    assert HyperprismSpec(((2, 2), (2,), (2,))).n == 12
    assert HyperprismSpec(((3,), (3,), (3,))).n == 12


@pytest.mark.parametrize(
    "lengths",
    [(2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2, 2), (0, 2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 3)],
)
def test_lk4_lengths_rejected(lengths):
    with pytest.raises(SpecError):
        gen_lk4_subdivision(lengths)


# -------------------------------------------------------------------- prisms


def test_prism_222_frozen_labeling():
    g = gen_prism(PrismSpec((2, 2, 2)))
    assert g.n == 9
    assert g.edges() == [
        (0, 1), (0, 2), (0, 6), (1, 2), (1, 7), (2, 8),
        (3, 4), (3, 5), (3, 6), (4, 5), (4, 7), (5, 8),
    ]
    assert contains_square(g) is None
    assert is_berge(g).ok
    assert omega(g) == 3


def test_prism_odd_rungs():
    g = gen_prism(PrismSpec((3, 3, 3)))
    assert g.n == 12
    assert contains_square(g) is None
    assert is_berge(g).ok


def test_prism_unit_rungs_warn():
    # all-unit rungs are legal parameters but the result has squares
    with pytest.warns(GeneratorWarning, match="square"):
        g = gen_prism(PrismSpec((1, 1, 1)))
    assert g.n == 6
    assert contains_square(g) is not None


@pytest.mark.parametrize("lengths", EVEN_PRISMS + ODD_PRISMS)
def test_prism_family_is_clean(lengths):
    with warnings.catch_warnings():
        warnings.simplefilter("error", GeneratorWarning)
        g = gen_prism(PrismSpec(lengths))
    assert g.n == 3 + sum(lengths)
    assert contains_square(g) is None


# --------------------------------------------------------------- hyperprisms


def test_degenerate_hyperprism_is_a_prism():
    hp = gen_hyperprism(HyperprismSpec(((2,), (2,), (2,))))
    pr = gen_prism(PrismSpec((2, 2, 2)))
    assert hp.n == pr.n
    assert hp.edges() == pr.edges()


def test_hyperprism_two_rung_strip():
    g = gen_hyperprism(HyperprismSpec(((2, 2), (2,), (2,))))
    assert g.n == 12
    assert contains_square(g) is None
    assert is_berge(g).ok


def test_hyperprism_odd_rungs():
    g = gen_hyperprism(HyperprismSpec(((3, 3), (3,), (3,))))
    assert contains_square(g) is None
    assert is_berge(g).ok


def test_hyperprism_two_fat_strips_warn():
    # two strips with two rungs each: four starts induce a square
    with pytest.warns(GeneratorWarning, match="square"):
        gen_hyperprism(HyperprismSpec(((2, 2), (2, 2), (2,))))


def _rungs(strips):
    return [(si, ln) for si, strip in enumerate(strips) for ln in strip]


@pytest.mark.parametrize("strips", HYPERPRISMS)
def test_hyperprism_structure(strips):
    with warnings.catch_warnings():
        warnings.simplefilter("error", GeneratorWarning)
        g = gen_hyperprism(HyperprismSpec(strips))
    rungs = _rungs(strips)
    nrungs = len(rungs)

    # start-start and end-end edges exactly between different strips
    for i in range(nrungs):
        for j in range(i + 1, nrungs):
            cross = rungs[i][0] != rungs[j][0]
            assert g.adjacent(i, j) == cross
            assert g.adjacent(nrungs + i, nrungs + j) == cross
            assert not g.adjacent(i, nrungs + j) or (i == j and rungs[i][1] == 1)

    # each rung is a path start -> interiors -> end, interiors of degree 2
    nxt = 2 * nrungs
    for i, (_, length) in enumerate(rungs):
        chain = [i] + list(range(nxt, nxt + length - 1)) + [nrungs + i]
        nxt += length - 1
        for a, b in zip(chain, chain[1:]):
            assert g.adjacent(a, b)
        for v in chain[1:-1]:
            assert g.degree(v) == 2
    assert nxt == g.n


# --------------------------------------------------------------- line graphs


def test_line_graph_of_c5_is_c5():
    lg = line_graph(cycle(5))
    assert lg.n == 5
    assert sorted(lg.degree(v) for v in range(5)) == [2, 2, 2, 2, 2]
    assert lg.edges() == [(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)]


def test_line_graph_degree_identity():
    for h in [cycle(6), complete(4), Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])]:
        lg = line_graph(h)
        assert lg.n == h.m
        for i, (u, v) in enumerate(h.edges()):
            assert lg.degree(i) == h.degree(u) + h.degree(v) - 2


def test_line_graph_of_edgeless():
    assert line_graph(Graph(3)).n == 0


# ----------------------------------------------------------- lk4 subdivision


def test_lk4_all_twos():
    g = gen_lk4_subdivision((2, 2, 2, 2, 2, 2))
    assert g.n == 12
    assert contains_square(g) is None
    assert is_berge(g).ok
    assert omega(g) == 3


def test_lk4_contains_a_prism():
    # branch vertices of the K4 leave triangles in the line graph; three
    # subdivided branches between two of them carry an induced prism
    g = gen_lk4_subdivision((2, 2, 2, 2, 2, 2))
    assert contains_induced_prism(g)


@pytest.mark.parametrize("lengths", LK4S)
def test_lk4_family_is_clean(lengths):
    with warnings.catch_warnings():
        warnings.simplefilter("error", GeneratorWarning)
        g = gen_lk4_subdivision(lengths)
    assert g.n == sum(lengths)
    assert contains_square(g) is None


# -------------------------------------------------------------- seeded random


def test_random_rejects_negative():
    with pytest.raises(SpecError):
        gen_square_free_berge(-1, 0)


def test_random_empty_and_tiny():
    assert gen_square_free_berge(0, 0).n == 0
    g = gen_square_free_berge(1, 0)
    assert (g.n, g.m) == (1, 0)


def test_random_is_deterministic():
    for n, seed in [(8, 0), (12, 7), (25, 3), (40, 1)]:
        a = gen_square_free_berge(n, seed)
        b = gen_square_free_berge(n, seed)
        assert a.n == b.n and a.edges() == b.edges()


def test_random_frozen_instance():
    # pins the construction stream itself: any drift in draw order or
    # parameter ranges changes this instance
    g = gen_square_free_berge(12, 7)
    assert g.edges() == [(0, 7), (1, 11), (3, 10), (6, 7), (6, 8), (6, 11)]


def test_random_seeds_differ():
    diffs = 0
    for seed in range(4):
        a = gen_square_free_berge(20, seed)
        b = gen_square_free_berge(20, seed + 10)
        diffs += a.edges() != b.edges()
    assert diffs > 0


def test_random_output_is_square_free():
    for n in range(1, 41):
        for seed in range(3):
            g = gen_square_free_berge(n, seed)
            assert g.n == n
            assert contains_square(g) is None, (n, seed)


def test_random_output_is_berge_when_checkable():
    for n in range(1, 21):
        for seed in range(3):
            g = gen_square_free_berge(n, seed)
            assert is_berge(g).ok, (n, seed)


def test_random_exhaustion_is_loud():
    with pytest.raises(GenerationExhausted):
        gen_square_free_berge(10, 0, max_attempts=0)


# ------------------------------------------------------------------- sidecar


def test_sidecar_metadata_shape():
    g = gen_prism(PrismSpec((2, 2, 2)))
    doc = sidecar_metadata("prism", {"lengths": [2, 2, 2]}, g)
    assert doc == {
        "schema": "bergecolor-instance/1",
        "construction": "prism",
        "params": {"lengths": [2, 2, 2]},
        "n": 9,
        "m": 12,
    }
