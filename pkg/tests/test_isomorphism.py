import random
from itertools import combinations

import pytest

from unitalgraphs.graph import Graph
from unitalgraphs.isomorphism import (
    IsoWitness,
    NotFound,
    compose,
    find_isomorphism,
    is_isomorphism,
    refine,
)

from conftest import cycle, petersen


def relabel(g, perm):
    """Graph in which vertex perm[i] plays the role of vertex i of g."""
    return Graph.build(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


def test_refine_regular_is_uniform():
    assert refine(petersen()) == [0] * 10


def test_refine_path():
    colors = refine(Graph.build(3, [(0, 1), (1, 2)]))
    assert colors[0] == colors[2] != colors[1]
    assert len(set(colors)) == 2


def test_refine_idempotent_and_refining():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 15)
        g = Graph.build(n, [p for p in combinations(range(n), 2) if rng.random() < 0.3])
        init = [rng.randint(0, 2) for _ in range(n)]
        out = refine(g, init)
        assert refine(g, out) == out
        for i, j in combinations(range(n), 2):
            if out[i] == out[j]:
                assert init[i] == init[j]
        assert sorted(set(out)) == list(range(len(set(out))))


def test_self_isomorphism(state):
    f = state.f_variants[0]
    w = find_isomorphism(f, f)
    assert isinstance(w, IsoWitness)
    assert is_isomorphism(f, f, w.perm)


def test_relabelled_petersen():
    g = petersen()
    perm = list(range(10))
    random.Random(0).shuffle(perm)
    w = find_isomorphism(g, relabel(g, perm))
    assert w and is_isomorphism(g, relabel(g, perm), w.perm)


def test_non_isomorphic():
    two_triangles = Graph.build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    res = find_isomorphism(cycle(6), two_triangles)
    assert isinstance(res, NotFound) and res.reason == "search space exhausted"
    assert find_isomorphism(cycle(5), cycle(6)).reason.startswith("vertex counts")
    assert find_isomorphism(cycle(5), Graph.build(5, [(0, 1)])).reason == "edge counts differ"


def test_seeds_restrict_the_map():
    g = cycle(4)
    w = find_isomorphism(g, g, [1, 0, 0, 0], [0, 0, 1, 0])
    assert w.perm[0] == 2
    assert find_isomorphism(g, g, [1, 0, 0, 0], [1, 1, 0, 0]).reason == "seed class sizes differ"


def test_is_isomorphism_rejects_bad_maps():
    g = cycle(5)
    assert not is_isomorphism(g, g, [0, 2, 1, 3, 4])
    assert not is_isomorphism(g, g, [0, 0, 1, 2, 3])


@pytest.fixture(scope="module")
def witnesses(state):
    fs = state.f_variants
    return {(i, j): find_isomorphism(fs[i], fs[j]) for i, j in combinations(range(5), 2)}


def test_f_variants_pairwise_isomorphic(state, witnesses):
    fs = state.f_variants
    assert len(witnesses) == 10
    for (i, j), w in witnesses.items():
        assert w, (i, j)
        assert is_isomorphism(fs[i], fs[j], w.perm)


def test_composed_witnesses(state, witnesses):
    fs = state.f_variants
    for i, j, k in [(0, 1, 2), (1, 3, 4), (0, 2, 4)]:
        perm = compose(witnesses[(i, j)].perm, witnesses[(j, k)].perm)
        assert is_isomorphism(fs[i], fs[k], perm)


def test_witness_render():
    text = IsoWitness((1, 0)).render()
    assert text == "0 -> 1\n1 -> 0\n"
