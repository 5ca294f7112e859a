import itertools
import random
from fractions import Fraction

import pytest

from graphmorse.catalog import complete, cycle, generator, path
from graphmorse.complex import barycentric_refinement, dimension_function, euler, whitney_complex
from graphmorse.errors import CapExceeded, GraphInputError, NotLocallyInjective
from graphmorse.graphs import Digraph, Graph, mertens_graph
from graphmorse.hodge import BettiVector, betti
from graphmorse.morse import (NotMorse, cri_exact, cri_heuristic, curvature_expectation_exact,
                              curvature_levitt, curvature_mc, digraph_ph, energized_ph,
                              is_locally_injective, morse_inequalities_check, morse_min_exact,
                              morse_profile, ordering_function, ph_index, ph_polynomial_check,
                              ph_theorem_check, stable_sphere)

import oracles

# 1-2-4-3-1 around the cycle
C4_FIXTURE = Graph.from_edges([(1, 2), (2, 4), (3, 4), (1, 3)])
C4_VALUES = {1: 1, 2: 2, 3: 3, 4: 4}


def test_local_injectivity():
    k = whitney_complex(generator("kite"))
    assert is_locally_injective(barycentric_refinement(k), dimension_function(k))
    assert not is_locally_injective(complete(2), {0: 5, 1: 5})
    g = generator("octahedron")
    assert is_locally_injective(g, {v: v for v in g.vertices})
    with pytest.raises(GraphInputError):
        is_locally_injective(g, {0: 1})
    with pytest.raises(NotLocallyInjective):
        stable_sphere(complete(2), {0: 1, 1: 1}, 0)


def test_stable_sphere():
    g = generator("octahedron")
    f = {v: v for v in g.vertices}
    assert len(stable_sphere(g, f, 0)) == 0
    assert stable_sphere(g, f, 5) == g.subgraph_mask(g.adj[5])
    s = stable_sphere(C4_FIXTURE, C4_VALUES, 4)
    assert s.vertices == (2, 3) and not s.edges


def test_ph_index():
    assert ph_index(C4_FIXTURE, C4_VALUES, 1) == 1
    assert ph_index(C4_FIXTURE, C4_VALUES, 4) == -1
    assert ph_index(C4_FIXTURE, C4_VALUES, 2) == 0


def test_c4_maximum_over_all_orderings():
    # enumerating the 24 orderings: the top vertex always sees its two neighbours below
    g = cycle(4)
    for perm in itertools.permutations(g.vertices):
        f = ordering_function(perm)
        assert ph_index(g, f, perm[-1]) == -1


def test_ph_theorem():
    g = generator("octahedron")
    rng = random.Random(3)
    for _ in range(20):
        order = list(g.vertices)
        rng.shuffle(order)
        assert ph_theorem_check(g, ordering_function(order)).total == 2
    m = mertens_graph(10)
    rep = ph_theorem_check(m, {v: v for v in m.vertices})
    assert rep.total == 2 and rep.passed


def test_ph_polynomial():
    rep = ph_polynomial_check(C4_FIXTURE, C4_VALUES)
    assert rep.lhs == rep.rhs == (1, 4, 4)
    rep = ph_polynomial_check(complete(1), {0: 0})
    assert rep.lhs == (1, 1) and rep.passed


def test_energized_ph():
    kite = generator("kite")
    k = whitney_complex(kite)
    f = {v: v for v in kite.vertices}
    ones = energized_ph(kite, f, {x: 1 for x in k.simplices()})
    assert ones.total == ones.energy == 11
    omega = energized_ph(kite, f, {x: (-1) ** (len(x) - 1) for x in k.simplices()})
    assert omega.divisor == ph_theorem_check(kite, f).divisor
    k3 = whitney_complex(complete(3))
    dims = energized_ph(complete(3), {0: 0, 1: 1, 2: 2}, {x: len(x) - 1 for x in k3.simplices()})
    assert dims.total == 5
    with pytest.raises(GraphInputError):
        energized_ph(kite, f, {})


def test_digraph_ph():
    d = Digraph.from_arcs([(0, 1), (1, 2), (2, 3), (3, 0)])
    rep = digraph_ph(d)
    assert rep.passed and rep.total == 0
    with pytest.raises(GraphInputError, match="clique"):
        digraph_ph(Digraph.from_arcs([(1, 2), (2, 3), (3, 1)]))
    with pytest.raises(GraphInputError):
        digraph_ph(Digraph.from_arcs([(1, 2), (2, 1)]))
    for name in ["kite", "octahedron", "moebius7"]:
        g = generator(name)
        order = sorted(g.vertices, reverse=True)
        rank = {v: i for i, v in enumerate(order)}
        arcs = [(a, b) if rank[a] < rank[b] else (b, a) for a, b in g.edges]
        assert digraph_ph(Digraph.from_arcs(arcs, g.vertices)).passed


def test_morse_profile():
    k = whitney_complex(generator("octahedron"))
    r = barycentric_refinement(k)
    prof = morse_profile(r, dimension_function(k))
    assert prof.c == k.f_vector
    cube = generator("cube")
    verdict = morse_profile(cube, {v: v for v in cube.vertices})
    assert isinstance(verdict, NotMorse) and verdict.vertex == 7
    # two-point ordering: antipodal pairs are (0,1), (2,3), (4,5); 0 bottom, 1 top
    octa = generator("octahedron")
    reeb = ordering_function([0, 2, 3, 4, 5, 1])
    prof = morse_profile(octa, reeb)
    assert prof.c == (1, 0, 1) and prof.critical == {0: 0, 1: 2}
    assert prof.euler == 2


def test_morse_inequalities():
    assert morse_inequalities_check((1, 2, 1), (1, 2, 1)).passed
    klein = morse_inequalities_check((1, 1, 0), (1, 2, 1))
    assert klein.passed and klein.strong[1][0] < klein.strong[1][1]
    assert not morse_inequalities_check((1, 0), (0, 0)).passed


def test_cri_exact():
    for n in range(1, 6):
        assert cri_exact(complete(n)) == 1
    assert cri_exact(generator("kite")) == 1
    for n in range(4, 10):
        assert cri_exact(cycle(n)) == 2
    assert cri_exact(generator("figure_eight")) == 3
    assert cri_exact(generator("torus_9")) == 3
    with pytest.raises(CapExceeded):
        cri_exact(cycle(20))


def test_cri_exact_matches_permutation_oracle():
    for name, params in [("cycle", [5]), ("figure_eight", []), ("kite", []), ("star", [3]),
                         ("moebius7", []), ("wheel", [5])]:
        g = generator(name, params)
        assert cri_exact(g) == oracles.cri(g.vertices, g.edges), name


def test_cri_heuristic(corpus):
    assert cri_heuristic(complete(4)) == 1
    assert cri_heuristic(generator("torus_9"), restarts=50, seed=1) <= 4
    for name, g in corpus.items():
        if len(g) <= 9:
            assert cri_heuristic(g, restarts=10, seed=0) == cri_exact(g), name
    assert cri_heuristic(cycle(6), seed=5) == cri_heuristic(cycle(6), seed=5)


def test_morse_min_exact(corpus):
    assert morse_min_exact(generator("torus_9")) == 4
    assert morse_min_exact(generator("cube")) is None
    assert morse_min_exact(generator("octahedron")) == 2
    assert morse_min_exact(generator("rp2_6")) == 3
    for name, g in corpus.items():
        if len(g) > 16:
            continue
        c = morse_min_exact(g)
        if c is not None:
            assert cri_exact(g) <= c, name


def test_curvature_levitt():
    octa = curvature_levitt(generator("octahedron"))
    assert set(octa.values.values()) == {Fraction(1, 3)} and octa.total == 2
    assert set(curvature_levitt(cycle(7)).values.values()) == {0}
    for n in range(1, 7):
        assert set(curvature_levitt(complete(n)).values.values()) == {Fraction(1, n)}


def test_curvature_expectation():
    kite = generator("kite")
    for v in kite.vertices:
        assert curvature_expectation_exact(kite, v) == \
            oracles.index_sum_over_orderings(kite.vertices, kite.edges, v)
    assert curvature_expectation_exact(Graph((0,), frozenset()), 0) == 1
    assert curvature_expectation_exact(path(2), 0) == Fraction(1, 2)
    with pytest.raises(CapExceeded):
        curvature_expectation_exact(complete(6), 0, max_degree=4)


def test_curvature_mc():
    octa = generator("octahedron")
    field = curvature_mc(octa, 10_000, seed=0)
    assert field.total == 2
    assert max(abs(float(x) - 1 / 3) / field.stderr[v] for v, x in field.values.items()) <= 5
    one = curvature_mc(octa, 1, seed=4)
    assert all(x.denominator == 1 for x in one.values.values()) and one.total == 2
    assert curvature_mc(octa, 50, seed=9).values == curvature_mc(octa, 50, seed=9).values
    with pytest.raises(GraphInputError):
        curvature_mc(octa, 0)


def test_c_vector_alternating_sum(corpus):
    for name, g in corpus.items():
        rng = random.Random(name)
        order = list(g.vertices)
        rng.shuffle(order)
        prof = morse_profile(g, ordering_function(order))
        if isinstance(prof, NotMorse):
            continue
        assert prof.euler == euler(g), name
        assert morse_inequalities_check(BettiVector(betti(whitney_complex(g))), prof.c).passed
