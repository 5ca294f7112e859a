import random

import pytest

from graphmorse.catalog import complete, cycle, generator
from graphmorse.complex import euler_characteristic, whitney_complex
from graphmorse.delta import (DeltaSet, SimplexSet, betti_delta, closed_sets, core,
                              delta_euler, delta_from_simplex_set, fusion_check, is_closed,
                              is_open, sample_closed_sets, star, topological_dimension)
from graphmorse.errors import CapExceeded, GraphInputError
from graphmorse.graphs import Graph
from graphmorse.hodge import betti
from graphmorse.linalg import SparseSignMatrix

K3 = whitney_complex(Graph.from_edges([(1, 2), (1, 3), (2, 3)]))
K2 = whitney_complex(Graph.from_edges([(1, 2)]))
TOP = SimplexSet.from_simplices(K3, [(1, 2, 3)])
SKELETON = TOP.complement()


def sets(s):
    return sorted(s.simplices())


def test_star_and_core():
    assert sets(star(K3, (1, 2, 3))) == [(1, 2, 3)]
    assert sets(star(K3, (1, 2))) == [(1, 2), (1, 2, 3)]
    c5 = whitney_complex(cycle(5))
    assert sets(star(c5, (1,))) == [(0, 1), (1,), (1, 2)]
    assert len(core(K3, (1, 2, 3))) == 7
    assert sets(core(K3, (2,))) == [(2,)]
    with pytest.raises(GraphInputError):
        star(K3, (1, 4))


def test_open_closed():
    assert is_open(TOP) and not is_closed(TOP)
    assert is_closed(SKELETON) and not is_open(SKELETON)
    full = SimplexSet(K3, range(7))
    assert is_open(full) and is_closed(full)
    assert is_open(SimplexSet(K3, [])) and is_closed(SimplexSet(K3, []))


def test_stars_open_cores_closed(corpus):
    rng = random.Random(0)
    for name, g in corpus.items():
        k = whitney_complex(g)
        if len(k) > 300:
            continue
        flat = k.simplices()
        for x in rng.sample(flat, min(8, len(flat))):
            assert is_open(star(k, x)) and is_closed(core(k, x)), name
        for _ in range(5):
            union = SimplexSet(k, [])
            for x in rng.sample(flat, min(3, len(flat))):
                union = union | star(k, x)
            assert is_open(union), name


def test_worked_betti_vectors():
    assert betti_delta(delta_from_simplex_set(K3, TOP)) == (0, 0, 1)
    assert betti_delta(delta_from_simplex_set(K3, SimplexSet(K3, range(7)))) == (1, 0, 0)
    assert betti_delta(delta_from_simplex_set(K3, SKELETON)) == (1, 1, 0)
    u = SimplexSet.from_simplices(K2, [(1, 2)])
    ds = delta_from_simplex_set(K2, u)
    assert betti_delta(ds) == (0, 1) and ds.dims == (1,) and not ds.dirac.entries
    verts = u.complement()
    ds = delta_from_simplex_set(K2, verts)
    assert betti_delta(ds) == (2, 0) and ds.blocks()[0].is_zero()
    assert betti_delta(delta_from_simplex_set(K2, SimplexSet.from_simplices(K2, [(1,), (1, 2)]))) \
        == (0, 0)


def test_neither_open_nor_closed_rejected():
    mixed = SimplexSet.from_simplices(K3, [(1,), (1, 2, 3)])
    with pytest.raises(GraphInputError):
        delta_from_simplex_set(K3, mixed)


def test_delta_set_validation():
    bad = SparseSignMatrix(2, 2, {(0, 1): 1})
    with pytest.raises(GraphInputError, match="symmetric"):
        DeltaSet(("a", "b"), bad, (0, 1))
    skip = SparseSignMatrix(2, 2, {(0, 1): 1, (1, 0): 1})
    with pytest.raises(GraphInputError, match="consecutive"):
        DeltaSet(("a", "b"), skip, (0, 2))
    # a 0 -> 1 -> 2 chain whose composite does not vanish
    chain = SparseSignMatrix(3, 3, {(0, 1): 1, (1, 0): 1, (1, 2): 1, (2, 1): 1})
    with pytest.raises(GraphInputError, match="square"):
        DeltaSet(("v", "e", "t"), chain, (0, 1, 2))


def test_full_complex_matches_hodge(corpus):
    for name, g in corpus.items():
        k = whitney_complex(g)
        if len(k) > 400:
            continue
        ds = delta_from_simplex_set(k, SimplexSet(k, range(len(k))))
        assert betti_delta(ds) == betti(k), name
        d = ds.derivative()
        assert (d @ d).is_zero()


def test_fusion_examples():
    rep = fusion_check(K2, SimplexSet.from_simplices(K2, [(1,), (2,)]))
    assert rep.open_betti == (0, 1) and rep.closed_betti == (2, 0) and rep.total_betti == (1, 0)
    assert rep.passed
    rep = fusion_check(K3, SKELETON)
    assert (rep.closed_betti, rep.open_betti) == ((1, 1, 0), (0, 0, 1)) and rep.passed
    whole = fusion_check(K3, SimplexSet(K3, range(7)))
    assert whole.closed_betti == whole.total_betti and whole.passed
    with pytest.raises(GraphInputError):
        fusion_check(K3, TOP)


def test_fusion_on_all_partitions(corpus):
    for name, g in corpus.items():
        k = whitney_complex(g)
        if len(k) > 30:
            continue
        if len(k) <= 15:
            parts = list(closed_sets(k))
        else:
            parts = list(sample_closed_sets(k, 40, seed=len(k)))
        for c in parts:
            rep = fusion_check(k, c)
            assert rep.inequality and rep.additive, name
            assert rep.euler[2] == euler_characteristic(k)


def test_closed_set_enumeration():
    # subcomplexes of K2: empty, {1}, {2}, {1,2}, everything
    assert len(list(closed_sets(K2))) == 5
    assert all(is_closed(c) for c in closed_sets(K3))
    with pytest.raises(CapExceeded):
        list(closed_sets(whitney_complex(generator("octahedron"))))


def test_delta_euler_additivity():
    for c in closed_sets(K3):
        u = c.complement()
        total = delta_euler(delta_from_simplex_set(K3, c)) + \
            delta_euler(delta_from_simplex_set(K3, u))
        assert total == 1


def test_topological_dimension():
    for n in range(1, 5):
        assert topological_dimension(whitney_complex(complete(n))) == n - 1
    assert topological_dimension(whitney_complex(cycle(4))) == 1
    assert topological_dimension(whitney_complex(generator("kite"))) == 2
    assert topological_dimension(whitney_complex(generator("octahedron"))) == 2


def test_simplex_set_json_roundtrip():
    s = SimplexSet.from_dict(K3, {"members": [[1, 2], [3, 2]]})
    assert s.to_dict() == {"members": [[1, 2], [2, 3]]}
    with pytest.raises(GraphInputError):
        SimplexSet.from_dict(K3, {"members": [[1, 4]]})
    with pytest.raises(GraphInputError):
        SimplexSet.from_dict(K3, [[1]])
    with pytest.raises(GraphInputError):
        SimplexSet(K3, [99])
