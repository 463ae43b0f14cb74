import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import digraphs, strong_digraphs
from dirainbow.digraph import (
    INF,
    biorient,
    bioriented_complete,
    build,
    classify,
    dicycle,
    dipath,
    distances,
    expand,
    induced,
    is_bioriented_complete,
    is_spanning_subdigraph,
    is_strongly_connected,
    lex_product,
    relabel,
    remove_arcs,
    undirected_connected,
)
from dirainbow.errors import DuplicateArc, LoopArc, VertexOutOfRange
from oracles import floyd, reach_all


def test_build_rejects_bad_arcs():
    with pytest.raises(LoopArc):
        build(3, [(1, 1)])
    with pytest.raises(DuplicateArc):
        build(3, [(0, 1), (0, 1)])
    with pytest.raises(VertexOutOfRange):
        build(3, [(0, 3)])


def test_neighbors_and_has_arc():
    D = build(3, [(0, 1), (0, 2), (2, 0)])
    assert D.out_neighbors(0) == (1, 2)
    assert D.in_neighbors(0) == (2,)
    assert D.has_arc(2, 0) and not D.has_arc(1, 0)
    assert D.m == 3


def test_biorient_and_classify():
    D = biorient(3, [(0, 1), (1, 2)])
    assert D.m == 4
    cls = classify(D)
    assert cls.symmetric_pairs == {(0, 1), (1, 2)}
    assert not cls.is_oriented
    T = build(3, [(0, 1), (1, 2), (0, 2)])
    assert classify(T).is_tournament


def test_distances_of_dicycle():
    table = distances(dicycle(5))
    assert table.dist[0][4] == 4 and table.dist[4][0] == 1
    assert table.diameter == 4


def test_dipath_is_not_strong():
    assert not is_strongly_connected(dipath(3))
    assert distances(dipath(3)).diameter == INF


def test_expand_dicycle_by_symmetric_pair():
    H = biorient(2, [(0, 1)])
    D = expand(dicycle(3), 0, H)
    # one internal symmetric pair, two fan-in, two fan-out, one remaining cycle arc
    assert D.n == 4 and D.m == 7


def _lex_product_arcs_by_definition(D, H):
    verts = list(itertools.product(range(D.n), range(H.n)))
    count = 0
    for (x, a), (y, b) in itertools.permutations(verts, 2):
        if D.has_arc(x, y) or (x == y and H.has_arc(a, b)):
            count += 1
    return count


def test_lex_product_arc_count_matches_enumeration():
    D, H = dicycle(3), biorient(2, [(0, 1)])
    P = lex_product(D, H)
    assert P.m == _lex_product_arcs_by_definition(D, H) == 18
    assert P.n == 6


def test_bioriented_complete_detection():
    assert is_bioriented_complete(bioriented_complete(4))
    assert not is_bioriented_complete(remove_arcs(bioriented_complete(4), [(0, 1)]))


def test_induced_renumbers_in_sorted_order():
    D = dicycle(5)
    sub, keep = induced(D, [3, 1, 2])
    assert keep == [1, 2, 3]
    assert sub.sorted_arcs() == [(0, 1), (1, 2)]


@given(digraphs())
def test_bfs_matches_floyd(D):
    assert [list(row) for row in distances(D).dist] == floyd(D)


@given(digraphs())
def test_strong_connectivity_matches_reachability(D):
    assert is_strongly_connected(D) == reach_all(D)


@given(digraphs(min_n=2), st.randoms(use_true_random=False))
def test_relabel_preserves_diameter(D, rnd):
    perm = list(range(D.n))
    rnd.shuffle(perm)
    assert distances(relabel(D, perm)).diameter == distances(D).diameter


@given(st.integers(1, 6), st.data())
def test_biorientation_strong_iff_connected(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    assert is_strongly_connected(biorient(n, edges)) == undirected_connected(n, edges)


@given(strong_digraphs(max_n=4), strong_digraphs(max_n=3), st.data())
def test_expand_preserves_strong_connectivity(D, H, data):
    u = data.draw(st.integers(0, D.n - 1))
    E = expand(D, u, H)
    assert E.n == D.n + H.n - 1
    assert is_strongly_connected(E)


@given(strong_digraphs(max_n=4))
def test_spanning_subdigraph(D):
    assert is_spanning_subdigraph(D, D)
    if D.m:
        smaller = remove_arcs(D, [D.sorted_arcs()[0]])
        assert is_spanning_subdigraph(smaller, D)
        assert not is_spanning_subdigraph(D, smaller)
