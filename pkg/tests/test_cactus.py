import random

import pytest
from hypothesis import given, strategies as st

from dirainbow import cactus
from dirainbow.coloring import ParamKind
from dirainbow.digraph import biorient, build, dicycle
from dirainbow.errors import (
    ArcInMultipleCycles,
    ArcInNoCycle,
    InvalidFamilyParams,
    NotOriented,
    NotStronglyConnected,
    PreconditionViolated,
)
from dirainbow.solver import SolveBudget, exact
from dirainbow.tournaments import tournament_T4
from dirainbow.verify import check_connected
from oracles import all_simple_paths

K = ParamKind

TWO_TRIANGLES = build(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
# a 6-cycle with triangles hung at 0 and 3: cut vertices at distance 3 both ways
FAR = build(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 0), (3, 8), (8, 9), (9, 3)])
# a 4-cycle with triangles hung at 0 and 2: cut vertices at distance 2
NEAR = build(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0), (2, 6), (6, 7), (7, 2)])


@st.composite
def cacti(draw, max_n=9):
    n = draw(st.integers(3, max_n))
    q = draw(st.integers(1, (n - 1) // 2))
    return cactus.random_cactus(n, q, random.Random(draw(st.integers(0, 2**32))))


def test_single_cycle():
    Q = cactus.decompose(dicycle(3))
    assert Q.q == 1 and not Q.cut_vertices


def test_two_triangles():
    Q = cactus.decompose(TWO_TRIANGLES)
    assert Q.q == 2 == TWO_TRIANGLES.m - TWO_TRIANGLES.n + 1
    assert set(Q.cut_vertices) == {0}
    assert cactus.unique_path(Q, 1, 4) == [1, 2, 0, 3, 4]
    assert cactus.unique_path(Q, 1, 2) == [1, 2]


def test_recognition_errors():
    with pytest.raises(ArcInMultipleCycles):
        cactus.decompose(tournament_T4())
    with pytest.raises(NotOriented):
        cactus.decompose(biorient(3, [(0, 1), (1, 2)]))
    with pytest.raises(ArcInNoCycle):
        cactus.decompose(build(4, [(0, 1), (1, 2), (2, 0), (0, 3)]))
    with pytest.raises(NotStronglyConnected):
        cactus.decompose(build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert not cactus.is_cactus(tournament_T4())
    assert cactus.is_cactus(FAR)


@given(cacti())
def test_unique_path_matches_enumeration(D):
    Q = cactus.decompose(D)
    for u in range(D.n):
        for v in range(D.n):
            if u != v:
                paths = all_simple_paths(D, u, v)
                assert paths == [cactus.unique_path(Q, u, v)]


@given(cacti())
def test_random_cactus_shape(D):
    Q = cactus.decompose(D)
    assert Q.q == D.m - D.n + 1
    assert all(len(c) >= 3 for c in Q.cycles)


def test_random_cactus_rejects_too_many_cycles():
    with pytest.raises(InvalidFamilyParams):
        cactus.random_cactus(6, 3, random.Random(0))


def test_profiles():
    assert cactus.profile(cactus.decompose(TWO_TRIANGLES)).is_special_path
    near = cactus.profile(cactus.decompose(NEAR))
    assert near.min_cut_distance == 2 and not near.is_special_path
    far = cactus.profile(cactus.decompose(FAR))
    assert far.min_cut_distance == 3 and far.kq_independent
    star = cactus.build_Qnql(9, 4, 1, "base")
    assert not cactus.profile(cactus.decompose(star.digraph)).is_special_path


@given(st.integers(3, 8), st.integers(3, 8), st.data())
def test_upper_rvc_on_two_cycles(a, b, data):
    # two cycles of lengths a and b sharing one vertex
    n = a + b - 1
    first = list(range(a))
    second = [0] + list(range(a, n))
    arcs = list(zip(first, first[1:] + first[:1])) + list(zip(second, second[1:] + second[:1]))
    Q = cactus.decompose(build(n, arcs))
    c = cactus.rvc_coloring(Q, "upper")
    assert c.color_count == n - 2
    assert check_connected(Q.digraph, c, K.RVC).ok
    assert cactus.lower_bounds(Q, K.RVC) == n - 2


def test_optimal_rvc_on_far_cactus():
    Q = cactus.decompose(FAR)
    c = cactus.rvc_coloring(Q, "optimal")
    assert c.color_count == FAR.n - 2 * Q.q + 2 == 6
    assert check_connected(FAR, c, K.RVC).ok
    assert exact(FAR, K.RVC).value == 6


def test_coloring_preconditions():
    with pytest.raises(PreconditionViolated):
        cactus.rvc_coloring(cactus.decompose(NEAR), "optimal")
    with pytest.raises(PreconditionViolated):
        cactus.rvc_coloring(cactus.decompose(dicycle(5)), "upper")


def test_trc_colorings():
    c = cactus.trc_coloring(cactus.decompose(TWO_TRIANGLES))
    assert c.color_count == 7 and check_connected(TWO_TRIANGLES, c, K.TRC).ok
    Q = cactus.decompose(FAR)
    c = cactus.trc_coloring(Q)
    assert c.color_count == 2 * FAR.n - 3 * Q.q + 3 == 14
    assert check_connected(FAR, c, K.TRC).ok


@given(cacti(max_n=7).filter(lambda D: D.m - D.n + 1 >= 2))
def test_trc_coloring_within_bracket(D):
    Q = cactus.decompose(D)
    n, q = D.n, Q.q
    c = cactus.trc_coloring(Q)
    assert 2 * n - 3 * q + 3 <= c.color_count <= 2 * n - 3
    assert check_connected(D, c, K.TRC).ok


def test_lower_bounds():
    assert cactus.lower_bounds(cactus.decompose(dicycle(5)), K.TRC) == 10
    assert cactus.lower_bounds(cactus.decompose(TWO_TRIANGLES), K.TRC) == 7
    with pytest.raises(ValueError):
        cactus.lower_bounds(cactus.decompose(FAR), K.RC)


@given(cacti(max_n=7))
def test_lower_bounds_below_exact(D):
    Q = cactus.decompose(D)
    for kind in (K.RVC, K.TRC):
        low = cactus.lower_bounds(Q, kind)
        assert low >= (2 * D.n - 3 * Q.q + 3 if kind is K.TRC else D.n - 2 * Q.q + 2) or Q.q == 1
        assert low <= exact(D, kind, SolveBudget(max_elements=18)).value


def test_formula_bounds():
    Q = cactus.decompose(FAR)
    assert cactus.formula_bounds(Q)["rvc"] == (6, 8)
    assert cactus.formula_bounds(Q)["trc"] == (14, 17)


@pytest.mark.parametrize(
    "args, kind, colors",
    [
        ((7, 3, 1, "base"), K.RVC, 3),
        ((9, 3, 2, "base"), K.TRC, 15),
        ((8, 3, 2, "odd"), K.RVC, 5),
    ],
)
def test_qnql_examples(args, kind, colors):
    inst = cactus.build_Qnql(*args)
    c = inst.rvc if kind is K.RVC else inst.trc
    assert c.color_count == colors
    assert check_connected(inst.digraph, c, kind).ok
    assert cactus.is_cactus(inst.digraph) and inst.q == args[1]


def test_qnql_ranges():
    assert cactus.qnql_valid(11, 4, 3, "mod2") and not cactus.qnql_valid(9, 3, 2, "mod2")
    with pytest.raises(InvalidFamilyParams):
        cactus.build_Qnql(9, 3, 2, "mod2")
    with pytest.raises(InvalidFamilyParams):
        cactus.build_Qnql(9, 3, 1, "sideways")
