import pytest

from dirainbow import families
from dirainbow.coloring import ParamKind
from dirainbow.digraph import classify, distances, is_strongly_connected
from dirainbow.errors import InvalidFamilyParams, NoSchemeForFamily, OutOfRange
from dirainbow.families import FamilySpec, coloring_for, formula, make
from dirainbow.solver import SolveBudget, exact
from dirainbow.verify import check_connected

K = ParamKind

# (family, params, colors the scheme must use)
SCHEMES = [
    ("dicycle", {"n": 3}, 3),
    ("dicycle", {"n": 5}, 10),
    ("dicycle", {"n": 7}, 14),
    ("bio_path", {"n": 2}, 1),
    ("bio_path", {"n": 6}, 9),
    ("bio_star", {"n": 4}, 3),
    ("bio_wheel", {"n": 6}, 3),
    ("bio_multipartite", {"parts": (1, 2)}, 3),
    ("bio_multipartite", {"parts": (2, 2, 3)}, 3),
    ("petersen", {}, 4),
    ("petersen_expanded", {"n": 12}, 4),
    ("tournament_T4", {}, 5),
    ("tournament_T53", {}, 3),
    ("tournament_TNk", {"k": 7}, 7),
    ("tournament_Tnk", {"n": 8, "k": 7}, 7),
    ("hs", {"s": 13}, 13),
    ("fs", {"s": 5}, 3),
]


@pytest.mark.parametrize("name, params, colors", SCHEMES)
def test_scheme_verifies_with_stated_count(name, params, colors):
    spec = FamilySpec(name, params)
    D = make(spec)
    c = coloring_for(spec)
    assert c.color_count == colors
    assert check_connected(D, c, families.SCHEME_KIND[name]).ok


@pytest.mark.parametrize("name", ["bio_cycle", "ky_gs", "triangle_fan", "dipath"])
def test_families_without_scheme(name):
    params = {"bio_cycle": {"n": 5}, "ky_gs": {"s": 2}, "triangle_fan": {"t": 2}, "dipath": {"n": 3}}[name]
    with pytest.raises(NoSchemeForFamily):
        coloring_for(FamilySpec(name, params))


def test_four_cycle_has_no_scheme():
    with pytest.raises(NoSchemeForFamily):
        coloring_for(FamilySpec("dicycle", {"n": 4}))


def test_parameter_validation():
    with pytest.raises(InvalidFamilyParams):
        FamilySpec("nonesuch")
    with pytest.raises(InvalidFamilyParams):
        make(FamilySpec("dicycle", {"n": 2}))
    with pytest.raises(InvalidFamilyParams):
        make(FamilySpec("tournament_TNk", {"k": 6}))
    with pytest.raises(InvalidFamilyParams):
        make(FamilySpec("tournament_Tnk", {"n": 5, "k": 9}))
    with pytest.raises(InvalidFamilyParams):
        FamilySpec.parse("bio_path", "n=x")
    assert FamilySpec.parse("bio_multipartite", "parts=2-2-3").params == {"parts": (2, 2, 3)}


def test_formulas():
    assert [formula("g", n) for n in range(3, 14)] == [1, 3, 3, 5, 6, 7, 8, 9, 11, 11, 13]
    assert [formula("trc_dicycle", n) for n in (3, 4, 5, 6)] == [3, 6, 10, 12]
    assert formula("rvc_dicycle", 4) == 2 and formula("rvc_dicycle", 6) == 6
    assert formula("strc_bio_path", 5) == 7
    with pytest.raises(OutOfRange):
        formula("g", 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_bioriented_cycle_matches_g(n):
    assert exact(families.bio_cycle(n), K.TRC, SolveBudget(max_elements=18)).value == formula("g", n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rvc_of_directed_cycle(n):
    assert exact(families.make(FamilySpec("dicycle", {"n": n})), K.RVC).value == formula("rvc_dicycle", n)


def test_petersen_labelling():
    P = families.petersen()
    assert P.n == 10 and P.m == 30
    assert all(P.has_arc(i, 5 + i) for i in range(5))
    # inner pentagram v0 v2 v4 v1 v3
    assert all(P.has_arc(5 + i, 5 + (i + 2) % 5) for i in range(5))
    assert distances(P).diameter == 2
    assert families.unique_length_two_paths(P)


def test_petersen_expanded_has_diameter_two():
    for n in (11, 12, 13):
        D = families.petersen_expanded(n)
        assert D.n == n and distances(D).diameter == 2


def test_petersen_three_colors_impossible_four_possible():
    found, nodes = families.three_color_distance_two_search(families.petersen(), 3)
    assert found is None and nodes > 0
    found, _ = families.three_color_distance_two_search(families.petersen(), 4)
    assert found is not None


def test_multipartite_profiles():
    profiles = list(families.multipartite_profiles(8))
    assert len(profiles) == 51
    assert all(max(p) >= 2 and sum(p) <= 8 and len(p) >= 2 for p in profiles)


def test_gs_rvc_equals_s_on_small_cases():
    for s in (2, 3):
        D = families.ky_gs(s)
        assert exact(D, K.RVC).value == s


def test_hs_premises_and_shape():
    H = families.hs(13)
    assert H.n == 52
    assert families.hs_premises_hold(13)
    z_degree = {len(H.out_neighbors(families.hs_vertex(13, "z", i))) for i in range(1, 14)}
    assert z_degree == {4}


def test_fs_diameter_three():
    for s in range(4, 9):
        assert distances(families.fs(s)).diameter == 3


def test_triangle_fan_values():
    fan = families.triangle_fan(2)
    assert classify(fan).is_oriented and is_strongly_connected(fan)
    got = [exact(fan, kind).value for kind in (K.TRC, K.STRC, K.RVC, K.SRVC)]
    assert got == [7, 7, 3, 3]
