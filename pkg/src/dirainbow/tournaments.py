"""Tournament constructions and total colorings of tournaments.

Labelling: T4 is the directed 4-cycle 0123 plus arcs 02 and 13. T53 is the
union of the directed 5-cycles 01234 and 03142. T_{N,k} has vertices
v_0..v_{N-1} as ids 0..N-1. T_{n,k} expands v_0 of T_{N,k} into a small
tournament; v_1..v_{N-1} become ids 0..N-2 and the inserted tournament takes
ids N-1..n-1.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator
from functools import lru_cache

from .coloring import Coloring, ParamKind
from .digraph import Digraph, build, classify, dicycle, distances, expand, expansion_labels, is_strongly_connected
from .errors import InvalidFamilyParams, NotATournament, NotStronglyConnected
from .solver import exact, geodesics
from .verify import check_connected


def tournament_T4() -> Digraph:
    return build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def tournament_T53() -> Digraph:
    first = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    second = [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)]
    return build(5, first + second)


def _order_for(k: int) -> int:
    if k < 5 or k % 2 == 0:
        raise InvalidFamilyParams(f"k must be odd and >= 5, got {k}")
    return (k + 3) // 2


def tournament_TNk(k: int) -> Digraph:
    N = _order_for(k)
    arcs = [(i - 1, i) for i in range(1, N)]
    arcs += [(i, j) for i in range(N) for j in range(i - 1) if i - j >= 2]
    return build(N, arcs)


def _tnk_labels(k: int) -> tuple[dict, dict]:
    N = _order_for(k)
    D = tournament_TNk(k)
    arcs = {}
    for i, j in D.arcs:
        arcs[(i, j)] = ("arc", j) if j == i + 1 else ("arc", N - 1)
    verts = {i: ("alpha", i) for i in range(1, N - 1)}
    verts[0] = verts[N - 1] = ("alpha", 1)
    return arcs, verts


def tnk_coloring(k: int) -> Coloring:
    arcs, verts = _tnk_labels(k)
    return Coloring.from_labels("total", arcs, verts)


def t4_coloring() -> Coloring:
    """The 5-color T_{4,5} coloring carried over to the labelling of tournament_T4."""
    src, dst = tournament_TNk(5), tournament_T4()
    perm = next(p for p in itertools.permutations(range(4)) if all(dst.has_arc(p[x], p[y]) for x, y in src.arcs))
    c = tnk_coloring(5)
    arcs = {(perm[x], perm[y]): col for (x, y), col in c.arc_colors.items()}
    verts = {perm[x]: col for x, col in c.vertex_colors.items()}
    return Coloring("total", arcs, verts)


@lru_cache(maxsize=None)
def t53_coloring() -> Coloring:
    """A 3-color strongly total rainbow connected coloring of T53, found by exact search."""
    return exact(tournament_T53(), ParamKind.STRC).witness


def _small_tournament(size: int) -> tuple[Digraph, Coloring | None]:
    if size == 2:
        return build(2, [(0, 1)]), None
    if size == 3:
        from .families import dicycle_coloring

        return dicycle(3), dicycle_coloring(3)
    if size == 4:
        return tournament_T4(), t4_coloring()
    if size == 5:
        return tournament_T53(), t53_coloring()
    raise InvalidFamilyParams(
        f"expansion into a {size}-vertex tournament with total rainbow connection number 3 is not available "
        "(only sizes up to 5 are constructed)"
    )


def tournament_Tnk(n: int, k: int) -> tuple[Digraph, Coloring]:
    """Tournament on n vertices with trc = strc = k, and its k-color witness."""
    N = _order_for(k)
    if k > 2 * n - 3 or N > n:
        raise InvalidFamilyParams(f"need 5 <= k <= 2n-3 and (k+3)/2 <= n; got n={n}, k={k}")
    base = tournament_TNk(k)
    base_arcs, base_verts = _tnk_labels(k)
    if n == N:
        return base, Coloring.from_labels("total", base_arcs, base_verts)
    size = n - N + 1
    T, inner = _small_tournament(size)
    D = expand(base, 0, T)
    relabel, copy = expansion_labels(N, 0, size)
    back = {new: old for old, new in relabel.items()}
    inside = set(copy)
    arcs = {}
    verts = {}
    for x, y in D.arcs:
        if x in inside and y in inside:
            continue
        if x in inside:
            arcs[(x, y)] = base_arcs[(0, back[y])]
        elif y in inside:
            arcs[(x, y)] = base_arcs[(back[x], 0)]
        else:
            arcs[(x, y)] = base_arcs[(back[x], back[y])]
    for x in range(D.n):
        if x not in inside:
            verts[x] = base_verts[back[x]]
    if inner is None:
        arcs[(copy[0], copy[1])] = ("arc", 1)
        verts[copy[0]] = verts[copy[1]] = ("alpha", 1)
        return D, Coloring.from_labels("total", arcs, verts)
    # reuse already present colors on the inserted tournament; take the first
    # injection of its palette (in palette order) that keeps D strongly total rainbow connected
    palette = list(dict.fromkeys(list(base_verts[i] for i in sorted(base_verts)) + [base_arcs[a] for a in sorted(base_arcs)]))
    for image in itertools.permutations(palette, inner.color_count):
        trial_arcs = dict(arcs)
        trial_verts = dict(verts)
        for (a, b), col in inner.arc_colors.items():
            trial_arcs[(copy[a], copy[b])] = image[col]
        for a, col in inner.vertex_colors.items():
            trial_verts[copy[a]] = image[col]
        c = Coloring.from_labels("total", trial_arcs, trial_verts)
        if check_connected(D, c, ParamKind.STRC).ok:
            return D, c
    raise AssertionError(f"no reuse of existing colors makes T_{{{n},{k}}} strongly total rainbow connected")


def _require_tournament(T: Digraph) -> None:
    if not classify(T).is_tournament:
        raise NotATournament("digraph is not a tournament")
    if not is_strongly_connected(T):
        raise NotStronglyConnected("tournament is not strongly connected")


def tournament_trc_coloring(T: Digraph) -> Coloring:
    """Strongly total rainbow connected coloring with at most 2n-3 colors."""
    _require_tournament(T)
    n = T.n
    if n <= 4:
        return exact(T, ParamKind.STRC).witness
    table = distances(T)
    d = int(table.diameter)
    if d == 2:
        return _diameter_two_strc(T)
    a, b = next((x, y) for x in range(n) for y in range(n) if table.dist[x][y] == d)
    path = next(iter(geodesics(T, table.dist, a, b)))
    a1, a_last = path[1], path[-2]
    f = {x: x + 1 for x in range(n)}
    f[b], f[n - 1] = n, f[b]
    arcs = {}
    for x, y in T.arcs:
        if x != b:
            arcs[(x, y)] = ("f", f[x])
        elif y == a:
            arcs[(x, y)] = ("f", f[a1])
        else:
            arcs[(x, y)] = ("f", f[a])
    verts = {x: ("alpha", x) for x in range(n)}
    verts[a] = verts[a_last] = ("alpha", "1")
    verts[a1] = verts[b] = ("alpha", "2")
    return Coloring.from_labels("total", arcs, verts)


def _diameter_two_strc(T: Digraph) -> Coloring:
    """Arc colors by tail, with one tail class merged into another when that still
    works, plus a single vertex color. Every arc-rainbow path of length 2 is then
    total-rainbow, and with unmerged tails every path is arc-rainbow."""
    n = T.n
    vertex_color = {x: "vertex" for x in range(n)}
    for b in range(n):
        for x in range(n):
            if x == b:
                continue
            tails = {y: y for y in range(n)}
            tails[b] = x
            c = Coloring.from_labels("total", {(u, v): tails[u] for u, v in T.arcs}, vertex_color)
            if check_connected(T, c, ParamKind.STRC).ok:
                return c
    return Coloring.from_labels("total", {(u, v): u for u, v in T.arcs}, vertex_color)


@dataclass(frozen=True)
class TournamentDecomposition:
    a: int
    layers: tuple[tuple[int, ...], ...]  # layers[i-1] is V_i
    p: int | None = None
    q: int | None = None
    path: tuple[int, ...] | None = None
    case: str | None = None
    r: int | None = None
    s: int | None = None
    layer_arc: tuple[int, int] | None = None  # the arc of P inside one layer (st or sr)


def decompositions(T: Digraph) -> Iterator[TournamentDecomposition]:
    """Every admissible layer decomposition, in a fixed order: eccentric vertex a,
    then p of maximum in-degree in T[V_1], then q of maximum out-degree in T[V_d]
    (each ascending), then the p-q geodesics in enumeration order."""
    _require_tournament(T)
    table = distances(T)
    d = int(table.diameter)
    dist = table.dist
    if d == 2:
        yield TournamentDecomposition(0, _layers(dist, 0, d))
        return
    for a in (x for x in range(T.n) if max(dist[x]) == d):
        layers = _layers(dist, a, d)
        V1, Vd = set(layers[0]), set(layers[-1])
        in_deg = {v: sum(1 for x in T.in_neighbors(v) if x in V1) for v in sorted(V1)}
        out_deg = {v: sum(1 for x in T.out_neighbors(v) if x in Vd) for v in sorted(Vd)}
        layer = {v: dist[a][v] for v in range(T.n)}
        for p in (v for v, k in in_deg.items() if k == max(in_deg.values())):
            for q in (v for v, k in out_deg.items() if k == max(out_deg.values())):
                for path in geodesics(T, dist, p, q):
                    yield _with_path(a, layers, p, q, tuple(path), layer, d)


def _layers(dist, a: int, d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v for v in range(len(dist)) if dist[a][v] == i) for i in range(1, d + 1))


def _with_path(a, layers, p, q, path, layer, d) -> TournamentDecomposition:
    if len(path) - 1 == d - 1:
        r = next(v for v in path if layer[v] == d - 2)
        return TournamentDecomposition(a, layers, p, q, path, "i", r)
    x, y = next((x, y) for x, y in zip(path, path[1:]) if layer[x] == layer[y])
    if layer[x] == d - 2:
        s, r = x, y
    else:
        s = x
        r = next(v for v in path if layer[v] == d - 2)
    return TournamentDecomposition(a, layers, p, q, path, "ii", r, s, (x, y))


def decompose_tournament(T: Digraph) -> TournamentDecomposition:
    return next(decompositions(T))


def tournament_diam_coloring(T: Digraph) -> Coloring:
    """Total rainbow connected coloring with at most 5 colors (diameter 2) or 2d+7 colors.

    The layer scheme can fail for d = 3 with some choices of (a, p, q, P), so the
    admissible choices are tried in order and the first verified coloring is
    returned; if none verifies, the coloring of the first choice is returned.
    """
    first = None
    for dec in decompositions(T):
        c = diam_coloring_for(T, dec)
        if check_connected(T, c, ParamKind.TRC).ok:
            return c
        first = first or c
    return first


def diam_coloring_for(T: Digraph, dec: TournamentDecomposition) -> Coloring:
    d = len(dec.layers)
    layer = {dec.a: 0}
    for i, Vi in enumerate(dec.layers, start=1):
        for v in Vi:
            layer[v] = i
    a = dec.a
    arcs = {}
    verts = {}
    if d == 2:
        for x, y in T.arcs:
            if x == a or layer[x] == layer[y]:
                arcs[(x, y)] = 1
            elif y == a:
                arcs[(x, y)] = 3
            else:
                arcs[(x, y)] = 2
        verts = {x: 5 for x in range(T.n)}
        verts[a] = 4
        return Coloring.from_labels("total", arcs, verts)
    p, q = dec.p, dec.q
    A = lambda i: ("arc", i)
    for x, y in T.arcs:
        lx, ly = layer[x], layer[y]
        if x == a or ly == lx + 1:
            arcs[(x, y)] = A(ly)
        elif ly < lx:
            # includes arcs back into a, which sit at layer 0
            arcs[(x, y)] = A(d + 1)
        elif lx < d:
            arcs[(x, y)] = A(1) if (lx == 1 and y == p) else A(d + 2)
        else:
            arcs[(x, y)] = A(d - 1) if x == q else A(d + 1)
    V = lambda i: ("vertex", i)
    for v, lv in layer.items():
        if 2 <= lv <= d - 1:
            verts[v] = V(lv)
        elif lv == 1:
            verts[v] = V(d) if v == p else V(1)
        elif lv == d:
            verts[v] = V(d + 1) if v == q else V(d - 2)
    verts[a] = V(d + 1)
    path = dec.path
    out_arc = (dec.r, path[path.index(dec.r) + 1])
    verts[dec.r] = V(d + 2)
    arcs[out_arc] = A(d + 3)
    if dec.case == "ii":
        verts[dec.s] = V(d + 3)
        arcs[dec.layer_arc] = A(d + 4)
    return Coloring.from_labels("total", arcs, verts)


def random_tournament(n: int, rng: random.Random) -> Digraph:
    arcs = []
    for x in range(n):
        for y in range(x + 1, n):
            arcs.append((x, y) if rng.random() < 0.5 else (y, x))
    return build(n, arcs)


def random_strong_tournament(n: int, rng: random.Random) -> Digraph:
    while True:
        T = random_tournament(n, rng)
        if is_strongly_connected(T):
            return T
