"""Cactus digraphs: recognition, decomposition into cycles, structural
predicates, colorings and lower bounds.

A cactus here is a strongly connected oriented graph in which every arc lies
on exactly one directed cycle. Between any two vertices there is then exactly
one directed path, so the strong and plain versions of each parameter agree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring, ParamKind, combine
from .digraph import Digraph, bfs, build, classify, distances, is_strongly_connected, relabel
from .errors import (
    ArcInMultipleCycles,
    ArcInNoCycle,
    BudgetExceeded,
    InvalidFamilyParams,
    NotOriented,
    NotStronglyConnected,
    PreconditionViolated,
)
from .families import formula
from .solver import SolveBudget, exact, lower_bound


@dataclass(frozen=True)
class CactusDecomposition:
    digraph: Digraph
    cycles: tuple[tuple[int, ...], ...]  # vertex sequences; cycle i is H_{i+1}
    cut_vertices: frozenset[int]
    block_graph: tuple[tuple[int, int], ...]  # pairs of cycle indices sharing a vertex

    @property
    def q(self) -> int:
        return len(self.cycles)

    @property
    def n(self) -> int:
        return self.digraph.n

    def cycles_at(self, v: int) -> list[int]:
        return [i for i, H in enumerate(self.cycles) if v in H]

    def successor(self, i: int, v: int) -> int:
        H = self.cycles[i]
        return H[(H.index(v) + 1) % len(H)]

    def predecessor(self, i: int, v: int) -> int:
        H = self.cycles[i]
        return H[H.index(v) - 1]

    def end_blocks(self) -> list[int]:
        """Cycles containing exactly one cut vertex (only meaningful for q >= 2)."""
        return [i for i, H in enumerate(self.cycles) if sum(1 for v in H if v in self.cut_vertices) == 1]


@dataclass(frozen=True)
class CactusProfile:
    is_special_path: bool
    min_cut_distance: float
    kq_independent: bool


def _paths_back(D: Digraph, start: int, target: int, cap: int = 2) -> list[list[int]]:
    """Up to ``cap`` simple paths from start to target."""
    found: list[list[int]] = []
    path = [start]
    on = {start}

    def walk(x: int) -> None:
        for y in D.out_neighbors(x):
            if len(found) >= cap:
                return
            if y == target:
                found.append(path + [y])
            elif y not in on:
                path.append(y)
                on.add(y)
                walk(y)
                path.pop()
                on.discard(y)

    if start == target:
        return [[start]]
    walk(start)
    return found


def _rotate(cycle: Sequence[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def decompose(D: Digraph) -> CactusDecomposition:
    if not classify(D).is_oriented:
        raise NotOriented("digraph has a pair of symmetric arcs")
    cycle_of: dict[tuple[int, int], tuple[int, ...]] = {}
    for x, y in D.sorted_arcs():
        back = _paths_back(D, y, x)
        if not back:
            raise ArcInNoCycle((x, y))
        if len(back) > 1:
            raise ArcInMultipleCycles((x, y))
        cycle_of[(x, y)] = _rotate([x] + back[0][:-1])
    if not is_strongly_connected(D):
        raise NotStronglyConnected("digraph is not strongly connected")
    pool = sorted(set(cycle_of.values()), key=lambda H: min((a for a, c in cycle_of.items() if c == H)))
    ordered = [pool.pop(0)]
    covered = set(ordered[0])
    while pool:
        i = next(i for i, H in enumerate(pool) if covered & set(H))
        H = pool.pop(i)
        shared = covered & set(H)
        assert len(shared) == 1, "cycle meets earlier cycles in more than one vertex"
        ordered.append(H)
        covered |= set(H)
    count: dict[int, int] = {}
    for H in ordered:
        for v in H:
            count[v] = count.get(v, 0) + 1
    cut = frozenset(v for v, c in count.items() if c >= 2)
    blocks = tuple(
        (i, j) for i in range(len(ordered)) for j in range(i + 1, len(ordered)) if set(ordered[i]) & set(ordered[j])
    )
    dec = CactusDecomposition(D, tuple(ordered), cut, blocks)
    assert dec.q == D.m - D.n + 1
    return dec


def is_cactus(D: Digraph) -> bool:
    try:
        decompose(D)
    except (NotOriented, NotStronglyConnected, ArcInNoCycle, ArcInMultipleCycles):
        return False
    return True


def unique_path(Q: CactusDecomposition, u: int, v: int) -> list[int]:
    """The directed u-v path; for u, v in different cycles it is checked to
    leave u's cycle at a cut vertex and enter v's cycle at a cut vertex with
    nothing in between touching either cycle."""
    if u == v:
        raise ValueError("endpoints must differ")
    D = Q.digraph
    dist = bfs(D, u)
    path = [v]
    while path[-1] != u:
        x = path[-1]
        path.append(next(y for y in D.in_neighbors(x) if dist[y] == dist[x] - 1))
    path.reverse()
    hu, hv = Q.cycles_at(u), Q.cycles_at(v)
    if len(hu) == 1 and len(hv) == 1 and hu != hv:
        H, H2 = set(Q.cycles[hu[0]]), set(Q.cycles[hv[0]])
        i = 0
        while i + 1 < len(path) and path[i + 1] in H and Q.successor(hu[0], path[i]) == path[i + 1]:
            i += 1
        j = len(path) - 1
        while j > 0 and path[j - 1] in H2 and Q.successor(hv[0], path[j - 1]) == path[j]:
            j -= 1
        z, z2 = path[i], path[j]
        assert z in Q.cut_vertices and z2 in Q.cut_vertices and i <= j
        middle = path[i + 1 : j]
        assert not (set(middle) & (H | H2))
    return path


def profile(Q: CactusDecomposition) -> CactusProfile:
    D = Q.digraph
    cut = sorted(Q.cut_vertices)
    dist = distances(D).dist
    min_cut = min((dist[x][y] for x in cut for y in cut if x != y), default=math.inf)
    independent = not any(D.has_arc(x, y) for x in cut for y in cut if x != y)
    return CactusProfile(_is_special_path(Q), min_cut, independent)


def _is_special_path(Q: CactusDecomposition) -> bool:
    q = Q.q
    if q < 2:
        return False
    degree = [0] * q
    for i, j in Q.block_graph:
        degree[i] += 1
        degree[j] += 1
    if len(Q.block_graph) != q - 1 or max(degree) > 2:
        return False
    cut = Q.cut_vertices
    if len(cut) != q - 1:
        return False
    D = Q.digraph
    inner = [(x, y) for x, y in D.arcs if x in cut and y in cut]
    if len(inner) != q - 2:
        return False
    outdeg = {x: 0 for x in cut}
    indeg = {x: 0 for x in cut}
    for x, y in inner:
        outdeg[x] += 1
        indeg[y] += 1
    # a directed path on the cut vertices: one start, each step unique, no cycle
    starts = [x for x in cut if indeg[x] == 0]
    if len(starts) != 1 or max(outdeg.values()) > 1 or max(indeg.values()) > 1:
        return False
    seen = {starts[0]}
    x = starts[0]
    nxt = dict(inner)
    while x in nxt:
        x = nxt[x]
        seen.add(x)
    return len(seen) == len(cut)


def rvc_coloring(Q: CactusDecomposition, mode: str = "upper") -> Coloring:
    if Q.q < 2:
        raise PreconditionViolated("needs at least two cycles")
    verts: dict[int, object] = {}
    if mode == "upper":
        for i in Q.end_blocks()[:2]:
            u = next(x for x in Q.cycles[i] if x in Q.cut_vertices)
            verts[Q.successor(i, u)] = ("shared", 1)
            verts[Q.predecessor(i, u)] = ("shared", 2)
    elif mode == "optimal":
        if profile(Q).min_cut_distance < 3:
            raise PreconditionViolated("optimal scheme needs cut vertices pairwise at distance >= 3")
        D = Q.digraph
        for u in sorted(Q.cut_vertices):
            for w in D.in_neighbors(u):
                verts[w] = ("alpha", u)
            for w in D.out_neighbors(u):
                verts[w] = ("beta", u)
    else:
        raise ValueError(f"mode must be 'upper' or 'optimal', got {mode!r}")
    for x in range(Q.n):
        verts.setdefault(x, ("own", x))
    return Coloring.from_labels("vertex", vertex_colors=verts)


def _rc_independent(Q: CactusDecomposition) -> Coloring:
    """Arcs into a cut vertex share one color per cut vertex, likewise arcs out of it;
    a path passes each cut vertex at most once, so it uses at most one of each."""
    arcs = {}
    for x, y in Q.digraph.arcs:
        if y in Q.cut_vertices:
            arcs[(x, y)] = ("in", y)
        elif x in Q.cut_vertices:
            arcs[(x, y)] = ("out", x)
        else:
            arcs[(x, y)] = ("own", x, y)
    return Coloring.from_labels("arc", arcs)


def trc_coloring(Q: CactusDecomposition, budget: SolveBudget | None = None) -> Coloring:
    """Arc part and vertex part on disjoint palettes.

    Arc part: the shared in/out scheme (n-q+1 colors) when the cut vertices are
    independent, else the exact RC witness. Vertex part: the optimal scheme when
    cut vertices are pairwise at distance >= 3, else the exact RVC witness,
    falling back to the two-end-block scheme if that solve is over budget.
    """
    if Q.q < 2:
        raise PreconditionViolated("needs at least two cycles")
    prof = profile(Q)
    D = Q.digraph
    if prof.kq_independent:
        arc_part = _rc_independent(Q)
    else:
        arc_part = exact(D, ParamKind.RC, budget).witness
    if prof.min_cut_distance >= 3:
        vertex_part = rvc_coloring(Q, "optimal")
    else:
        try:
            vertex_part = exact(D, ParamKind.RVC, budget).witness
        except BudgetExceeded:
            vertex_part = rvc_coloring(Q, "upper")
    return combine(arc_part, vertex_part)


def _cycle_value(kind: ParamKind, n: int) -> int:
    if kind.domain == "vertex":
        return formula("rvc_dicycle", n)
    return formula("trc_dicycle", n)


def lower_bounds(Q: CactusDecomposition, kind: ParamKind) -> int:
    """Peel end-blocks, largest cycle first (ties: earliest in cycle order), adding
    |H|-3 (vertex kinds) or 2|H|-5 (total kinds) per block, down to two cycles
    where n-2 / 2n-3 hold; the result is combined with the diameter bound."""
    if kind.domain == "arc":
        raise ValueError("lower_bounds covers the vertex and total kinds")
    vertex_kind = kind.domain == "vertex"
    cycles = [set(H) for H in Q.cycles]
    bound = 0
    while len(cycles) > 2:
        ends = []
        for i, H in enumerate(cycles):
            touching = {v for v in H for j, K in enumerate(cycles) if j != i and v in K}
            if len(touching) == 1:
                ends.append(i)
        i = max(ends, key=lambda i: (len(cycles[i]), -i))
        size = len(cycles[i])
        bound += size - 3 if vertex_kind else 2 * size - 5
        cycles.pop(i)
    n_rest = len(set().union(*cycles))
    if len(cycles) == 2:
        bound += n_rest - 2 if vertex_kind else 2 * n_rest - 3
    else:
        bound += _cycle_value(kind, n_rest)
    return max(bound, lower_bound(Q.digraph, kind))


def formula_bounds(Q: CactusDecomposition) -> dict[str, tuple[int, int]]:
    """Bracket of each parameter from the cycle structure alone (q >= 2)."""
    n, q = Q.n, Q.q
    if q == 1:
        return {
            "rc": (n, n),
            "rvc": (formula("rvc_dicycle", n),) * 2,
            "trc": (formula("trc_dicycle", n),) * 2,
        }
    return {"rc": (n - q + 1, n - 1), "rvc": (n - 2 * q + 2, n - 2), "trc": (2 * n - 3 * q + 3, 2 * n - 3)}


def random_cactus(n: int, q: int, rng: random.Random) -> Digraph:
    """Random (n,q)-cactus: a first directed cycle, then q-1 more cycles each glued
    at a uniformly chosen existing vertex; vertex ids are shuffled."""
    if q < 1 or n < 2 * q + 1:
        raise InvalidFamilyParams(f"an (n,q)-cactus needs n >= 2q+1; got n={n}, q={q}")
    # cycle lengths L_i >= 3 with sum(L_i - 1) = n - 1
    extra = [0] * q
    for _ in range(n - 1 - 2 * q):
        extra[rng.randrange(q)] += 1
    lengths = [3 + e for e in extra]
    arcs: list[tuple[int, int]] = []
    first = list(range(lengths[0]))
    arcs += [(first[i], first[(i + 1) % len(first)]) for i in range(len(first))]
    nxt = lengths[0]
    for L in lengths[1:]:
        anchor = rng.randrange(nxt)
        cyc = [anchor] + list(range(nxt, nxt + L - 1))
        nxt += L - 1
        arcs += [(cyc[i], cyc[(i + 1) % L]) for i in range(L)]
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(build(n, arcs), perm)


# ---------------------------------------------------------------- Q_{n,q,l}


@dataclass(frozen=True)
class QnqlInstance:
    digraph: Digraph
    names: dict[str, int]  # "u", "v1", "w1", "x", "x1", "x2", ...
    variant: str
    l: int
    rvc: Coloring | None
    rvc_k: int | None
    trc: Coloring | None
    trc_k: int

    @property
    def q(self) -> int:
        return self.digraph.m - self.digraph.n + 1


def qnql_valid(n: int, q: int, l: int, variant: str) -> bool:
    if variant == "base":
        return n >= 2 * q + 1 and 1 <= l <= q - 1
    if variant == "odd":
        return n >= 2 * q + 2 and 2 <= l <= q - 1
    if variant == "mod2":
        return n >= 2 * q + 3 and 3 <= l <= q - 1
    return False


def build_Qnql(n: int, q: int, l: int, variant: str = "base") -> QnqlInstance:
    if variant not in ("base", "odd", "mod2"):
        raise InvalidFamilyParams(f"unknown variant {variant!r}")
    if not qnql_valid(n, q, l, variant):
        raise InvalidFamilyParams(f"Q(n={n}, q={q}, l={l}) out of range for variant {variant}")
    names: dict[str, int] = {"u": 0}
    ids = iter(range(1, n))
    for i in range(1, l + 1):
        names[f"v{i}"] = next(ids)
    for i in range(1, l + 1):
        names[f"w{i}"] = next(ids)
    if variant == "odd":
        names["x"] = next(ids)
    if variant == "mod2":
        names["x1"] = next(ids)
        names["x2"] = next(ids)
    big = {"base": n - 2 * q + 2, "odd": n - 2 * q + 1, "mod2": n - 2 * q}[variant]
    ring = [0] + [next(ids) for _ in range(big - 1)]
    triangles = [(next(ids), next(ids)) for _ in range(q - l - 1)]
    assert next(ids, None) is None
    u, v, w = names["u"], lambda i: names[f"v{i}"], lambda i: names[f"w{i}"]
    arcs = [(v(1), w(1)), (w(1), u)]
    if variant == "odd":
        arcs += [(u, names["x"]), (names["x"], v(1))]
    elif variant == "mod2":
        arcs += [(u, names["x1"]), (names["x1"], v(1))]
    else:
        arcs.append((u, v(1)))
    for i in range(2, l + 1):
        if i == 2 and variant == "mod2":
            arcs += [(v(1), names["x2"]), (names["x2"], v(2))]
        else:
            arcs.append((v(i - 1), v(i)))
        arcs += [(v(i), w(i)), (w(i), v(i - 1))]
    arcs += [(ring[i], ring[(i + 1) % big]) for i in range(big)]
    for a, b in triangles:
        arcs += [(u, a), (a, b), (b, u)]
    D = build(n, arcs)
    out_u, in_u = set(D.out_neighbors(u)), set(D.in_neighbors(u))

    rvc = rvc_k = None
    if variant == "base":
        rvc_k = 2 * l
        verts: dict[int, object] = {}
        for z in out_u - {v(1)}:
            verts[z] = 1
        for z in in_u - {w(1)}:
            verts[z] = 2
        verts[v(l)] = 1
        verts[w(l)] = 2
        rvc = _fill("vertex", {}, verts, D)
    elif variant == "odd":
        rvc_k = 2 * l - 1
        verts = {}
        for z in out_u:
            verts[z] = 1
        for z in in_u - {w(1)}:
            verts[z] = 2
        verts[w(l)] = 2
        verts[v(l)] = verts[w(l - 1)] = 3
        rvc = _fill("vertex", {}, verts, D)

    arc_c: dict[tuple[int, int], object] = {}
    vert_c: dict[int, object] = {}
    # broad rules first, then the named elements, so named rules win on overlap
    if variant == "base":
        trc_k = 3 * l
        for z in out_u:
            arc_c[(u, z)] = l
        for z in in_u:
            arc_c[(z, u)] = l + 1
        for z in out_u - {v(1)}:
            vert_c[z] = l + 2
        for z in in_u - {w(1)}:
            vert_c[z] = l + 3
        for i in range(1, l):
            arc_c[(v(i), w(i))] = arc_c[(v(i), v(i + 1))] = i
        vert_c[v(l)] = l + 2
        vert_c[w(l)] = l + 3
    elif variant == "odd":
        trc_k = 3 * l - 2
        for z in out_u:
            arc_c[(u, z)] = l + 2
            vert_c[z] = l + 4
        for z in in_u:
            arc_c[(z, u)] = l + 3
        for z in in_u - {w(1)}:
            vert_c[z] = l + 5
        for i in range(1, l):
            arc_c[(v(i), w(i))] = arc_c[(v(i), v(i + 1))] = i
        arc_c[(names["x"], v(1))] = arc_c[(w(2), v(1))] = l
        vert_c[w(1)] = vert_c[v(l)] = l + 1
        vert_c[w(l)] = l + 5
    else:
        trc_k = 3 * l - 4
        x1, x2 = names["x1"], names["x2"]
        for z in out_u:
            arc_c[(u, z)] = l + 4
        for z in in_u:
            arc_c[(z, u)] = l + 5
            vert_c[z] = l + 7
        for z in out_u - {x1}:
            vert_c[z] = l + 6
        arc_c[(v(1), x2)] = l + 6
        arc_c[(x2, v(2))] = arc_c[(w(3), v(2))] = 1
        for i in range(2, l):
            arc_c[(v(i), w(i))] = arc_c[(v(i), v(i + 1))] = i
        arc_c[(x1, v(1))] = arc_c[(w(2), v(1))] = l
        arc_c[(v(1), w(1))] = l + 1
        vert_c[v(l)] = l + 1
        vert_c[x1] = vert_c[w(2)] = l + 2
        vert_c[x2] = vert_c[w(l)] = l + 3
    trc = _fill("total", arc_c, vert_c, D)
    return QnqlInstance(D, names, variant, l, rvc, rvc_k, trc, trc_k)


def _fill(domain: str, arcs: dict, verts: dict, D: Digraph) -> Coloring:
    """Give every uncolored element of the domain its own fresh color."""
    arcs = dict(arcs)
    verts = dict(verts)
    if domain in ("arc", "total"):
        for a in D.arcs:
            arcs.setdefault(a, ("own-arc", a))
    if domain in ("vertex", "total"):
        for x in range(D.n):
            verts.setdefault(x, ("own-vertex", x))
    return Coloring.from_labels(domain, arcs, verts)
