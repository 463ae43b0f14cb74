"""Exact computation of the six parameters.

Every parameter is turned into the same constraint model: a list of
elements to color (vertices by id, then arcs in sorted order, restricted to
what the kind looks at) and, for every ordered pair of non-adjacent
vertices, the element sets of its candidate paths (all paths, or only the
geodesics for the strong kinds). A coloring is valid iff every pair keeps at
least one candidate whose elements have pairwise distinct colors.

The search deepens the color budget k from the lower bound and enumerates
restricted growth strings in the fixed element order. Assigning a color
kills every candidate that already holds that color; a pair with no live
candidate prunes the branch. That is sound for any partial assignment
because colors are never retracted along a branch, and candidates with more
than k elements are dropped up front since they cannot be rainbow with k
colors.
"""

from __future__ import annotations

import os
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import Coloring, ParamKind
from .digraph import INF, Digraph, biorient, distances, is_strongly_connected, undirected_connected
from .errors import BudgetExceeded, NotStronglyConnected

DEFAULT_MAX_ELEMENTS = 16
DEFAULT_MAX_VERTEX_ELEMENTS = 12
ENV_BUDGET = "RAINBOW_BUDGET_ELEMENTS"


@dataclass(frozen=True)
class SolveBudget:
    max_elements: int | None = None
    max_nodes: int | None = None
    max_time: float | None = None

    def element_cap(self, kind: ParamKind) -> int:
        if self.max_elements is not None:
            return self.max_elements
        env = os.environ.get(ENV_BUDGET)
        if env:
            return int(env)
        if kind.domain == "vertex":
            return DEFAULT_MAX_VERTEX_ELEMENTS
        return DEFAULT_MAX_ELEMENTS


@dataclass
class SolveStats:
    nodes: int = 0
    elapsed: float = 0.0
    levels: list[tuple[int, int]] = field(default_factory=list)  # (k, nodes at that level)


@dataclass(frozen=True)
class SolveResult:
    kind: ParamKind
    value: int
    witness: Coloring
    searched_below: bool
    stats: SolveStats

    def summary(self) -> str:
        return f"result {self.kind.value} {self.value} {str(self.searched_below).lower()} {self.stats.nodes}"


@dataclass(frozen=True)
class Model:
    """Elements to color and, per pair, the element sets of its candidate paths.

    ``pair_paths`` keeps one entry per constrained pair; each entry lists
    (element-index tuple) candidates. Pairs with an always-rainbow candidate
    are left out.
    """

    elements: tuple[tuple[str, object], ...]
    pair_paths: tuple[tuple[tuple[int, ...], ...], ...]
    pairs: tuple[tuple[int, int], ...]


def lower_bound(D: Digraph, kind: ParamKind) -> int:
    if not is_strongly_connected(D):
        raise NotStronglyConnected("lower bound needs a strongly connected digraph")
    diam = int(distances(D).diameter)
    if kind.domain == "total":
        return max(2 * diam - 1, 1)
    if kind.domain == "arc":
        return diam
    return max(diam - 1, 0)


def element_count(D: Digraph, kind: ParamKind) -> int:
    return (D.n if kind.uses_vertices else 0) + (D.m if kind.uses_arcs else 0)


def simple_paths(D: Digraph, u: int, v: int, max_len: int) -> Iterable[list[int]]:
    path = [u]
    on_path = {u}

    def walk(x: int):
        if len(path) - 1 >= max_len:
            return
        for y in D.out_neighbors(x):
            if y == v:
                yield path + [v]
            elif y not in on_path:
                path.append(y)
                on_path.add(y)
                yield from walk(y)
                path.pop()
                on_path.discard(y)

    yield from walk(u)


def geodesics(D: Digraph, dist, u: int, v: int) -> Iterable[list[int]]:
    target = dist[u][v]
    path = [u]

    def walk(x: int):
        if x == v:
            yield list(path)
            return
        for y in D.out_neighbors(x):
            if dist[u][y] == dist[u][x] + 1 and dist[u][y] + dist[y][v] == target:
                path.append(y)
                yield from walk(y)
                path.pop()

    yield from walk(u)


def _minimal(sets: list[frozenset[int]]) -> list[frozenset[int]]:
    """Drop duplicates and strict supersets: rainbow on a superset implies rainbow on the subset."""
    uniq = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(t <= s for t in kept):
            kept.append(s)
    return kept


def _path_size(kind: ParamKind, length: int) -> int:
    """Number of constrained elements on a path with ``length`` arcs."""
    size = 0
    if kind.uses_arcs:
        size += length
    if kind.uses_vertices:
        size += length - 1
    return size


def _max_length(kind: ParamKind, k: int) -> int:
    """Longest path whose constrained elements can all be distinct with k colors."""
    if kind.domain == "arc":
        return k
    if kind.domain == "vertex":
        return k + 1
    return (k + 1) // 2


def build_model(
    D: Digraph,
    kind: ParamKind,
    k: int | None = None,
    element_of_arc=None,
    elements: Sequence[tuple[str, object]] | None = None,
    symmetric: bool = False,
) -> Model:
    """Constraint model for ``kind`` on ``D``, keeping only candidates with at most k elements.

    ``element_of_arc``/``elements`` let the undirected solver map both arcs of
    an edge to one element; ``symmetric`` keeps only pairs u < v.
    """
    if elements is None:
        elements = []
        if kind.uses_vertices:
            elements += [("v", x) for x in range(D.n)]
        if kind.uses_arcs:
            elements += [("a", a) for a in D.sorted_arcs()]
    index = {e: i for i, e in enumerate(elements)}
    if element_of_arc is None:
        def element_of_arc(a):
            return ("a", a)
    dist = distances(D).dist
    max_len = _max_length(kind, k) if k is not None else D.n
    pair_paths = []
    pairs = []
    for u in range(D.n):
        for v in range(D.n):
            if u == v or D.has_arc(u, v) or (symmetric and v < u):
                continue
            if dist[u][v] == INF:
                raise NotStronglyConnected(f"{v} is not reachable from {u}")
            if kind.strong:
                if dist[u][v] > max_len:
                    paths: Iterable[list[int]] = []
                else:
                    paths = geodesics(D, dist, u, v)
            else:
                paths = simple_paths(D, u, v, max_len)
            sets = []
            trivial = False
            for p in paths:
                s = set()
                if kind.uses_arcs:
                    s.update(index[element_of_arc((p[i], p[i + 1]))] for i in range(len(p) - 1))
                if kind.uses_vertices:
                    s.update(index[("v", x)] for x in p[1:-1])
                if k is not None and len(s) > k:
                    continue
                if len(s) <= 1:
                    trivial = True
                    break
                sets.append(frozenset(s))
            if trivial:
                continue
            pair_paths.append(tuple(tuple(sorted(s)) for s in _minimal(sets)))
            pairs.append((u, v))
    return Model(tuple(elements), tuple(pair_paths), tuple(pairs))


class _Search:
    """Backtracking over restricted growth strings with dead-candidate counting."""

    def __init__(self, model: Model, k: int, budget: SolveBudget, stats: SolveStats, deadline: float | None):
        self.n_el = len(model.elements)
        self.k = k
        self.budget = budget
        self.stats = stats
        self.deadline = deadline
        cands: list[tuple[int, ...]] = []
        cand_pair: list[int] = []
        pair_alive: list[int] = []
        for p, paths in enumerate(model.pair_paths):
            pair_alive.append(len(paths))
            for s in paths:
                cands.append(s)
                cand_pair.append(p)
        self.infeasible = any(a == 0 for a in pair_alive)
        self.cand_pair = cand_pair
        self.pair_alive = pair_alive
        self.used = [0] * len(cands)
        self.alive = [True] * len(cands)
        elem_cands: list[list[int]] = [[] for _ in range(self.n_el)]
        for ci, s in enumerate(cands):
            for e in s:
                elem_cands[e].append(ci)
        self.elem_cands = elem_cands
        self.color = [-1] * self.n_el

    def run(self) -> list[int] | None:
        if self.infeasible:
            return None
        if self.n_el == 0:
            return []
        limit = sys.getrecursionlimit()
        if limit < self.n_el + 100:
            sys.setrecursionlimit(self.n_el + 100)
        return list(self.color) if self._rec(0, 0) else None

    def _check_budget(self) -> None:
        st = self.stats
        if self.budget.max_nodes is not None and st.nodes > self.budget.max_nodes:
            raise BudgetExceeded(f"node budget {self.budget.max_nodes} exhausted", st)
        if self.deadline is not None and (st.nodes & 1023) == 0 and time.perf_counter() > self.deadline:
            raise BudgetExceeded(f"time budget {self.budget.max_time}s exhausted", st)

    def _rec(self, i: int, ncolors: int) -> bool:
        if i == self.n_el:
            return True
        self.stats.nodes += 1
        self._check_budget()
        alive = self.alive
        used = self.used
        cand_pair = self.cand_pair
        pair_alive = self.pair_alive
        mine = self.elem_cands[i]
        top = ncolors + 1 if ncolors < self.k else ncolors
        for col in range(top):
            bit = 1 << col
            killed: list[int] = []
            marked: list[int] = []
            ok = True
            for ci in mine:
                if not alive[ci]:
                    continue
                if used[ci] & bit:
                    alive[ci] = False
                    killed.append(ci)
                    p = cand_pair[ci]
                    pair_alive[p] -= 1
                    if pair_alive[p] == 0:
                        ok = False
                        break
                else:
                    used[ci] |= bit
                    marked.append(ci)
            if ok:
                self.color[i] = col
                if self._rec(i + 1, max(ncolors, col + 1)):
                    return True
            for ci in marked:
                used[ci] ^= bit
            for ci in killed:
                alive[ci] = True
                pair_alive[cand_pair[ci]] += 1
        self.color[i] = -1
        return False


def feasible(model: Model, k: int, budget: SolveBudget | None = None, stats: SolveStats | None = None):
    """First coloring (canonical order) of ``model`` with at most k colors, or None."""
    budget = budget or SolveBudget()
    stats = stats or SolveStats()
    deadline = time.perf_counter() + budget.max_time if budget.max_time is not None else None
    return _Search(model, k, budget, stats, deadline).run()


def _coloring_from(model: Model, colors: list[int], domain: str) -> Coloring:
    arc_colors = {}
    vertex_colors = {}
    for (tag, obj), col in zip(model.elements, colors):
        if tag == "v":
            vertex_colors[obj] = col
        else:
            arc_colors[obj] = col
    return Coloring.from_labels(domain, arc_colors, vertex_colors)


def _deepen(make_model, lb: int, ub: int, budget: SolveBudget, to_coloring, kind: ParamKind) -> SolveResult:
    stats = SolveStats()
    start = time.perf_counter()
    deadline = start + budget.max_time if budget.max_time is not None else None
    # rvc of a bioriented complete digraph is 0: nothing needs a color
    if lb == 0:
        model = make_model(0)
        if not model.pairs:
            stats.elapsed = time.perf_counter() - start
            witness = to_coloring(model, [0] * len(model.elements))
            return SolveResult(kind, 0, witness, True, stats)
        lb = 1
    for k in range(lb, ub + 1):
        model = make_model(k)
        before = stats.nodes
        try:
            colors = _Search(model, k, budget, stats, deadline).run()
        except BudgetExceeded as exc:
            stats.elapsed = time.perf_counter() - start
            raise BudgetExceeded(f"{exc} while searching k={k} for {kind.value}", stats) from None
        stats.levels.append((k, stats.nodes - before))
        if colors is not None:
            stats.elapsed = time.perf_counter() - start
            return SolveResult(kind, k, to_coloring(model, colors), True, stats)
    raise AssertionError(f"no valid coloring with {ub} colors; the upper bound must always be feasible")


def exact(D: Digraph, kind: ParamKind, budget: SolveBudget | None = None) -> SolveResult:
    budget = budget or SolveBudget()
    if not is_strongly_connected(D):
        raise NotStronglyConnected("exact solve needs a strongly connected digraph")
    size = element_count(D, kind)
    cap = budget.element_cap(kind)
    if size > cap:
        raise BudgetExceeded(f"{kind.value} instance has {size} elements, cap is {cap}", SolveStats())
    lb = lower_bound(D, kind)

    def make_model(k):
        return build_model(D, kind, k)

    def to_coloring(model, colors):
        return _coloring_from(model, colors, kind.domain)

    return _deepen(make_model, lb, size, budget, to_coloring, kind)


def exact_undirected(
    n: int, edges: Sequence[Sequence[int]], kind: ParamKind, budget: SolveBudget | None = None
) -> SolveResult:
    """Undirected parameter of the graph (n, edges).

    Modelled on the biorientation with both arcs of an edge sharing one
    element. The witness is returned on the biorientation (paired arcs carry
    equal colors).
    """
    budget = budget or SolveBudget()
    edge_list = sorted({(min(a, b), max(a, b)) for a, b in edges})
    if not undirected_connected(n, edge_list):
        raise NotStronglyConnected("graph is not connected")
    D = biorient(n, edge_list)
    size = (n if kind.uses_vertices else 0) + (len(edge_list) if kind.uses_arcs else 0)
    cap = budget.element_cap(kind)
    if size > cap:
        raise BudgetExceeded(f"{kind.value} instance has {size} elements, cap is {cap}", SolveStats())
    elements: list[tuple[str, object]] = []
    if kind.uses_vertices:
        elements += [("v", x) for x in range(n)]
    if kind.uses_arcs:
        elements += [("e", e) for e in edge_list]

    def element_of_arc(a):
        return ("e", (min(a), max(a)))

    def make_model(k):
        return build_model(D, kind, k, element_of_arc, elements, symmetric=True)

    def to_coloring(model, colors):
        arc_colors = {}
        vertex_colors = {}
        for (tag, obj), col in zip(model.elements, colors):
            if tag == "v":
                vertex_colors[obj] = col
            else:
                a, b = obj
                arc_colors[(a, b)] = col
                arc_colors[(b, a)] = col
        return Coloring.from_labels(kind.domain, arc_colors, vertex_colors)

    return _deepen(make_model, lower_bound(D, kind), size, budget, to_coloring, kind)


def kind_value(D: Digraph, kind: ParamKind, budget: SolveBudget | None = None) -> int:
    return exact(D, kind, budget).value
