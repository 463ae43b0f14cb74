"""Immutable digraphs on dense integer vertex ids, plus BFS distances and
the construction operators used by the families (biorientation, vertex
expansion, lexicographic product)."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateArc, LoopArc, VertexOutOfRange

Arc = tuple[int, int]

INF = math.inf


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[Arc]
    _out: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _in: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        out: list[list[int]] = [[] for _ in range(self.n)]
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            if u == v:
                raise LoopArc((u, v))
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange((u, v))
            out[u].append(v)
            inn[v].append(u)
        object.__setattr__(self, "_out", tuple(tuple(sorted(x)) for x in out))
        object.__setattr__(self, "_in", tuple(tuple(sorted(x)) for x in inn))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def in_neighbors(self, u: int) -> tuple[int, ...]:
        return self._in[u]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


def build(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    """Validate an arc list and return the digraph.

    Raises LoopArc, DuplicateArc or VertexOutOfRange naming the first
    offending arc.
    """
    seen: set[Arc] = set()
    for pair in arcs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise LoopArc((u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange((u, v))
        if (u, v) in seen:
            raise DuplicateArc((u, v))
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def biorient(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    arcs: list[Arc] = []
    for u, v in edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return build(n, arcs)


def neighbors(D: Digraph, u: int, direction: str = "out") -> frozenset[int]:
    if not 0 <= u < D.n:
        raise VertexOutOfRange(u)
    if direction == "out":
        return frozenset(D.out_neighbors(u))
    if direction == "in":
        return frozenset(D.in_neighbors(u))
    raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")


def closed_neighborhood(D: Digraph, u: int) -> frozenset[int]:
    return neighbors(D, u, "out") | neighbors(D, u, "in") | {u}


def bfs(D: Digraph, source: int) -> list[float]:
    dist: list[float] = [INF] * D.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in D.out_neighbors(x):
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


@dataclass(frozen=True)
class DistanceTable:
    dist: tuple[tuple[float, ...], ...]
    diameter: float

    def __getitem__(self, uv: tuple[int, int]) -> float:
        return self.dist[uv[0]][uv[1]]


def distances(D: Digraph) -> DistanceTable:
    rows = tuple(tuple(bfs(D, s)) for s in range(D.n))
    diam: float = 0
    for row in rows:
        for d in row:
            if d > diam:
                diam = d
    return DistanceTable(rows, diam)


def is_strongly_connected(D: Digraph) -> bool:
    if D.n == 0:
        return False
    if INF in bfs(D, 0):
        return False
    rev = Digraph(D.n, frozenset((v, u) for u, v in D.arcs))
    return INF not in bfs(rev, 0)


def diameter(D: Digraph) -> float:
    return distances(D).diameter


def expand(D: Digraph, u: int, H: Digraph) -> Digraph:
    """Replace vertex u of D by a copy of H.

    Vertices of D keep their ids with those above u shifted down by one; the
    copy of H takes ids n(D)-1 .. n(D)+n(H)-2 in H's order.
    """
    if not 0 <= u < D.n:
        raise VertexOutOfRange(u)
    relabel, copy = expansion_labels(D.n, u, H.n)
    arcs: set[Arc] = set()
    for x, y in D.arcs:
        if x == u:
            arcs.update((h, relabel[y]) for h in copy)
        elif y == u:
            arcs.update((relabel[x], h) for h in copy)
        else:
            arcs.add((relabel[x], relabel[y]))
    arcs.update((copy[a], copy[b]) for a, b in H.arcs)
    return Digraph(D.n + H.n - 1, frozenset(arcs))


def expansion_labels(n_d: int, u: int, n_h: int) -> tuple[dict[int, int], list[int]]:
    """Vertex relabelling used by expand: (map for D's other vertices, ids of the copy)."""
    relabel = {x: (x if x < u else x - 1) for x in range(n_d) if x != u}
    copy = [n_d - 1 + i for i in range(n_h)]
    return relabel, copy


def lex_product(D: Digraph, H: Digraph) -> Digraph:
    """D∘H with vertex (x, h) numbered x*n(H) + h."""
    if D.n == 0 or H.n == 0:
        raise ValueError("lexicographic product needs non-empty digraphs")
    k = H.n
    arcs: set[Arc] = set()
    for x, y in D.arcs:
        for a in range(k):
            for b in range(k):
                arcs.add((x * k + a, y * k + b))
    for x in range(D.n):
        for a, b in H.arcs:
            arcs.add((x * k + a, x * k + b))
    return Digraph(D.n * k, frozenset(arcs))


@dataclass(frozen=True)
class ArcClasses:
    symmetric_pairs: frozenset[Arc]
    asymmetric_arcs: frozenset[Arc]
    is_oriented: bool
    is_tournament: bool


def classify(D: Digraph) -> ArcClasses:
    sym = frozenset((u, v) for u, v in D.arcs if u < v and (v, u) in D.arcs)
    asym = frozenset(a for a in D.arcs if (a[1], a[0]) not in D.arcs)
    oriented = not sym
    tournament = oriented and D.m == D.n * (D.n - 1) // 2
    return ArcClasses(sym, asym, oriented, tournament)


def is_spanning_subdigraph(H: Digraph, D: Digraph) -> bool:
    return H.n == D.n and H.arcs <= D.arcs


def is_bioriented_complete(D: Digraph) -> bool:
    return D.m == D.n * (D.n - 1)


def remove_arcs(D: Digraph, arcs: Iterable[Arc]) -> Digraph:
    return Digraph(D.n, D.arcs - frozenset(arcs))


def add_arcs(D: Digraph, arcs: Iterable[Arc]) -> Digraph:
    return build(D.n, list(D.arcs) + list(arcs))


def relabel(D: Digraph, perm: Sequence[int]) -> Digraph:
    """Rename vertex x to perm[x]."""
    return Digraph(D.n, frozenset((perm[u], perm[v]) for u, v in D.arcs))


def induced(D: Digraph, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Induced subdigraph on the given vertices, renumbered in sorted order.

    Returns the subdigraph and the list mapping new ids to old ids.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    arcs = frozenset((index[u], index[v]) for u, v in D.arcs if u in index and v in index)
    return Digraph(len(keep), arcs), keep


def undirected_connected(n: int, edges: Iterable[Sequence[int]]) -> bool:
    if n == 0:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


# Small named digraphs used all over the place.

def dipath(n: int) -> Digraph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def dicycle(n: int) -> Digraph:
    if n < 3:
        raise ValueError("directed cycle needs n >= 3")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def bioriented_complete(n: int) -> Digraph:
    return build(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def single_vertex() -> Digraph:
    return Digraph(1, frozenset())
