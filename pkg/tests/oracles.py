"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from collections import deque

from dirainbow.coloring import Coloring, ParamKind
from dirainbow.digraph import Digraph, build

INF = float("inf")


def all_simple_paths(D: Digraph, u: int, v: int) -> list[list[int]]:
    out = []

    def walk(path):
        x = path[-1]
        if x == v:
            out.append(list(path))
            return
        for y in D.out_neighbors(x):
            if y not in path:
                path.append(y)
                walk(path)
                path.pop()

    walk([u])
    return out


def floyd(D: Digraph) -> list[list[float]]:
    n = D.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for x, y in D.arcs:
        dist[x][y] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def reach_all(D: Digraph) -> bool:
    for s in range(D.n):
        seen = {s}
        todo = deque([s])
        while todo:
            x = todo.popleft()
            for y in D.out_neighbors(x):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != D.n:
            return False
    return True


def path_elements(kind: ParamKind, path: list[int]) -> list[tuple]:
    items = []
    if kind.uses_arcs:
        items += [("a", (x, y)) for x, y in zip(path, path[1:])]
    if kind.uses_vertices:
        items += [("v", x) for x in path[1:-1]]
    return items


def candidates(D: Digraph, kind: ParamKind) -> dict[tuple[int, int], list[list[tuple]]]:
    """Per ordered pair, the element lists of every admissible path."""
    dist = floyd(D)
    out = {}
    for u in range(D.n):
        for v in range(D.n):
            if u == v:
                continue
            paths = all_simple_paths(D, u, v)
            if kind.strong:
                paths = [p for p in paths if len(p) - 1 == dist[u][v]]
            out[(u, v)] = [path_elements(kind, p) for p in paths]
    return out


def brute_ok(D: Digraph, c: Coloring, kind: ParamKind) -> bool:
    """Every ordered pair has an admissible path whose colored elements are distinct."""

    def color(item):
        tag, obj = item
        return c.arc_colors[obj] if tag == "a" else c.vertex_colors[obj]

    for paths in candidates(D, kind).values():
        if not any(len({color(i) for i in items}) == len(items) for items in paths):
            return False
    return True


def elements(D: Digraph, kind: ParamKind) -> list[tuple]:
    out = []
    if kind.uses_vertices:
        out += [("v", x) for x in range(D.n)]
    if kind.uses_arcs:
        out += [("a", a) for a in D.sorted_arcs()]
    return out


def restricted_growth(length: int, max_colors: int):
    """Every restricted growth string of the given length using at most max_colors ids."""
    if length == 0:
        yield ()
        return
    word = [0] * length

    def rec(i, top):
        if i == length:
            yield tuple(word)
            return
        for col in range(min(top + 2, max_colors)):
            word[i] = col
            yield from rec(i + 1, max(top, col))

    yield from rec(1, 0)


def colorable(D: Digraph, kind: ParamKind, k: int) -> bool:
    """Unpruned: try every coloring with at most k colors."""
    if k <= 0:
        return False
    items = elements(D, kind)
    index = {item: i for i, item in enumerate(items)}
    cands = [[[index[i] for i in p] for p in paths] for paths in candidates(D, kind).values()]
    for word in restricted_growth(len(items), k):
        if all(any(len({word[i] for i in p}) == len(p) for p in paths) for paths in cands):
            return True
    return False


def strong_digraphs_all(n: int):
    """Every strongly connected digraph on vertex set 0..n-1 (not deduplicated)."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product(range(4), repeat=len(pairs)):
        arcs = []
        for (x, y), s in zip(pairs, states):
            if s & 1:
                arcs.append((x, y))
            if s & 2:
                arcs.append((y, x))
        D = build(n, arcs)
        if reach_all(D):
            yield D
