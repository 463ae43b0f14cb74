"""Deciding rainbow paths and geodesics, and certificate checking.

The path search walks states (vertex, set of colors used so far), with the
color set held in an int bit set. A walk whose constrained elements are
pairwise distinct shortcuts to a path with a subset of those elements, so
searching walks is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring, ParamKind
from .digraph import INF, Digraph, DistanceTable, distances, is_strongly_connected
from .errors import InvalidColoring, NotAPath, NotStronglyConnected, TooManyColors, Unreachable

COLOR_CAPACITY = 64


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    failing_pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def rainbow_elements(D: Digraph, kind: ParamKind, path: Sequence[int], c: Coloring) -> list[int]:
    """Colors of the elements ``kind`` constrains on ``path``.

    The path is rainbow for ``kind`` iff the returned list has no repeats.
    """
    if len(path) < 1 or len(set(path)) != len(path):
        raise NotAPath(f"not a path: {list(path)}")
    for i in range(len(path) - 1):
        if not D.has_arc(path[i], path[i + 1]):
            raise NotAPath(f"({path[i]}, {path[i + 1]}) is not an arc")
    return c.colors_on(kind, path)


def is_rainbow(D: Digraph, kind: ParamKind, path: Sequence[int], c: Coloring) -> bool:
    colors = rainbow_elements(D, kind, path, c)
    return len(colors) == len(set(colors))


class _Masks:
    """Per-element color bits for one (digraph, coloring, kind)."""

    def __init__(self, D: Digraph, c: Coloring, kind: ParamKind):
        if c.color_count > COLOR_CAPACITY:
            raise TooManyColors(f"{c.color_count} colors exceed bit-set capacity {COLOR_CAPACITY}")
        if not c.covers(D, kind):
            raise InvalidColoring(f"coloring does not cover every element needed by {kind.value}")
        self.out = [D.out_neighbors(x) for x in range(D.n)]
        if kind.uses_arcs:
            self.arc = {a: 1 << col for a, col in c.arc_colors.items()}
        else:
            self.arc = None
        if kind.uses_vertices:
            self.vertex = [1 << c.vertex_colors[x] for x in range(D.n)]
        else:
            self.vertex = None


def _search(m: _Masks, u: int, v: int, allowed=None) -> bool:
    arc_bits = m.arc
    vertex_bits = m.vertex
    seen = {(u, 0)}
    stack = [(u, 0)]
    while stack:
        x, mask = stack.pop()
        for y in m.out[x]:
            if allowed is not None and not allowed(x, y):
                continue
            nmask = mask
            if arc_bits is not None:
                b = arc_bits[(x, y)]
                if b & nmask:
                    continue
                nmask |= b
            if y == v:
                return True
            if vertex_bits is not None:
                b = vertex_bits[y]
                if b & nmask:
                    continue
                nmask |= b
            state = (y, nmask)
            if state not in seen:
                seen.add(state)
                stack.append(state)
    return False


def exists_rainbow_path(D: Digraph, c: Coloring, kind: ParamKind, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("endpoints must differ")
    return _search(_Masks(D, c, kind), u, v)


def _geodesic_filter(table: DistanceTable, u: int, v: int):
    du = table.dist[u]
    target = du[v]

    def allowed(x: int, y: int) -> bool:
        return du[x] + 1 == du[y] and du[y] + table.dist[y][v] == target

    return allowed


def exists_rainbow_geodesic(
    D: Digraph, c: Coloring, kind: ParamKind, u: int, v: int, table: DistanceTable | None = None
) -> bool:
    if u == v:
        raise ValueError("endpoints must differ")
    table = table or distances(D)
    if table.dist[u][v] == INF:
        raise Unreachable(f"{v} is not reachable from {u}")
    return _search(_Masks(D, c, kind), u, v, _geodesic_filter(table, u, v))


def check_connected(D: Digraph, c: Coloring, kind: ParamKind) -> CheckReport:
    """Is ``c`` a (strongly) rainbow connected coloring of ``D`` for ``kind``?

    On failure the lexicographically least failing ordered pair is reported.
    """
    if not is_strongly_connected(D):
        raise NotStronglyConnected("digraph is not strongly connected")
    masks = _Masks(D, c, kind)
    table = distances(D) if kind.strong else None
    for u in range(D.n):
        for v in range(D.n):
            if u == v or D.has_arc(u, v):
                # a single arc is rainbow for every kind
                continue
            allowed = _geodesic_filter(table, u, v) if table is not None else None
            if not _search(masks, u, v, allowed):
                return CheckReport(False, (u, v))
    return CheckReport(True)
