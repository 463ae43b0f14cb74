"""Named digraph families, closed-form values, and explicit coloring schemes.

Vertex labelling per family:

* dipath / dicycle / bio_path / bio_cycle: v_i is id i.
* bio_star(n): centre 0, leaves 1..n.  bio_wheel(n): centre 0, rim 1..n in cycle order.
* bio_multipartite(parts): classes numbered consecutively, class by class.
* petersen: outer cycle u_0..u_4 are ids 0..4, inner pentagram v_0v_2v_4v_1v_3 are
  ids 5..9 (v_i is 5+i), spokes u_iv_i.
* petersen_expanded(n): petersen with v_0 expanded into a bioriented K_{n-9};
  v_1..v_4 become ids 5..8 and the clique takes ids 9..n-1.
* ky_gs(s) / hs(s): u_i, v_i, w_i (1 <= i <= s) are ids i-1, s+i-1, 2s+i-1, and for
  hs the extra z_i is 3s+i-1.
* fs(s): clique u_i is id i-1, pendant v_i is s+i-1.
* triangle_fan(t): hub 0, x_i is 2i-1, y_i is 2i.
* tournaments: see the tournaments module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .coloring import Coloring, ParamKind
from .digraph import (
    Digraph,
    biorient,
    bioriented_complete,
    build,
    dicycle,
    dipath,
    distances,
    expand,
    expansion_labels,
)
from .errors import InvalidFamilyParams, NoSchemeForFamily, OutOfRange

FAMILY_NAMES = (
    "dipath",
    "dicycle",
    "bio_path",
    "bio_cycle",
    "bio_star",
    "bio_wheel",
    "bio_multipartite",
    "petersen",
    "petersen_expanded",
    "tournament_T4",
    "tournament_T53",
    "tournament_TNk",
    "tournament_Tnk",
    "ky_gs",
    "hs",
    "fs",
    "triangle_fan",
)

# kind each explicit scheme is proved to satisfy
SCHEME_KIND = {
    "dicycle": ParamKind.STRC,
    "bio_path": ParamKind.STRC,
    "bio_star": ParamKind.STRC,
    "bio_wheel": ParamKind.STRC,
    "bio_multipartite": ParamKind.STRC,
    "petersen": ParamKind.STRC,
    "petersen_expanded": ParamKind.STRC,
    "tournament_T4": ParamKind.STRC,
    "tournament_T53": ParamKind.STRC,
    "tournament_TNk": ParamKind.STRC,
    "tournament_Tnk": ParamKind.STRC,
    "hs": ParamKind.STRC,
    "fs": ParamKind.SRC,
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise InvalidFamilyParams(f"unknown family {self.name!r}")
        object.__setattr__(self, "params", dict(self.params))

    def get(self, key: str, low: int | None = None):
        if key not in self.params:
            raise InvalidFamilyParams(f"{self.name} needs parameter {key!r}")
        value = self.params[key]
        if low is not None:
            if not isinstance(value, int) or value < low:
                raise InvalidFamilyParams(f"{self.name}: {key} must be an integer >= {low}, got {value!r}")
        return value

    @classmethod
    def parse(cls, name: str, text: str) -> "FamilySpec":
        """Parse ``k=v,...``; list values use ``-`` separators (parts=2-2-3)."""
        params: dict[str, object] = {}
        for item in filter(None, (t.strip() for t in text.split(","))):
            if "=" not in item:
                raise InvalidFamilyParams(f"bad parameter {item!r}, expected key=value")
            key, raw = (s.strip() for s in item.split("=", 1))
            try:
                if "-" in raw:
                    params[key] = tuple(int(x) for x in raw.split("-"))
                else:
                    params[key] = int(raw)
            except ValueError:
                raise InvalidFamilyParams(f"parameter {key} must be integer(s), got {raw!r}") from None
        return cls(name, params)


# ---------------------------------------------------------------- constructors


def bio_path(n: int) -> Digraph:
    return biorient(n, [(i, i + 1) for i in range(n - 1)])


def bio_cycle(n: int) -> Digraph:
    return biorient(n, [(i, (i + 1) % n) for i in range(n)])


def bio_star(n: int) -> Digraph:
    return biorient(n + 1, [(0, i) for i in range(1, n + 1)])


def bio_wheel(n: int) -> Digraph:
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return biorient(n + 1, spokes + rim)


def multipartite_classes(parts) -> list[int]:
    return [c for c, size in enumerate(parts) for _ in range(size)]


def bio_multipartite(parts) -> Digraph:
    cls = multipartite_classes(parts)
    n = len(cls)
    return biorient(n, [(x, y) for x in range(n) for y in range(x + 1, n) if cls[x] != cls[y]])


def petersen_edges() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return outer + inner + spokes


def petersen() -> Digraph:
    return biorient(10, petersen_edges())


def petersen_expanded(n: int) -> Digraph:
    if n < 11:
        raise InvalidFamilyParams("expanded Petersen needs n >= 11")
    return expand(petersen(), 5, bioriented_complete(n - 9))


def _gs_edges(s: int) -> list[tuple[int, int]]:
    u = lambda i: (i - 1) % s
    v = lambda i: s + (i - 1) % s
    w = lambda i: 2 * s + (i - 1) % s
    edges = [(u(i), u(j)) for i in range(1, s + 1) for j in range(i + 1, s + 1)]
    for i in range(1, s + 1):
        edges += [(u(i), v(i)), (v(i), w(i)), (w(i), u(i))]
    return edges


def ky_gs(s: int) -> Digraph:
    return biorient(3 * s, _gs_edges(s))


def hs_vertex(s: int, tag: str, i: int) -> int:
    """Id of u_i / v_i / w_i / z_i in hs(s); i is taken modulo s (1-based)."""
    return "uvwz".index(tag) * s + (i - 1) % s


def hs(s: int) -> Digraph:
    z = lambda i: hs_vertex(s, "z", i)
    u = lambda i: hs_vertex(s, "u", i)
    v = lambda i: hs_vertex(s, "v", i)
    w = lambda i: hs_vertex(s, "w", i)
    edges = _gs_edges(s)
    for i in range(1, s + 1):
        edges += [(u(i), z(i)), (u(i + 1), z(i)), (v(i), z(i)), (w(i), z(i + 4))]
    return biorient(4 * s, edges)


def fs(s: int) -> Digraph:
    edges = [(i, j) for i in range(s) for j in range(i + 1, s)]
    edges += [(i, s + i) for i in range(s)]
    return biorient(2 * s, edges)


def triangle_fan(t: int) -> Digraph:
    arcs = []
    for i in range(1, t + 1):
        x, y = 2 * i - 1, 2 * i
        arcs += [(0, x), (x, y), (y, 0)]
    return build(2 * t + 1, arcs)


def make(spec: FamilySpec) -> Digraph:
    from . import tournaments

    name = spec.name
    if name == "dipath":
        return dipath(spec.get("n", 1))
    if name == "dicycle":
        return dicycle(spec.get("n", 3))
    if name == "bio_path":
        return bio_path(spec.get("n", 1))
    if name == "bio_cycle":
        return bio_cycle(spec.get("n", 3))
    if name == "bio_star":
        return bio_star(spec.get("n", 1))
    if name == "bio_wheel":
        return bio_wheel(spec.get("n", 3))
    if name == "bio_multipartite":
        parts = _parts(spec)
        return bio_multipartite(parts)
    if name == "petersen":
        return petersen()
    if name == "petersen_expanded":
        return petersen_expanded(spec.get("n", 11))
    if name == "tournament_T4":
        return tournaments.tournament_T4()
    if name == "tournament_T53":
        return tournaments.tournament_T53()
    if name == "tournament_TNk":
        return tournaments.tournament_TNk(_odd_k(spec))
    if name == "tournament_Tnk":
        return tournaments.tournament_Tnk(spec.get("n", 4), _odd_k(spec))[0]
    if name == "ky_gs":
        return ky_gs(spec.get("s", 1))
    if name == "hs":
        return hs(spec.get("s", 13))
    if name == "fs":
        return fs(spec.get("s", 2))
    if name == "triangle_fan":
        return triangle_fan(spec.get("t", 1))
    raise InvalidFamilyParams(f"unknown family {name!r}")


def _parts(spec: FamilySpec) -> tuple[int, ...]:
    parts = spec.get("parts")
    if isinstance(parts, int):
        parts = (parts,)
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise InvalidFamilyParams("bio_multipartite needs at least two classes of size >= 1")
    return tuple(parts)


def _odd_k(spec: FamilySpec) -> int:
    k = spec.get("k", 5)
    if k % 2 == 0:
        raise InvalidFamilyParams(f"k must be odd, got {k}")
    return k


# ---------------------------------------------------------------- formulas


def formula(name: str, n: int) -> int:
    """Closed-form values: g (trc of bioriented cycles), trc_dicycle, strc_bio_path, rvc_dicycle."""
    if name == "g":
        if n < 3:
            raise OutOfRange("g(n) needs n >= 3")
        if n in (3, 5):
            return n - 2
        if n in (4, 6, 7, 8, 9, 10, 12):
            return n - 1
        return n
    if name == "trc_dicycle":
        if n < 3:
            raise OutOfRange("directed cycles need n >= 3")
        return {3: 3, 4: 6}.get(n, 2 * n)
    if name == "strc_bio_path":
        if n < 2:
            raise OutOfRange("needs n >= 2")
        return 2 * n - 3
    if name == "rvc_dicycle":
        if n < 3:
            raise OutOfRange("directed cycles need n >= 3")
        return n - 2 if n in (3, 4) else n
    raise OutOfRange(f"unknown formula {name!r}")


# ---------------------------------------------------------------- schemes


def _symmetric(edge_colors: Mapping[tuple[int, int], object]) -> dict[tuple[int, int], object]:
    out = {}
    for (x, y), col in edge_colors.items():
        out[(x, y)] = col
        out[(y, x)] = col
    return out


def dicycle_coloring(n: int) -> Coloring:
    if n == 3:
        arcs = {(i, (i + 1) % 3): i for i in range(3)}
        verts = {i: (i + 1) % 3 for i in range(3)}
        return Coloring.from_labels("total", arcs, verts)
    if n >= 5:
        arcs = {(i, (i + 1) % n): ("a", i) for i in range(n)}
        verts = {i: ("v", i) for i in range(n)}
        return Coloring.from_labels("total", arcs, verts)
    raise NoSchemeForFamily("no explicit scheme for the directed 4-cycle")


def bio_path_coloring(n: int) -> Coloring:
    if n < 2:
        raise NoSchemeForFamily("bio_path scheme needs n >= 2")
    edges = {(i, i + 1): ("e", i) for i in range(n - 1)}
    verts = {i: ("v", i) for i in range(1, n - 1)}
    # end vertices are never internal; reuse any color already present
    end = ("v", 1) if n >= 3 else ("e", 0)
    verts[0] = verts[n - 1] = end
    return Coloring.from_labels("total", _symmetric(edges), verts)


def hub_coloring(D: Digraph, hub: int) -> Coloring:
    """In-arcs of the hub 1, out-arcs 2, hub 3; every other element reuses 1 (arcs) or 3 (vertices)."""
    arcs = {}
    for x, y in D.arcs:
        if y == hub:
            arcs[(x, y)] = 1
        elif x == hub:
            arcs[(x, y)] = 2
        else:
            arcs[(x, y)] = 1
    return Coloring.from_labels("total", arcs, {x: 3 for x in range(D.n)})


def multipartite_coloring(parts) -> Coloring:
    cls = multipartite_classes(parts)
    D = bio_multipartite(parts)
    arcs = {(x, y): 1 if cls[x] < cls[y] else 2 for x, y in D.arcs}
    return Coloring.from_labels("total", arcs, {x: 3 for x in range(D.n)})


# one bioriented 5-cycle x_0..x_4: edge x_ix_{i+1} and vertex x_i colors
_FIVE_CYCLE_EDGES = (1, 2, 3, 1, 2)
_FIVE_CYCLE_VERTICES = (3, 3, 1, 2, 3)


def _petersen_base() -> tuple[dict[tuple[int, int], int], dict[int, int]]:
    edges: dict[tuple[int, int], int] = {}
    verts: dict[int, int] = {}
    # the inner cycle v_1v_3v_0v_2v_4 is started so that v_0 gets vertex color 1,
    # which the expanded scheme below gives to every clique vertex
    for cycle in ([0, 1, 2, 3, 4], [6, 8, 5, 7, 9]):
        for i, x in enumerate(cycle):
            edges[(x, cycle[(i + 1) % 5])] = _FIVE_CYCLE_EDGES[i]
            verts[x] = _FIVE_CYCLE_VERTICES[i]
    for i in range(5):
        edges[(i, 5 + i)] = 4
    return _symmetric(edges), verts


def petersen_coloring() -> Coloring:
    arcs, verts = _petersen_base()
    return Coloring.from_labels("total", arcs, verts)


def petersen_expanded_coloring(n: int) -> Coloring:
    base_arcs, base_verts = _petersen_base()
    v0 = 5
    relabel, clique = expansion_labels(10, v0, n - 9)
    in_clique = set(clique)
    arcs = {}
    D = petersen_expanded(n)
    back = {new: old for old, new in relabel.items()}
    for x, y in D.arcs:
        if x in in_clique and y in in_clique:
            arcs[(x, y)] = 1
        elif x in in_clique:
            arcs[(x, y)] = base_arcs[(v0, back[y])]
        elif y in in_clique:
            arcs[(x, y)] = base_arcs[(back[x], v0)]
        else:
            arcs[(x, y)] = base_arcs[(back[x], back[y])]
    verts = {x: 1 if x in in_clique else base_verts[back[x]] for x in range(D.n)}
    return Coloring.from_labels("total", arcs, verts)


def hs_coloring(s: int) -> Coloring:
    if s < 13:
        raise InvalidFamilyParams("hs needs s >= 13")
    u = lambda i: hs_vertex(s, "u", i)
    v = lambda i: hs_vertex(s, "v", i)
    w = lambda i: hs_vertex(s, "w", i)
    z = lambda i: hs_vertex(s, "z", i)
    col = lambda i: (i - 1) % s + 1
    edges: dict[tuple[int, int], int] = {}
    verts: dict[int, int] = {}
    for i in range(1, s + 1):
        verts[u(i)] = col(i)
        edges[(w(i), z(i + 4))] = col(i)
        edges[(u(i), v(i))] = col(i + 1)
        verts[v(i)] = col(i + 2)
        edges[(v(i), w(i))] = col(i + 3)
        edges[(u(i + 1), z(i))] = col(i + 3)
        verts[w(i)] = col(i + 4)
        verts[z(i)] = col(i + 4)
        edges[(w(i), u(i))] = col(i + 5)
        edges[(u(i), z(i))] = col(i + 5)
        edges[(v(i), z(i))] = col(i + 5)
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            banned = {col(i + t) for t in range(6)} | {col(j + t) for t in range(6)}
            edges[(u(i), u(j))] = min(c for c in range(1, s + 1) if c not in banned)
    return Coloring.from_labels("total", _symmetric(edges), verts)


def fs_coloring(s: int) -> Coloring:
    arcs = {}
    for i in range(s):
        for j in range(s):
            if i != j:
                arcs[(i, j)] = 1
        arcs[(i, s + i)] = 2
        arcs[(s + i, i)] = 3
    return Coloring.from_labels("arc", arcs)


def coloring_for(spec: FamilySpec) -> Coloring:
    from . import tournaments

    name = spec.name
    if name == "dicycle":
        return dicycle_coloring(spec.get("n", 3))
    if name == "bio_path":
        return bio_path_coloring(spec.get("n", 2))
    if name == "bio_star":
        n = spec.get("n", 2)
        return hub_coloring(bio_star(n), 0)
    if name == "bio_wheel":
        n = spec.get("n", 4)
        return hub_coloring(bio_wheel(n), 0)
    if name == "bio_multipartite":
        parts = _parts(spec)
        if max(parts) < 2:
            raise NoSchemeForFamily("multipartite scheme needs some class of size >= 2")
        return multipartite_coloring(parts)
    if name == "petersen":
        return petersen_coloring()
    if name == "petersen_expanded":
        return petersen_expanded_coloring(spec.get("n", 11))
    if name == "tournament_T4":
        return tournaments.t4_coloring()
    if name == "tournament_T53":
        return tournaments.t53_coloring()
    if name == "tournament_TNk":
        return tournaments.tnk_coloring(_odd_k(spec))
    if name == "tournament_Tnk":
        return tournaments.tournament_Tnk(spec.get("n", 4), _odd_k(spec))[1]
    if name == "hs":
        return hs_coloring(spec.get("s", 13))
    if name == "fs":
        return fs_coloring(spec.get("s", 2))
    raise NoSchemeForFamily(f"no explicit coloring scheme for {name}")


# ---------------------------------------------------------------- dedicated checks


def length_two_paths(D: Digraph) -> dict[tuple[int, int], list[int]]:
    """Middle vertices of the length-2 paths between each pair at distance 2."""
    dist = distances(D).dist
    out = {}
    for x in range(D.n):
        for y in range(D.n):
            if dist[x][y] == 2:
                out[(x, y)] = [z for z in D.out_neighbors(x) if D.has_arc(z, y)]
    return out


def unique_length_two_paths(D: Digraph) -> bool:
    return all(len(mids) == 1 for mids in length_two_paths(D).values())


def three_color_distance_two_search(D: Digraph, colors: int = 3):
    """Backtrack for a total coloring with ``colors`` colors in which every pair at
    distance 2 has a length-2 path whose two arcs and middle vertex get distinct colors.

    Returns (coloring or None, nodes expanded). Valid only for digraphs of
    diameter 2 whose length-2 paths are unique, since then that requirement is
    exactly total rainbow connection.
    """
    elements: list[tuple[str, object]] = [("v", x) for x in range(D.n)]
    elements += [("a", a) for a in D.sorted_arcs()]
    index = {e: i for i, e in enumerate(elements)}
    triples = []
    for (x, y), mids in length_two_paths(D).items():
        if len(mids) != 1:
            raise ValueError("length-2 paths are not unique")
        z = mids[0]
        triples.append((index[("a", (x, z))], index[("v", z)], index[("a", (z, y))]))
    # each constraint is checked once its last element is assigned
    closing: list[list[tuple[int, int, int]]] = [[] for _ in elements]
    for t in triples:
        closing[max(t)].append(t)
    color = [-1] * len(elements)
    nodes = 0

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == len(elements):
            return True
        nodes += 1
        for c in range(min(used + 1, colors)):
            color[i] = c
            if all(len({color[a], color[b], color[e]}) == 3 for a, b, e in closing[i]):
                if rec(i + 1, max(used, c + 1)):
                    return True
        color[i] = -1
        return False

    if not rec(0, 0):
        return None, nodes
    arcs = {obj: color[i] for i, (tag, obj) in enumerate(elements) if tag == "a"}
    verts = {obj: color[i] for i, (tag, obj) in enumerate(elements) if tag == "v"}
    return Coloring.from_labels("total", arcs, verts), nodes


def hs_premises(s: int) -> list[tuple[int, tuple[int, int], list[list[int]]]]:
    """For i = 2..s: the pair the lower-bound argument uses and all its geodesics in hs(s)."""
    from .solver import geodesics

    D = hs(s)
    dist = distances(D).dist
    out = []
    for i in range(2, s + 1):
        if i in (5, 6):
            pair = (hs_vertex(s, "v", 1), hs_vertex(s, "w", i))
        elif i in (s - 4, s - 3):
            pair = (hs_vertex(s, "w", 1), hs_vertex(s, "v", i))
        else:
            pair = (hs_vertex(s, "w", 1), hs_vertex(s, "w", i))
        out.append((i, pair, list(geodesics(D, dist, *pair))))
    return out


def hs_premises_hold(s: int) -> bool:
    for i, (x, y), geos in hs_premises(s):
        if len(geos) != 1:
            return False
        inner = geos[0][1:-1]
        if inner != [hs_vertex(s, "u", 1), hs_vertex(s, "u", i)]:
            return False
    return True


def multipartite_profiles(max_n: int):
    """Class-size profiles (non-increasing, at least two classes, some class >= 2) with n <= max_n."""

    def parts(total, largest):
        if total == 0:
            yield ()
            return
        for p in range(min(total, largest), 0, -1):
            for rest in parts(total - p, p):
                yield (p,) + rest

    for n in range(3, max_n + 1):
        for prof in parts(n, n):
            if len(prof) >= 2 and prof[0] >= 2:
                yield prof

