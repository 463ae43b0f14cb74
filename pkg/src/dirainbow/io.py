"""Line-oriented text formats for digraphs and colorings.

Digraph file::

    n 4
    a 0 1      # arc
    e 1 2      # undirected edge, both arcs

Coloring file::

    colors 3
    v 0 2
    a 0 1 0

The domain of a coloring is read off its records: ``a`` lines only give an
arc coloring, ``v`` lines only a vertex coloring, both a total coloring.
``#`` starts a comment anywhere on a line. Vertex tokens may be arbitrary
labels; when every label is an integer in 0..n-1 they are used as ids,
otherwise labels are numbered by first appearance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring
from .digraph import Digraph, build
from .errors import InvalidDigraph, ParseError


@dataclass(frozen=True)
class ParsedDigraph:
    digraph: Digraph
    labels: tuple[str, ...]  # labels[id] is the label used in the file

    def id_of(self, label: str) -> int:
        return self.labels.index(label)


def _records(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield line_no, body


def _label_map(labels: list[tuple[int, str]], n: int) -> tuple[dict[str, int], tuple[str, ...]]:
    """``labels`` holds (line number, token) in file order."""
    if all(t.isdigit() and int(t) < n for _, t in labels):
        ids = {t: int(t) for _, t in labels}
        return ids, tuple(str(i) for i in range(n))
    ids: dict[str, int] = {}
    for line_no, t in labels:
        ids.setdefault(t, len(ids))
        if len(ids) > n:
            raise ParseError(line_no, f"more than n = {n} distinct vertex labels")
    names = [None] * n
    for t, i in ids.items():
        names[i] = t
    # vertices that never appear keep their numeric id as label
    return ids, tuple(x if x is not None else str(i) for i, x in enumerate(names))


def parse_digraph(text: str) -> ParsedDigraph:
    n = None
    decls: list[tuple[int, str, str, str]] = []
    last = 0
    for line_no, tok in _records(text):
        last = line_no
        head = tok[0]
        if head == "n":
            if n is not None:
                raise ParseError(line_no, "vertex count declared twice")
            if len(tok) != 2 or not tok[1].isdigit():
                raise ParseError(line_no, "expected 'n <count>'")
            n = int(tok[1])
        elif head in ("a", "e"):
            if n is None:
                raise ParseError(line_no, "arc before 'n' line")
            if len(tok) != 3:
                raise ParseError(line_no, f"expected '{head} <u> <v>'")
            decls.append((line_no, head, tok[1], tok[2]))
        else:
            raise ParseError(line_no, f"unknown record {head!r}")
    if n is None:
        raise ParseError(last + 1, "missing 'n' line")
    ids, labels = _label_map([(d[0], t) for d in decls for t in d[2:]], n)
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, head, a, b in decls:
        u, v = ids[a], ids[b]
        new = [(u, v)] if head == "a" else [(u, v), (v, u)]
        for arc in new:
            if arc in seen:
                raise ParseError(line_no, f"duplicate declaration of arc {arc}")
            seen.add(arc)
            arcs.append(arc)
    try:
        D = build(n, arcs)
    except InvalidDigraph as exc:
        raise ParseError(last, str(exc)) from None
    return ParsedDigraph(D, labels)


def format_digraph(D: Digraph) -> str:
    lines = [f"n {D.n}"]
    lines += [f"a {u} {v}" for u, v in D.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, labels: tuple[str, ...] | None = None) -> Coloring:
    """Parse a coloring; ``labels`` maps the digraph file's vertex labels to ids."""
    ids = {t: i for i, t in enumerate(labels)} if labels is not None else None

    def vertex(tok: str, line_no: int) -> int:
        if ids is not None:
            if tok not in ids:
                raise ParseError(line_no, f"unknown vertex {tok!r}")
            return ids[tok]
        if not tok.isdigit():
            raise ParseError(line_no, f"vertex {tok!r} is not an id")
        return int(tok)

    declared = None
    arc_colors: dict[tuple[int, int], str] = {}
    vertex_colors: dict[int, str] = {}
    for line_no, tok in _records(text):
        head = tok[0]
        if head == "colors":
            if declared is not None or len(tok) != 2 or not tok[1].isdigit():
                raise ParseError(line_no, "expected a single 'colors <k>' line")
            declared = int(tok[1])
        elif head == "v":
            if len(tok) != 3:
                raise ParseError(line_no, "expected 'v <vertex> <color>'")
            x = vertex(tok[1], line_no)
            if x in vertex_colors:
                raise ParseError(line_no, f"vertex {tok[1]} colored twice")
            vertex_colors[x] = tok[2]
        elif head == "a":
            if len(tok) != 4:
                raise ParseError(line_no, "expected 'a <u> <v> <color>'")
            arc = (vertex(tok[1], line_no), vertex(tok[2], line_no))
            if arc in arc_colors:
                raise ParseError(line_no, f"arc {arc} colored twice")
            arc_colors[arc] = tok[3]
        else:
            raise ParseError(line_no, f"unknown record {head!r}")
    if not arc_colors and not vertex_colors:
        raise ParseError(1, "coloring has no entries")
    if arc_colors and vertex_colors:
        domain = "total"
    else:
        domain = "arc" if arc_colors else "vertex"
    numeric = all(t.isdigit() for t in list(arc_colors.values()) + list(vertex_colors.values()))
    if numeric:
        a_ids = {a: int(t) for a, t in arc_colors.items()}
        v_ids = {x: int(t) for x, t in vertex_colors.items()}
        used = set(a_ids.values()) | set(v_ids.values())
        if used == set(range(len(used))):
            c = Coloring(domain, a_ids, v_ids)
        else:
            c = Coloring.from_labels(domain, a_ids, v_ids)
    else:
        c = Coloring.from_labels(domain, arc_colors, vertex_colors)
    if declared is not None and declared != c.color_count:
        raise ParseError(1, f"header says {declared} colors, entries use {c.color_count}")
    return c


def format_coloring(c: Coloring) -> str:
    lines = [f"colors {c.color_count}"]
    lines += [f"v {x} {c.vertex_colors[x]}" for x in sorted(c.vertex_colors)]
    lines += [f"a {u} {v} {c.arc_colors[(u, v)]}" for u, v in sorted(c.arc_colors)]
    return "\n".join(lines) + "\n"

