"""Colorings of arcs, vertices or both, and the six connection parameters."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Mapping

from .digraph import Arc, Digraph
from .errors import InvalidColoring


class ParamKind(enum.Enum):
    RC = "RC"
    SRC = "SRC"
    RVC = "RVC"
    SRVC = "SRVC"
    TRC = "TRC"
    STRC = "STRC"

    @property
    def strong(self) -> bool:
        """Whether a rainbow geodesic (rather than any path) is required."""
        return self.value.startswith("S")

    @property
    def uses_arcs(self) -> bool:
        return self in (ParamKind.RC, ParamKind.SRC, ParamKind.TRC, ParamKind.STRC)

    @property
    def uses_vertices(self) -> bool:
        return self in (ParamKind.RVC, ParamKind.SRVC, ParamKind.TRC, ParamKind.STRC)

    @property
    def domain(self) -> str:
        if self.uses_arcs and self.uses_vertices:
            return "total"
        return "arc" if self.uses_arcs else "vertex"

    @property
    def weak(self) -> "ParamKind":
        return ParamKind(self.value[1:]) if self.strong else self

    @property
    def strengthened(self) -> "ParamKind":
        return self if self.strong else ParamKind("S" + self.value)

    @classmethod
    def parse(cls, text: str) -> "ParamKind":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown parameter kind {text!r}") from None


DOMAINS = ("arc", "vertex", "total")


@dataclass(frozen=True)
class Coloring:
    """Color ids are 0..color_count-1 and every id is used.

    Use ``Coloring.from_labels`` to build one from arbitrary color labels.
    """

    domain: str
    arc_colors: Mapping[Arc, int] = field(default_factory=dict)
    vertex_colors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.domain not in DOMAINS:
            raise InvalidColoring(f"unknown domain {self.domain!r}")
        if self.domain == "arc" and self.vertex_colors:
            raise InvalidColoring("arc coloring carries vertex colors")
        if self.domain == "vertex" and self.arc_colors:
            raise InvalidColoring("vertex coloring carries arc colors")
        object.__setattr__(self, "arc_colors", dict(self.arc_colors))
        object.__setattr__(self, "vertex_colors", dict(self.vertex_colors))
        used = set(self.arc_colors.values()) | set(self.vertex_colors.values())
        if used != set(range(len(used))):
            raise InvalidColoring(f"color ids must be 0..k-1, all used; got {sorted(used)}")

    @property
    def color_count(self) -> int:
        return len(set(self.arc_colors.values()) | set(self.vertex_colors.values()))

    @classmethod
    def from_labels(
        cls,
        domain: str,
        arc_colors: Mapping[Arc, Hashable] | None = None,
        vertex_colors: Mapping[int, Hashable] | None = None,
    ) -> "Coloring":
        """Compact arbitrary labels to ids by first appearance (vertices by id, then sorted arcs)."""
        arc_colors = dict(arc_colors or {})
        vertex_colors = dict(vertex_colors or {})
        ids: dict[Hashable, int] = {}
        for v in sorted(vertex_colors):
            ids.setdefault(vertex_colors[v], len(ids))
        for a in sorted(arc_colors):
            ids.setdefault(arc_colors[a], len(ids))
        return cls(
            domain,
            {a: ids[c] for a, c in arc_colors.items()},
            {v: ids[c] for v, c in vertex_colors.items()},
        )

    def covers(self, D: Digraph, kind: ParamKind) -> bool:
        if kind.uses_arcs and any(a not in self.arc_colors for a in D.arcs):
            return False
        if kind.uses_vertices and any(v not in self.vertex_colors for v in range(D.n)):
            return False
        return True

    def restricted(self, kind: ParamKind) -> "Coloring":
        """Drop the half of a total coloring that ``kind`` does not look at."""
        if kind.domain == "total" or kind.domain == self.domain:
            return self
        if kind.domain == "arc":
            return Coloring.from_labels("arc", self.arc_colors)
        return Coloring.from_labels("vertex", vertex_colors=self.vertex_colors)

    def colors_on(self, kind: ParamKind, path) -> list[int]:
        out: list[int] = []
        if kind.uses_arcs:
            out.extend(self.arc_colors[(path[i], path[i + 1])] for i in range(len(path) - 1))
        if kind.uses_vertices:
            out.extend(self.vertex_colors[x] for x in path[1:-1])
        return out


def combine(arc_part: Coloring, vertex_part: Coloring) -> Coloring:
    """Total coloring using the arc colors of one and the vertex colors of the other on disjoint palettes."""
    shift = arc_part.color_count
    return Coloring.from_labels(
        "total",
        dict(arc_part.arc_colors),
        {v: shift + c for v, c in vertex_part.vertex_colors.items()},
    )
