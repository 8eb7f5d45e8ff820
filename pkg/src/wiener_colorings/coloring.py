"""Surjective vertex colorings, their types and Wiener index, and color swaps."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import DomainError, ParseError, SurjectivityError
from .graph import Graph, VertexSet, graph_from_spec

TypeTuple = tuple[int, ...]


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors ``1..k`` to the vertices of ``graph``; always surjective."""

    graph: Graph
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.graph.n:
            raise DomainError(f"expected {self.graph.n} colors, got {len(colors)}")
        if any(c < 1 or c > self.k for c in colors):
            raise DomainError(f"colors must lie in 1..{self.k}")
        missing = set(range(1, self.k + 1)) - set(colors)
        if missing:
            raise SurjectivityError(f"colors {sorted(missing)} are never used")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def make_coloring(g: Graph, colors: Sequence[int]) -> Coloring:
    colors = tuple(int(c) for c in colors)
    if len(colors) != g.n:
        raise DomainError(f"expected {g.n} colors, got {len(colors)}")
    if any(c < 1 for c in colors):
        raise DomainError("color ids must be positive")
    return Coloring(g, colors, max(colors))


def as_type(parts: Iterable[int]) -> TypeTuple:
    """Validate and sort a tuple of class sizes."""
    t = tuple(sorted(int(p) for p in parts))
    if not t:
        raise DomainError("a type needs at least one part")
    if t[0] < 1:
        raise DomainError(f"type parts must be positive, got {t}")
    return t


def type_of(f: Coloring) -> TypeTuple:
    return tuple(sorted(Counter(f.colors).values()))


def color_classes(f: Coloring) -> list[VertexSet]:
    buckets: list[set[int]] = [set() for _ in range(f.k)]
    for v, c in enumerate(f.colors):
        buckets[c - 1].add(v)
    return [frozenset(b) for b in buckets]


def wiener_colors(dist: np.ndarray, colors: Sequence[int]) -> int:
    c = np.asarray(colors)
    same = c[:, None] == c[None, :]
    return int(dist[same].sum()) // 2


def wiener_coloring(f: Coloring) -> int:
    return wiener_colors(f.graph.dist, f.colors)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} outside 0..{g.n - 1}")


def swap(f: Coloring, u: int, v: int) -> Coloring:
    _check_vertex(f.graph, u)
    _check_vertex(f.graph, v)
    colors = list(f.colors)
    colors[u], colors[v] = colors[v], colors[u]
    return Coloring(f.graph, tuple(colors), f.k)


def swap_delta(f: Coloring, u: int, v: int) -> int:
    """``W(swap(f, u, v)) - W(f)`` from the two distance rows, for any graph."""
    _check_vertex(f.graph, u)
    _check_vertex(f.graph, v)
    a, b = f.colors[u], f.colors[v]
    if a == b:
        return 0
    du, dv = f.graph.dist[u], f.graph.dist[v]
    delta = 0
    for x, c in enumerate(f.colors):
        if c == a and x != u:
            delta += int(dv[x] - du[x])
        elif c == b and x != v:
            delta += int(du[x] - dv[x])
    return delta


def is_local_weak_max(f: Coloring) -> bool:
    return all(swap_delta(f, u, v) <= 0 for u, v in f.graph.sorted_edges())


def relabel_first_occurrence(colors: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen) + 1) for c in colors)


def coloring_to_dict(f: Coloring) -> dict[str, Any]:
    return {"graph": f.graph.shorthand(), "k": f.k, "colors": list(f.colors)}


def coloring_from_dict(obj: dict[str, Any]) -> Coloring:
    try:
        graph_spec, colors = obj["graph"], obj["colors"]
    except (KeyError, TypeError):
        raise ParseError("coloring object needs 'graph' and 'colors'") from None
    g = graph_from_spec(graph_spec)
    f = make_coloring(g, colors)
    if "k" in obj and int(obj["k"]) != f.k:
        raise SurjectivityError(f"declared k={obj['k']} but colors use 1..{f.k}")
    return f


def coloring_to_json(f: Coloring) -> str:
    return json.dumps(coloring_to_dict(f), separators=(", ", ": "))


def coloring_from_json(text: str) -> Coloring:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return coloring_from_dict(obj)
