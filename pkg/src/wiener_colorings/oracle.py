"""Exhaustive ground truth for colorings and vertex sets.

Colorings are streamed in chunks that share a fixed color-array prefix, so
memory stays bounded and the work can be split across processes. Every
chunk is filtered to surjective colorings (optionally of one type) and,
under a quotient, to canonical representatives only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .coloring import Coloring, TypeTuple, as_type, relabel_first_occurrence
from .errors import BudgetError, DomainError
from .graph import Graph, VertexSet, automorphisms, graph_from_spec, wiener_set

QUOTIENTS = ("none", "graph-autos", "graph-autos-and-color-perms")
DEFAULT_BUDGET = 10**8
CHUNK_ROWS = 1 << 16


@dataclass(frozen=True)
class EnumerationScope:
    graph: Graph
    k: int
    type_filter: TypeTuple | None = None
    quotient: str = "none"

    def __post_init__(self) -> None:
        n = self.graph.n
        if not 1 <= self.k <= n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={n}")
        if self.quotient not in QUOTIENTS:
            raise DomainError(f"unknown quotient {self.quotient!r}; choose from {', '.join(QUOTIENTS)}")
        if self.type_filter is not None:
            t = as_type(self.type_filter)
            if len(t) != self.k or sum(t) != n:
                raise DomainError(f"type {t} is not a {self.k}-part type of {n}")
            object.__setattr__(self, "type_filter", t)

    @property
    def raw_states(self) -> int:
        return self.k**self.graph.n


@dataclass(frozen=True)
class Chunk:
    """Surviving colorings of one prefix block, with their Wiener indices and types."""

    colors: np.ndarray
    wiener: np.ndarray
    type_codes: np.ndarray


@dataclass(frozen=True)
class MaximizerClasses:
    scope: EnumerationScope
    lwm: frozenset[tuple[int, ...]]
    wm: frozenset[tuple[int, ...]]
    m: frozenset[tuple[int, ...]]
    type_max: dict[TypeTuple, int] = field(compare=False)

    def __iter__(self):
        return iter((self.lwm, self.wm, self.m))

    def colorings(self, which: str = "wm") -> list[Coloring]:
        members = {"lwm": self.lwm, "wm": self.wm, "m": self.m}[which]
        return [Coloring(self.scope.graph, c, self.scope.k) for c in sorted(members)]


def check_budget(raw: int, budget: int | None) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if raw > limit:
        raise BudgetError(f"{raw} raw colorings exceeds the budget of {limit}; raise --budget to override")


def group_perms(graph: Graph) -> np.ndarray:
    return np.array([list(p) for p in automorphisms(graph)], dtype=np.int64).reshape(-1, graph.n)


def type_code(counts: Sequence[int], n: int) -> int:
    code = 0
    for c in counts:
        code = code * (n + 1) + int(c)
    return code


def decode_type(code: int, n: int, k: int) -> TypeTuple:
    parts = []
    for _ in range(k):
        code, c = divmod(code, n + 1)
        parts.append(c)
    return tuple(reversed(parts))


def _prefix_length(n: int, k: int, chunk_rows: int) -> int:
    if k == 1:
        return 0
    free = int(math.floor(math.log(chunk_rows, k) + 1e-9))
    return max(0, n - free)


def prefixes(n: int, k: int, chunk_rows: int = CHUNK_ROWS) -> list[tuple[int, ...]]:
    """Disjoint color-array prefixes covering every coloring, in lexicographic order."""
    p = _prefix_length(n, k, chunk_rows)
    return list(product(range(1, k + 1), repeat=p))


def _type_codes(colors: np.ndarray, n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    counts = np.stack([(colors == c).sum(axis=1) for c in range(1, k + 1)], axis=1)
    surjective = counts.min(axis=1) > 0
    counts = np.sort(counts, axis=1)
    code = np.zeros(colors.shape[0], dtype=np.int64)
    for j in range(k):
        code = code * (n + 1) + counts[:, j]
    return code, surjective


def scan_prefix(scope: EnumerationScope, prefix: tuple[int, ...], perms: np.ndarray | None = None) -> Chunk:
    g, k, n = scope.graph, scope.k, scope.graph.n
    colors = kernels.all_colorings(n, k, prefix)
    codes, keep = _type_codes(colors, n, k)
    if scope.type_filter is not None:
        keep &= codes == type_code(scope.type_filter, n)
    colors, codes = colors[keep], codes[keep]
    if scope.quotient != "none" and len(colors):
        if perms is None:
            perms = group_perms(g)
        relabel = scope.quotient == "graph-autos-and-color-perms"
        canon = kernels.canonical_codes(colors, perms, k, relabel)
        rep = canon == kernels.encode(colors, k)
        colors, codes = colors[rep], codes[rep]
    colors = np.ascontiguousarray(colors)
    w = kernels.wiener_many(colors, _dist(g))
    return Chunk(colors, w, codes)


def _dist(g: Graph) -> np.ndarray:
    return np.ascontiguousarray(g.dist, dtype=np.int64)


def _edges(g: Graph) -> np.ndarray:
    return np.array(g.sorted_edges(), dtype=np.int64).reshape(-1, 2)


def scan(scope: EnumerationScope, *, budget: int | None = None) -> Iterator[Chunk]:
    check_budget(scope.raw_states, budget)
    perms = group_perms(scope.graph) if scope.quotient != "none" else None
    for prefix in prefixes(scope.graph.n, scope.k):
        chunk = scan_prefix(scope, prefix, perms)
        if len(chunk.colors):
            yield chunk


def enumerate_colorings(scope: EnumerationScope, *, budget: int | None = None) -> Iterator[Coloring]:
    """Surjective colorings in lexicographic order, one per class of the chosen quotient."""
    for chunk in scan(scope, budget=budget):
        for row in chunk.colors.tolist():
            yield Coloring(scope.graph, tuple(row), scope.k)


def count_colorings(scope: EnumerationScope, *, budget: int | None = None) -> int:
    return sum(len(c.colors) for c in scan(scope, budget=budget))


def orbit(f: Coloring, quotient: str) -> set[tuple[int, ...]]:
    """Every color array equivalent to ``f`` under ``quotient``."""
    if quotient not in QUOTIENTS:
        raise DomainError(f"unknown quotient {quotient!r}")
    if quotient == "none":
        return {f.colors}
    images = {tuple(f.colors[p[v]] for v in range(len(p))) for p in automorphisms(f.graph)}
    if quotient == "graph-autos":
        return images
    out = set()
    for sigma in permutations(range(1, f.k + 1)):
        out.update(tuple(sigma[c - 1] for c in img) for img in images)
    return out


def canonical_form(f: Coloring, quotient: str) -> tuple[int, ...]:
    """Lexicographically least array after automorphism, then optional relabeling."""
    if quotient == "none":
        return f.colors
    images = [tuple(f.colors[p[v]] for v in range(len(p))) for p in automorphisms(f.graph)]
    if quotient == "graph-autos-and-color-perms":
        images = [relabel_first_occurrence(img) for img in images]
    return min(images)


def brute_force_set_maximizers(g: Graph, m: int) -> list[VertexSet]:
    """All size-``m`` vertex sets of greatest Wiener index, in lexicographic order."""
    if not 0 <= m <= g.n:
        raise DomainError(f"need 0 <= m <= {g.n}, got {m}")
    best, out = -1, []
    for a in combinations(range(g.n), m):
        w = wiener_set(g, a)
        if w > best:
            best, out = w, [a]
        elif w == best:
            out.append(a)
    return [frozenset(a) for a in out]


def type_maxima(scope: EnumerationScope, *, budget: int | None = None) -> dict[TypeTuple, int]:
    """Largest Wiener index of each realized type, over the whole scope (type filter ignored)."""
    full = EnumerationScope(scope.graph, scope.k, None, scope.quotient)
    return dict(_type_maxima(full, budget))


def _type_maxima(scope: EnumerationScope, budget: int | None) -> dict[TypeTuple, int]:
    best: dict[int, int] = {}
    for chunk in scan(scope, budget=budget):
        order = np.lexsort((chunk.wiener, chunk.type_codes))
        codes, w = chunk.type_codes[order], chunk.wiener[order]
        last = np.r_[codes[1:] != codes[:-1], True]
        for code, value in zip(codes[last].tolist(), w[last].tolist()):
            if value > best.get(code, -1):
                best[code] = value
    n, k = scope.graph.n, scope.k
    return {decode_type(c, n, k): v for c, v in sorted(best.items())}


@lru_cache(maxsize=256)
def cached_type_maxima(graph_spec: str, k: int) -> tuple[tuple[TypeTuple, int], ...]:
    """Per-type maxima for a shorthand graph, reduced by the full symmetry group."""
    g = graph_from_spec(graph_spec)
    scope = EnumerationScope(g, k, quotient="graph-autos-and-color-perms" if g.kind != "general" else "none")
    return tuple(sorted(_type_maxima(scope, None).items()))


def brute_force_classes(scope: EnumerationScope, *, budget: int | None = None) -> MaximizerClasses:
    """LWM via every edge swap, WM via per-type maxima, M via the global maximum."""
    check_budget(scope.raw_states, budget)
    g = scope.graph
    maxima = type_maxima(scope, budget=budget)
    top = max(maxima.values())
    n, k = g.n, scope.k
    code_max = {type_code(t, n): v for t, v in maxima.items()}
    dist, edges = _dist(g), _edges(g)
    lwm, wm, m = [], [], []
    for chunk in scan(scope, budget=budget):
        local = kernels.local_max_many(chunk.colors, dist, edges)
        per_type = np.array([code_max[c] for c in chunk.type_codes.tolist()], dtype=np.int64)
        rows = chunk.colors.tolist()
        lwm.extend(tuple(rows[i]) for i in np.flatnonzero(local))
        wm.extend(tuple(rows[i]) for i in np.flatnonzero(chunk.wiener == per_type))
        m.extend(tuple(rows[i]) for i in np.flatnonzero(chunk.wiener == top))
    if scope.type_filter is not None:
        maxima = {scope.type_filter: maxima[scope.type_filter]}
    return MaximizerClasses(scope, frozenset(lwm), frozenset(wm), frozenset(m), maxima)
