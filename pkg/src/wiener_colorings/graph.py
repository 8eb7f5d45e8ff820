"""Graphs with precomputed geodesic distances and the Wiener index of vertex sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import ConnectivityError, DomainError, InvalidSizeError, ParseError

# Upper bound on vertex count; the distance matrix is stored densely.
MAX_VERTICES = 4096

Edge = tuple[int, int]
VertexSet = frozenset[int]


@dataclass(frozen=True, eq=False)
class Graph:
    """A finite simple connected graph on vertices ``0..n-1``.

    ``kind`` is ``"path"`` or ``"cycle"`` when the edge set is exactly
    ``{i, i+1}`` (plus ``{n-1, 0}`` for cycles), otherwise ``"general"``.
    """

    n: int
    kind: str
    edges: frozenset[Edge]
    dist: np.ndarray = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.kind == other.kind and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.kind, self.edges))

    @property
    def diameter(self) -> int:
        return int(self.dist.max()) if self.n else 0

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def shorthand(self) -> str:
        """``path:<n>`` / ``cycle:<n>``, or the text format for general graphs."""
        if self.kind in ("path", "cycle"):
            return f"{self.kind}:{self.n}"
        return to_text(self)


def _check_size(n: int, minimum: int, max_vertices: int | None) -> None:
    cap = MAX_VERTICES if max_vertices is None else max_vertices
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InvalidSizeError(f"vertex count must be an integer, got {n!r}")
    if n < minimum:
        raise InvalidSizeError(f"need at least {minimum} vertices, got {n}")
    if n > cap:
        raise InvalidSizeError(f"{n} vertices exceeds the configured cap of {cap}")


def _freeze(dist: np.ndarray) -> np.ndarray:
    dist = np.ascontiguousarray(dist, dtype=np.int64)
    dist.setflags(write=False)
    return dist


def _path_edges(n: int) -> frozenset[Edge]:
    return frozenset((i, i + 1) for i in range(n - 1))


def _cycle_edges(n: int) -> frozenset[Edge]:
    return frozenset(tuple(sorted((i, (i + 1) % n))) for i in range(n))


def build_path(n: int, *, max_vertices: int | None = None) -> Graph:
    _check_size(n, 1, max_vertices)
    idx = np.arange(n)
    dist = np.abs(idx[:, None] - idx[None, :])
    return Graph(int(n), "path", _path_edges(n), _freeze(dist))


def build_cycle(n: int, *, max_vertices: int | None = None) -> Graph:
    _check_size(n, 3, max_vertices)
    idx = np.arange(n)
    diff = np.abs(idx[:, None] - idx[None, :])
    dist = np.minimum(diff, n - diff)
    return Graph(int(n), "cycle", _cycle_edges(n), _freeze(dist))


def bfs_distances(n: int, edges: Iterable[Edge]) -> np.ndarray:
    """All-pairs hop distances; raises ``ConnectivityError`` if disconnected."""
    edges = list(edges)
    if n == 1:
        return np.zeros((1, 1), dtype=np.int64)
    rows = [u for u, v in edges] + [v for u, v in edges]
    cols = [v for u, v in edges] + [u for u, v in edges]
    adj = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n)).tocsr()
    d = shortest_path(adj, method="D", directed=False, unweighted=True)
    if np.isinf(d).any():
        raise ConnectivityError("graph is not connected")
    return d.astype(np.int64)


def graph_from_edges(n: int, edges: Iterable[Edge], *, max_vertices: int | None = None) -> Graph:
    """Build a graph from an edge list, detecting path/cycle structure."""
    _check_size(n, 1, max_vertices)
    normalized: set[Edge] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in normalized:
            raise DomainError(f"duplicate edge {e}")
        normalized.add(e)
    frozen = frozenset(normalized)
    if frozen == _path_edges(n):
        return build_path(n, max_vertices=max_vertices)
    if n >= 3 and frozen == _cycle_edges(n):
        return build_cycle(n, max_vertices=max_vertices)
    return Graph(int(n), "general", frozen, _freeze(bfs_distances(n, frozen)))


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", line) from None


def parse_graph(text: str, *, max_vertices: int | None = None) -> Graph:
    """Parse the one-record graph text format.

    First line is ``path <n>``, ``cycle <n>`` or ``general <n> <m>``; a
    ``general`` header is followed by ``m`` lines ``<u> <v>``.
    """
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, toks) for no, toks in lines if toks]
    if not lines:
        raise ParseError("empty graph description", 1)
    no, head = lines[0]
    kind = head[0]
    if kind in ("path", "cycle"):
        if len(head) != 2:
            raise ParseError(f"expected '{kind} <n>'", no)
        if len(lines) > 1:
            raise ParseError("unexpected content after header", lines[1][0])
        n = _parse_int(head[1], no, "vertex count")
        builder = build_path if kind == "path" else build_cycle
        return builder(n, max_vertices=max_vertices)
    if kind != "general":
        raise ParseError(f"unknown graph kind {kind!r}", no)
    if len(head) != 3:
        raise ParseError("expected 'general <n> <m>'", no)
    n = _parse_int(head[1], no, "vertex count")
    m = _parse_int(head[2], no, "edge count")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow",
                         body[-1][0] if body else no)
    edges = []
    for line_no, toks in body:
        if len(toks) != 2:
            raise ParseError("expected '<u> <v>'", line_no)
        u = _parse_int(toks[0], line_no, "endpoint")
        v = _parse_int(toks[1], line_no, "endpoint")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge {u} {v}", line_no)
        edges.append((u, v))
    return graph_from_edges(n, edges, max_vertices=max_vertices)


def to_text(g: Graph) -> str:
    if g.kind in ("path", "cycle"):
        return f"{g.kind} {g.n}\n"
    edges = g.sorted_edges()
    out = [f"general {g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def graph_from_spec(spec: str, *, max_vertices: int | None = None) -> Graph:
    """Accept ``path:<n>``, ``cycle:<n>`` or a full graph text record."""
    s = spec.strip()
    for kind, builder in (("path", build_path), ("cycle", build_cycle)):
        prefix = kind + ":"
        if s.startswith(prefix):
            try:
                n = int(s[len(prefix):])
            except ValueError:
                raise ParseError(f"bad graph shorthand {spec!r}") from None
            return builder(n, max_vertices=max_vertices)
    return parse_graph(s, max_vertices=max_vertices)


def vertex_set(g: Graph, members: Iterable[int]) -> VertexSet:
    out = frozenset(int(v) for v in members)
    bad = [v for v in out if not 0 <= v < g.n]
    if bad:
        raise DomainError(f"vertices {sorted(bad)} outside 0..{g.n - 1}")
    return out


def wiener_set(g: Graph, a: Iterable[int]) -> int:
    """Sum of geodesic distances over unordered pairs of ``a``."""
    members = np.fromiter(sorted(vertex_set(g, a)), dtype=np.int64)
    if members.size < 2:
        return 0
    sub = g.dist[np.ix_(members, members)]
    return int(sub.sum()) // 2


def wiener_set_naive(g: Graph, a: Iterable[int]) -> int:
    """Double-loop reference used to cross-check ``wiener_set``."""
    members = sorted(vertex_set(g, a))
    return sum(int(g.dist[u, v]) for u, v in combinations(members, 2))


def distance_degree(g: Graph, v: int) -> tuple[int, ...]:
    row = np.delete(g.dist[v], v)
    return tuple(int(x) for x in np.sort(row))


def is_distance_degree_regular(g: Graph) -> bool:
    first = distance_degree(g, 0)
    return all(distance_degree(g, v) == first for v in range(1, g.n))


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Closed-form automorphism group: dihedral for cycles, reflection for paths.

    General graphs get the trivial group. Each element ``p`` maps vertex
    ``v`` to ``p[v]``.
    """
    n = g.n
    ident = tuple(range(n))
    if g.kind == "cycle":
        rots = [tuple((v + r) % n for v in range(n)) for r in range(n)]
        refl = [tuple((r - v) % n for v in range(n)) for r in range(n)]
        return rots + refl
    if g.kind == "path":
        rev = tuple(n - 1 - v for v in range(n))
        return [ident] if rev == ident else [ident, rev]
    return [ident]
