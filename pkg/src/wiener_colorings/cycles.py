"""Set maximizers and weak maximizers on cycles.

Covers balanced / weakly balanced sets with respect to equitable arc
partitions, good and almost good sets, the splitting construction that
partitions the cycle into good sets of prescribed sizes, and the classwise
weak-maximizer test for colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .coloring import Coloring, TypeTuple, as_type
from .errors import DomainError, WienerError
from .graph import VertexSet, build_cycle


@dataclass(frozen=True)
class ArcPartition:
    """Two complementary arcs; ``first`` starts at ``cut1`` and ``second`` at ``cut2``."""

    cut1: int
    cut2: int
    first: VertexSet
    second: VertexSet

    @property
    def blocks(self) -> tuple[VertexSet, VertexSet]:
        return self.first, self.second


def _check_n(n: int) -> None:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")


def _members(n: int, a: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(v) for v in a)
    if any(not 0 <= v < n for v in out):
        raise DomainError(f"vertex set {sorted(out)} not contained in 0..{n - 1}")
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _arc(n: int, start: int, length: int) -> list[int]:
    return [(start + i) % n for i in range(length)]


def equitable_arc_partitions(n: int) -> Iterator[ArcPartition]:
    """Each unordered equitable split of ``C_n`` into two arcs, exactly once."""
    _check_n(n)
    small = n // 2
    count = n // 2 if n % 2 == 0 else n
    for s in range(count):
        first = _arc(n, s, small)
        second = _arc(n, s + small, n - small)
        yield ArcPartition(s, (s + small) % n, frozenset(first), frozenset(second))


@lru_cache(maxsize=None)
def _arc_masks(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((_mask(p.first), _mask(p.second)) for p in equitable_arc_partitions(n))


def _split_counts(n: int, mask: int) -> Iterator[tuple[int, int]]:
    for m1, m2 in _arc_masks(n):
        yield (mask & m1).bit_count(), (mask & m2).bit_count()


@lru_cache(maxsize=1 << 16)
def _balanced(n: int, mask: int) -> bool:
    return all(abs(c1 - c2) <= 1 for c1, c2 in _split_counts(n, mask))


@lru_cache(maxsize=1 << 16)
def _weakly_balanced(n: int, mask: int) -> bool:
    # the first arc has n // 2 vertices, so it is never the strictly larger one
    odd = n % 2 == 1
    for c1, c2 in _split_counts(n, mask):
        if abs(c1 - c2) > 2:
            return False
        if c1 - c2 == 2 or (c2 - c1 == 2 and not odd):
            return False
    return True


def is_balanced(n: int, a: Iterable[int]) -> bool:
    _check_n(n)
    return _balanced(n, _mask(_members(n, a)))


def is_weakly_balanced(n: int, a: Iterable[int]) -> bool:
    _check_n(n)
    return _weakly_balanced(n, _mask(_members(n, a)))


def is_set_maximizer_cycle(n: int, a: Iterable[int]) -> bool:
    """Whether ``a`` maximizes the Wiener index among same-size subsets of ``C_n``."""
    _check_n(n)
    members = _members(n, a)
    if len(members) <= 1 or len(members) >= n - 1:
        return True
    return _weakly_balanced(n, _mask(members))


@lru_cache(maxsize=None)
def _set_maximizer_mask(n: int, mask: int) -> bool:
    size = mask.bit_count()
    return size <= 1 or size >= n - 1 or _weakly_balanced(n, mask)


def weak_max_cycle_colors(n: int, colors: Sequence[int]) -> bool:
    """Classwise maximizer test on a bare color array of length ``n``."""
    masks: dict[int, int] = {}
    for v, c in enumerate(colors):
        masks[c] = masks.get(c, 0) | (1 << v)
    return all(_set_maximizer_mask(n, m) for m in masks.values())


def components(n: int, a: Iterable[int]) -> list[list[int]]:
    """Connected components of ``C_n[a]`` as clockwise vertex runs."""
    members = _members(n, a)
    if len(members) == n:
        return [list(range(n))]
    runs = []
    for v in sorted(members):
        if (v - 1) % n in members:
            continue
        run = [v]
        while (run[-1] + 1) % n in members:
            run.append((run[-1] + 1) % n)
        runs.append(run)
    return runs


def is_almost_good(n: int, a: Iterable[int]) -> bool:
    _check_n(n)
    members = _members(n, a)
    if not members or len(members) == n:
        raise DomainError("almost-good is undefined for the empty set and the full vertex set")
    if len(members) in (1, n - 1):
        return True
    comps = components(n, members)
    return len(comps) == 2 and abs(len(comps[0]) - len(comps[1])) <= 1


def is_good(n: int, a: Iterable[int]) -> bool:
    _check_n(n)
    members = _members(n, a)
    if not members or len(members) == n:
        raise DomainError("good sets must be nonempty proper subsets")
    rest = frozenset(range(n)) - members
    return is_almost_good(n, members) and is_almost_good(n, rest)


def canonical_good_set(n: int, m: int) -> VertexSet:
    """``[0, m//2 - 1]`` together with ``[n//2, n//2 + ceil(m/2) - 1]``."""
    _check_n(n)
    if not 1 <= m <= n - 1:
        raise DomainError(f"good set size must lie in 1..{n - 1}, got {m}")
    half = n // 2
    return frozenset(range(m // 2)) | frozenset(range(half, half + (m + 1) // 2))


def _two_arcs(n: int, members: frozenset[int]) -> tuple[list[int], int, list[int], int]:
    """Arcs ``p`` (smaller) and ``q`` covering ``members`` clockwise, with the gap after each."""
    m = len(members)
    comps = components(n, members)
    if len(comps) == 1:
        # an (n-1)-arc: cut it into two adjacent pieces
        run = comps[0]
        p, q = run[: m // 2], run[m // 2:]
        return p, 0, q, n - m
    c1, c2 = sorted(comps, key=lambda c: (len(c), c[0]))
    gap1 = (c2[0] - c1[-1] - 1) % n
    return c1, gap1, c2, n - m - gap1


def split_good(n: int, a: Iterable[int], l1: int, l2: int) -> tuple[VertexSet, VertexSet]:
    """Partition a good set (or the whole cycle) into good sets of sizes ``l1`` and ``l2``."""
    _check_n(n)
    members = _members(n, a)
    m = len(members)
    if l1 < 1 or l2 < 1 or l1 + l2 != m:
        raise DomainError(f"sizes ({l1}, {l2}) do not split a set of {m} vertices")
    if m == n:
        first = canonical_good_set(n, l1)
        return first, members - first
    if not is_good(n, members):
        raise DomainError(f"{sorted(members)} is not a good set of C_{n}")

    p, gap_p, q, gap_q = _two_arcs(n, members)
    if (l1 - l2) % 2 == 0:
        # equal halves: start from the arc followed by the smaller gap
        first, second = (p, q) if gap_p <= gap_q else (q, p)
        piece = first[: l1 // 2] + second[: (l1 + 1) // 2]
        out1 = frozenset(piece)
        out2 = members - out1
    else:
        even = l1 if l1 % 2 == 0 else l2
        if gap_p < gap_q:
            # walk counterclockwise so the smaller arc is followed by the larger gap
            p, q = p[::-1], q[::-1]
        piece = frozenset(p[: even // 2] + q[: even // 2])
        out1, out2 = (piece, members - piece) if l1 == even else (members - piece, piece)

    for part in (out1, out2):
        if not is_good(n, part):
            raise WienerError(f"splitting {sorted(members)} produced non-good {sorted(part)}")
    return out1, out2


def good_partition(n: int, t: Sequence[int]) -> list[VertexSet]:
    """Good sets of sizes ``t[0], t[1], ...`` partitioning ``C_n``, in that order."""
    _check_n(n)
    sizes = [int(x) for x in t]
    if not sizes or any(x < 1 for x in sizes) or sum(sizes) != n:
        raise DomainError(f"{tuple(sizes)} is not a type of {n} vertices")
    rest = frozenset(range(n))
    out = []
    for i, size in enumerate(sizes[:-1]):
        piece, rest = split_good(n, rest, size, sum(sizes[i + 1:]))
        out.append(piece)
    out.append(rest)
    return out


def good_partition_coloring(n: int, t: TypeTuple) -> Coloring:
    t = as_type(t)
    colors = [0] * n
    for c, part in enumerate(good_partition(n, t), start=1):
        for v in part:
            colors[v] = c
    return Coloring(build_cycle(n), tuple(colors), len(t))


def _require_cycle(f: Coloring) -> None:
    if f.graph.kind != "cycle":
        raise DomainError(f"expected a coloring of a cycle, got a {f.graph.kind} graph")


def is_weak_max_cycle(f: Coloring) -> bool:
    _require_cycle(f)
    return weak_max_cycle_colors(f.graph.n, f.colors)
