"""Weak maximizers on paths: capacity schedules, block partitions and the classes C_t.

Vertices are 0-based. Color ``j`` of a constructed coloring corresponds to
position ``j`` (1-based) of the sorted type tuple.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .coloring import Coloring, TypeTuple, as_type
from .errors import DomainError
from .graph import build_path


@dataclass(frozen=True)
class CapacitySchedule:
    t: TypeTuple
    r: tuple[tuple[int, ...], ...]  # r^1 .. r^{i*+1}
    m: tuple[int, ...]  # m_1 .. m_{i*}
    i_star: int
    last_max: int  # max(r^{i*})

    def maxima(self, i: int) -> frozenset[int]:
        """1-based color indices attaining the maximum of ``r^i`` (1-based ``i``)."""
        row = self.r[i - 1]
        top = max(row)
        return frozenset(j + 1 for j, x in enumerate(row) if x == top)


@dataclass(frozen=True)
class Block:
    side: str  # "L" or "R"
    index: int  # schedule step i, 1-based
    start: int
    stop: int  # inclusive
    allowed: frozenset[int]

    @property
    def vertices(self) -> range:
        return range(self.start, self.stop + 1)

    def __len__(self) -> int:
        return self.stop - self.start + 1


@dataclass(frozen=True)
class BlockPartition:
    t: TypeTuple
    blocks: tuple[Block, ...]  # ordered left to right along the path

    def left(self) -> list[Block]:
        return [b for b in self.blocks if b.side == "L"]

    def right(self) -> list[Block]:
        return [b for b in self.blocks if b.side == "R"]

    def block_of(self, v: int) -> Block:
        for b in self.blocks:
            if b.start <= v <= b.stop:
                return b
        raise DomainError(f"vertex {v} not covered")


def capacity_schedule(t: TypeTuple) -> CapacitySchedule:
    return _schedule(as_type(t))


@lru_cache(maxsize=4096)
def _schedule(t: TypeTuple) -> CapacitySchedule:
    rows = [t]
    m: list[int] = []
    while max(rows[-1]) > 0:
        row = rows[-1]
        top = max(row)
        step = 2 if top > 1 else 1
        m.append(sum(1 for x in row if x == top))
        rows.append(tuple(x - step if x == top else x for x in row))
    i_star = len(m)
    return CapacitySchedule(t, tuple(rows), tuple(m), i_star, max(rows[i_star - 1]))


def block_partition(t: TypeTuple) -> BlockPartition:
    return _partition(as_type(t))


@lru_cache(maxsize=4096)
def _partition(t: TypeTuple) -> BlockPartition:
    sched = _schedule(t)
    n = sum(sched.t)
    left: list[Block] = []
    right: list[Block] = []
    done = 0
    for i, mi in enumerate(sched.m, start=1):
        allowed = sched.maxima(i)
        left.append(Block("L", i, done, done + mi - 1, allowed))
        if i < sched.i_star or sched.last_max > 1:
            right.append(Block("R", i, n - done - mi, n - done - 1, allowed))
        done += mi
    return BlockPartition(sched.t, tuple(left + right[::-1]))


def _require_path(f: Coloring) -> None:
    if f.graph.kind != "path":
        raise DomainError(f"expected a coloring of a path, got a {f.graph.kind} graph")


def colors_in_Ct(colors: Sequence[int]) -> bool:
    """Membership test on a bare color array (colors need not be normalized)."""
    sizes = Counter(colors)
    part = _partition(tuple(sorted(sizes.values())))
    t = part.t
    for b in part.blocks:
        # color indices with equal type entries share every r^i, so matching
        # colors to indices only needs class sizes
        allowed_sizes = {t[j - 1] for j in b.allowed}
        seen = set()
        for v in b.vertices:
            c = colors[v]
            if c in seen or sizes[c] not in allowed_sizes:
                return False
            seen.add(c)
    return True


def is_in_Ct(f: Coloring) -> bool:
    """Membership in C_{type(f)}, up to a size-preserving relabeling of colors."""
    _require_path(f)
    return colors_in_Ct(f.colors)


def is_weak_max_path(f: Coloring) -> bool:
    return is_in_Ct(f)


def canonical_Ct_member(t: TypeTuple) -> Coloring:
    t = as_type(t)
    part = block_partition(t)
    colors = [0] * sum(t)
    for b in part.blocks:
        for v, c in zip(b.vertices, sorted(b.allowed)):
            colors[v] = c
    return Coloring(build_path(sum(t)), tuple(colors), len(t))


def enumerate_Ct(t: TypeTuple) -> Iterator[Coloring]:
    """Every member of C_t, in lexicographic order of the color array."""
    t = as_type(t)
    part = block_partition(t)
    g = build_path(sum(t))
    choices = [list(permutations(sorted(b.allowed))) for b in part.blocks]
    for combo in product(*choices):
        colors = tuple(c for block_colors in combo for c in block_colors)
        yield Coloring(g, colors, len(t))


def count_Ct(t: TypeTuple) -> int:
    """Closed-form size of C_t: product of factorials of the block sizes."""
    sched = capacity_schedule(as_type(t))
    total = 1
    for i, mi in enumerate(sched.m, start=1):
        sides = 2 if (i < sched.i_star or sched.last_max > 1) else 1
        total *= math.factorial(mi) ** sides
    return total


def lr_counts(f: Coloring, v: int) -> tuple[int, int]:
    """Same-colored vertices strictly left and right of ``v``."""
    _require_path(f)
    if not 0 <= v < f.graph.n:
        raise DomainError(f"vertex {v} outside 0..{f.graph.n - 1}")
    c = f.colors[v]
    left = sum(1 for x in f.colors[:v] if x == c)
    right = sum(1 for x in f.colors[v + 1:] if x == c)
    return left, right


def swap_delta_path(f: Coloring, v: int) -> int:
    """Change in W from swapping the colors of ``v`` and ``v + 1``."""
    _require_path(f)
    if not 0 <= v < f.graph.n - 1:
        raise DomainError(f"no vertex to the right of {v}")
    if f.colors[v] == f.colors[v + 1]:
        return 0
    lv, rv = lr_counts(f, v)
    lw, rw = lr_counts(f, v + 1)
    return lv - rv + rw - lw
