"""Majorization of type tuples, reverse Robin Hood transfers and the equal-even closure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .coloring import TypeTuple, as_type
from .errors import DomainError, OrderError


@dataclass(frozen=True)
class TransferChain:
    start: TypeTuple
    steps: tuple[tuple[int, int], ...]  # 1-based (j, j') pairs
    end: TypeTuple

    def replay(self) -> list[TypeTuple]:
        """Every intermediate tuple, starting with ``start``."""
        out = [self.start]
        for j, jp in self.steps:
            out.append(robin_hood(out[-1], j, jp))
        return out


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True when ``x`` is majorized by ``y``."""
    if len(x) != len(y):
        raise DomainError(f"tuples of different lengths: {len(x)} and {len(y)}")
    if sum(x) != sum(y):
        return False
    px = accumulate(sorted(x, reverse=True))
    py = accumulate(sorted(y, reverse=True))
    return all(a <= b for a, b in zip(px, py))


def robin_hood(t: Sequence[int], j: int, jp: int) -> TypeTuple:
    """Move one unit from part ``j`` to part ``jp`` (1-based, ``j <= jp``) and re-sort."""
    t = tuple(sorted(int(p) for p in t))
    k = len(t)
    if not 1 <= j <= jp <= k:
        raise DomainError(f"need 1 <= j <= j' <= {k}, got ({j}, {jp})")
    if j == jp:
        return t
    parts = list(t)
    parts[j - 1] -= 1
    parts[jp - 1] += 1
    if parts[j - 1] < 1:
        raise DomainError(f"transfer ({j}, {jp}) on {t} empties a part")
    return tuple(sorted(parts))


def transfer_chain(x: Sequence[int], y: Sequence[int]) -> TransferChain:
    x, y = as_type(x), as_type(y)
    if len(x) != len(y) or not majorizes(x, y):
        raise OrderError(f"{x} is not majorized by {y}")
    cur = x
    steps = []
    while cur != y:
        j = next(i for i in range(len(y)) if cur[i] > y[i])
        jp = max(i for i in range(len(y)) if cur[i] < y[i])
        steps.append((j + 1, jp + 1))
        cur = robin_hood(cur, j + 1, jp + 1)
    return TransferChain(x, tuple(steps), y)


def equitable_tuple(n: int, k: int) -> TypeTuple:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    q, r = divmod(n, k)
    return (q,) * (k - r) + (q + 1,) * r


def types(n: int, k: int) -> Iterator[TypeTuple]:
    """All nondecreasing ``k``-tuples of positive integers summing to ``n``, ascending."""

    def rec(remaining: int, parts: int, low: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            if remaining >= low:
                yield (remaining,)
            return
        for first in range(low, remaining // parts + 1):
            for rest in rec(remaining - first, parts - 1, first):
                yield (first,) + rest

    if k < 1 or n < k:
        return
    yield from rec(n, k, 1)


def single_transfers(t: TypeTuple) -> Iterator[tuple[int, int, TypeTuple]]:
    """Every proper transfer ``(j, j', R_{j,j'}(t))`` that keeps all parts positive."""
    for j in range(1, len(t) + 1):
        if t[j - 1] < 2:
            continue
        for jp in range(j + 1, len(t) + 1):
            yield j, jp, robin_hood(t, j, jp)


def r_step(ts: Iterable[Sequence[int]]) -> set[TypeTuple]:
    out = {as_type(t) for t in ts}
    for t in list(out):
        for j in range(len(t)):
            for jp in range(j + 1, len(t)):
                if t[j] == t[jp] and t[j] % 2 == 0:
                    out.add(robin_hood(t, j + 1, jp + 1))
    return out


def r_closure(ts: Iterable[Sequence[int]]) -> set[TypeTuple]:
    cur = {as_type(t) for t in ts}
    while True:
        nxt = r_step(cur)
        if nxt == cur:
            return cur
        cur = nxt


def is_min_type_path(t: Sequence[int]) -> bool:
    t = as_type(t)
    return t[-1] - t[0] <= 1


def is_max_type_path(t: Sequence[int]) -> bool:
    t = as_type(t)
    return t[-1] == sum(t) - (len(t) - 1)


def _check_shape(n: int, k: int, t: TypeTuple) -> None:
    if len(t) != k or sum(t) != n:
        raise DomainError(f"{t} is not a {k}-part type of {n}")


def is_min_type_cycle(n: int, k: int, t: Sequence[int]) -> bool:
    t = as_type(t)
    _check_shape(n, k, t)
    if n % 2 == 0:
        return t in r_closure({equitable_tuple(n, k)})
    return t[-1] - t[0] <= 1


def is_max_type_cycle(n: int, k: int, t: Sequence[int]) -> bool:
    t = as_type(t)
    _check_shape(n, k, t)
    if n % 2 == 0 and n - k <= 2:
        return True
    return t[-1] == n - (k - 1)
