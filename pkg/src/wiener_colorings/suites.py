"""Named exhaustive checks of the structural results, run against the oracle.

Each claim is checked instance by instance: ``(n, k)`` for coloring claims and
``(n, m)`` for vertex-set claims. Instances are independent, so they may run in
worker processes; results are merged in instance order and the reported
counterexample is the lexicographically least one from the first failing
instance, whatever the scheduling.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .cycles import is_balanced, is_good, is_set_maximizer_cycle, is_weakly_balanced, weak_max_cycle_colors
from .errors import BudgetError, UsageError
from .graph import Graph, build_cycle, build_path
from .majorization import (
    equitable_tuple,
    is_max_type_cycle,
    is_max_type_path,
    is_min_type_cycle,
    is_min_type_path,
    majorizes,
    r_closure,
    single_transfers,
    types,
)
from .oracle import (
    DEFAULT_BUDGET,
    EnumerationScope,
    cached_type_maxima,
    check_budget,
    decode_type,
    scan,
    type_code,
    type_maxima,
)
from .paths import colors_in_Ct, count_Ct, enumerate_Ct

Range = tuple[int, int]


@dataclass(frozen=True)
class Counterexample:
    graph: str
    witness: tuple[tuple[int, ...], ...]
    detail: str

    def to_dict(self) -> dict:
        return {"graph": self.graph, "witness": [list(w) for w in self.witness], "detail": self.detail}

    def __str__(self) -> str:
        shown = " ".join(",".join(map(str, w)) for w in self.witness)
        return f"{self.graph} [{shown}] {self.detail}"


@dataclass(frozen=True)
class InstanceResult:
    params: tuple[int, int]
    checked: int = 0
    counterexample: Counterexample | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    params: tuple[tuple[str, Range], ...]
    status: str
    checked: int
    counterexample: Counterexample | None
    notes: tuple[str, ...] = ()
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def params_text(self) -> str:
        return ";".join(f"{name}={lo}..{hi}" for name, (lo, hi) in self.params)

    def payload(self) -> dict:
        """Report content without timing, stable across runs and worker counts."""
        return {
            "claim": self.claim,
            "params": {name: [lo, hi] for name, (lo, hi) in self.params},
            "status": self.status,
            "checked": self.checked,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "notes": list(self.notes),
        }

    def to_dict(self) -> dict:
        out = self.payload()
        out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_dict() if timing else self.payload(), sort_keys=True)


CSV_COLUMNS = ("claim", "params", "status", "checked", "elapsed-ms", "counterexample")


def reports_to_csv(reports: Sequence[VerificationReport], *, timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        ms = f"{r.elapsed * 1000:.3f}" if timing else ""
        w.writerow([r.claim, r.params_text(), r.status, r.checked, ms, str(r.counterexample or "")])
    return buf.getvalue()


# -- shared oracle helpers ---------------------------------------------------


def _maxima(kind: str, n: int, k: int) -> dict[tuple[int, ...], int]:
    return dict(cached_type_maxima(f"{kind}:{n}", k))


def _graph(kind: str, n: int) -> Graph:
    return build_path(n) if kind == "path" else build_cycle(n)


def _witness_for_type(g: Graph, k: int, t: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least weak maximizer of type ``t``."""
    scope = EnumerationScope(g, k, t)
    best = type_maxima(scope)[t]
    for chunk in scan(scope):
        hit = np.flatnonzero(chunk.wiener == best)
        if len(hit):
            return tuple(chunk.colors[hit[0]].tolist())
    raise AssertionError("type maximum not attained")


def _type_counterexample(kind: str, n: int, k: int, ts: Sequence[tuple[int, ...]], detail: str) -> Counterexample:
    g = _graph(kind, n)
    witness = tuple(_witness_for_type(g, k, t) for t in ts)
    return Counterexample(g.shorthand(), witness, f"types {' vs '.join(map(str, ts))}: {detail}")


def _comparable_pairs(n: int, k: int):
    ts = list(types(n, k))
    for x in ts:
        for y in ts:
            if x != y and majorizes(x, y):
                yield x, y


# -- coloring-level claims ---------------------------------------------------


def _classwise_check(kind: str, n: int, k: int, predicate: Callable[[tuple[int, ...]], bool], with_local: bool) -> InstanceResult:
    g = _graph(kind, n)
    scope = EnumerationScope(g, k)
    maxima = type_maxima(scope)
    code_max = {type_code(t, n): v for t, v in maxima.items()}
    dist = np.ascontiguousarray(g.dist, dtype=np.int64)
    edges = np.array(g.sorted_edges(), dtype=np.int64).reshape(-1, 2)
    checked = 0
    for chunk in scan(scope):
        rows = [tuple(r) for r in chunk.colors.tolist()]
        per_type = np.array([code_max[c] for c in chunk.type_codes.tolist()], dtype=np.int64)
        wm = chunk.wiener == per_type
        pred = np.array([predicate(r) for r in rows], dtype=bool)
        bad = pred != wm
        if with_local:
            local = kernels.local_max_many(chunk.colors, dist, edges)
            bad |= local != wm
        checked += len(rows)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            t = decode_type(int(chunk.type_codes[i]), n, k)
            detail = f"type {t}: W={int(chunk.wiener[i])}, type max={int(per_type[i])}, predicate={bool(pred[i])}"
            if with_local:
                detail += f", local={bool(local[i])}"
            return InstanceResult((n, k), checked, Counterexample(g.shorthand(), (rows[i],), detail))
    return InstanceResult((n, k), checked)


def check_path_triple(n: int, k: int) -> InstanceResult:
    return _classwise_check("path", n, k, colors_in_Ct, with_local=True)


def check_cycle_classwise(n: int, k: int) -> InstanceResult:
    return _classwise_check("cycle", n, k, lambda r: weak_max_cycle_colors(n, r), with_local=False)


def check_ct_constant(n: int, k: int) -> InstanceResult:
    g = build_path(n)
    dist = np.ascontiguousarray(g.dist, dtype=np.int64)
    maxima = _maxima("path", n, k)
    checked = 0
    for t in types(n, k):
        members = [f.colors for f in enumerate_Ct(t)]
        ws = kernels.wiener_many(np.array(members, dtype=np.int8).reshape(len(members), n), dist)
        checked += len(members)
        if len(members) != count_Ct(t):
            return InstanceResult((n, k), checked, Counterexample(g.shorthand(), (members[0],), f"type {t}: {len(members)} members, formula {count_Ct(t)}"))
        off = np.flatnonzero(ws != maxima[t])
        if len(off):
            i = int(off[0])
            return InstanceResult((n, k), checked, Counterexample(g.shorthand(), (members[i],), f"type {t}: W={int(ws[i])}, type max={maxima[t]}"))
    return InstanceResult((n, k), checked)


# -- type-level claims -------------------------------------------------------


def check_maj_paths(n: int, k: int) -> InstanceResult:
    m = _maxima("path", n, k)
    checked = 0
    for x, y in _comparable_pairs(n, k):
        checked += 1
        if not m[x] < m[y]:
            return InstanceResult((n, k), checked, _type_counterexample("path", n, k, (x, y), f"W {m[x]} is not below {m[y]}"))
    return InstanceResult((n, k), checked)


def check_maj_cycles(n: int, k: int) -> InstanceResult:
    m = _maxima("cycle", n, k)
    checked, notes = 0, []
    for t in types(n, k):
        for j, jp, s in single_transfers(t):
            checked += 1
            equal_case = n % 2 == 0 and t[j - 1] == t[jp - 1] and t[j - 1] % 2 == 0
            if equal_case:
                notes.append(f"C_{n} {t}->{s} R_{j},{jp}: W {m[t]}={m[s]}")
                ok = m[t] == m[s]
            else:
                ok = m[t] < m[s]
            if not ok:
                rel = "equal" if equal_case else "strictly larger"
                return InstanceResult((n, k), checked, _type_counterexample("cycle", n, k, (t, s), f"expected {rel}, got W {m[t]} and {m[s]}"), tuple(notes))
    return InstanceResult((n, k), checked, None, tuple(notes))


def check_not_down(n: int, k: int) -> InstanceResult:
    checked = 0
    for kind in ("path", "cycle"):
        if kind == "cycle" and n < 3:
            continue
        m = _maxima(kind, n, k)
        for x, y in _comparable_pairs(n, k):
            checked += 1
            if m[x] > m[y]:
                return InstanceResult((n, k), checked, _type_counterexample(kind, n, k, (x, y), f"W {m[x]} exceeds {m[y]}"))
    return InstanceResult((n, k), checked)


def check_closure_constant(n: int, k: int) -> InstanceResult:
    if n % 2:
        return InstanceResult((n, k), 0, None, (f"C_{n}: odd cycle, closure claim not applicable",))
    m = _maxima("cycle", n, k)
    checked = 0
    for t in types(n, k):
        for s in sorted(r_closure({t})):
            checked += 1
            if m[s] != m[t]:
                return InstanceResult((n, k), checked, _type_counterexample("cycle", n, k, (t, s), f"W {m[t]} != {m[s]}"))
    return InstanceResult((n, k), checked)


def _extreme_check(kind: str, n: int, k: int, pick: Callable, predicate: Callable[[tuple[int, ...]], bool], label: str) -> InstanceResult | None:
    m = _maxima(kind, n, k)
    target = pick(m.values())
    for t in sorted(m):
        if (m[t] == target) != predicate(t):
            other = next(s for s in sorted(m) if m[s] == target)
            detail = f"{label}: W {m[t]} vs extreme {target}, predicate={predicate(t)}"
            return _type_counterexample(kind, n, k, (t, other), detail)
    return None


def check_min_max_paths(n: int, k: int) -> InstanceResult:
    for pick, pred, label in ((min, is_min_type_path, "min"), (max, is_max_type_path, "max")):
        cx = _extreme_check("path", n, k, pick, pred, label)
        if cx:
            return InstanceResult((n, k), 1, cx)
    return InstanceResult((n, k), len(list(types(n, k))))


def check_min_cycles(n: int, k: int) -> InstanceResult:
    cx = _extreme_check("cycle", n, k, min, lambda t: is_min_type_cycle(n, k, t), "min")
    notes = ()
    if n % 2 == 0:
        notes = (f"C_{n} k={k}: minimal types {sorted(r_closure({equitable_tuple(n, k)}))}",)
    return InstanceResult((n, k), len(list(types(n, k))), cx, notes)


def check_max_cycles(n: int, k: int) -> InstanceResult:
    cx = _extreme_check("cycle", n, k, max, lambda t: is_max_type_cycle(n, k, t), "max")
    notes = ()
    if n % 2 == 0 and n - k <= 2:
        notes = (f"C_{n} k={k}: every type maximal",)
    return InstanceResult((n, k), len(list(types(n, k))), cx, notes)


# -- vertex-set claims -------------------------------------------------------


def _subset_wieners(g: Graph, m: int) -> tuple[list[tuple[int, ...]], np.ndarray]:
    subsets = list(combinations(range(g.n), m))
    if m < 2:
        return subsets, np.zeros(len(subsets), dtype=np.int64)
    arr = np.array(subsets, dtype=np.int64)
    w = np.zeros(len(subsets), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            w += g.dist[arr[:, i], arr[:, j]]
    return subsets, w


def check_set_characterization(n: int, m: int) -> InstanceResult:
    g = build_cycle(n)
    subsets, w = _subset_wieners(g, m)
    best = int(w.max())
    _, wc = _subset_wieners(g, n - m)
    comp_best = int(wc.max())
    refine = 1 <= m <= n - 1
    for a, x in zip(subsets, w.tolist()):
        truth = x == best
        pred = is_set_maximizer_cycle(n, a)
        if pred != truth:
            return InstanceResult((n, m), 0, Counterexample(g.shorthand(), (a,), f"W={x}, max={best}, predicate={pred}"))
        comp = tuple(v for v in range(n) if v not in a)
        if truth != (_set_w(g, comp) == comp_best):
            return InstanceResult((n, m), 0, Counterexample(g.shorthand(), (a, comp), "complement closure fails"))
        if refine and truth:
            if n % 2 == 0 or m % 2 == 1:
                ok, what = is_balanced(n, a), "maximizer not balanced"
            else:
                ok, what = is_weakly_balanced(n, a) and not is_balanced(n, a), "maximizer balanced or not weakly balanced"
            if not ok:
                return InstanceResult((n, m), 0, Counterexample(g.shorthand(), (a,), what))
        if refine and not truth and (n % 2 == 0 or m % 2 == 1) and is_balanced(n, a):
            return InstanceResult((n, m), 0, Counterexample(g.shorthand(), (a,), f"balanced but W={x} < {best}"))
    return InstanceResult((n, m), len(subsets))


def _set_w(g: Graph, a: Sequence[int]) -> int:
    idx = np.asarray(a, dtype=np.int64)
    return int(g.dist[np.ix_(idx, idx)].sum()) // 2


def check_good_implies_max(n: int, m: int) -> InstanceResult:
    if not 1 <= m <= n - 1:
        return InstanceResult((n, m), 0)
    g = build_cycle(n)
    subsets, w = _subset_wieners(g, m)
    best = int(w.max())
    checked = 0
    for a, x in zip(subsets, w.tolist()):
        if is_good(n, a):
            checked += 1
            if x != best:
                return InstanceResult((n, m), checked, Counterexample(g.shorthand(), (a,), f"good set with W={x} < {best}"))
    return InstanceResult((n, m), checked)


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    name: str
    check: Callable[[int, int], InstanceResult]
    second: str  # "k" or "m"
    min_n: int
    default_n: Range
    default_second: Range | None
    kinds: tuple[str, ...]
    about: str


CLAIMS: dict[str, Claim] = {
    c.name: c
    for c in (
        Claim("set-maximizer-characterization", check_set_characterization, "m", 3, (3, 12), None, ("cycle",),
              "weakly balanced <=> maximal W among same-size subsets of C_n, with the balanced refinement"),
        Claim("good-implies-maximizer", check_good_implies_max, "m", 3, (3, 14), None, ("cycle",),
              "every good subset of C_n has maximal W for its size"),
        Claim("cycle-weak-max-classwise", check_cycle_classwise, "k", 3, (3, 9), (2, 3), ("cycle",),
              "a coloring of C_n is a weak maximizer iff every class is a set maximizer"),
        Claim("path-triple-equivalence", check_path_triple, "k", 1, (1, 10), (1, 4), ("path",),
              "on P_n: member of C_t <=> local weak maximizer <=> weak maximizer"),
        Claim("Ct-constant-W", check_ct_constant, "k", 1, (1, 10), (1, 4), ("path",),
              "every member of C_t has the same W, equal to the type maximum"),
        Claim("maj-paths-strict", check_maj_paths, "k", 1, (1, 10), (1, 4), ("path",),
              "on paths, t strictly majorized by t' gives strictly larger type maximum"),
        Claim("maj-cycles-cases", check_maj_cycles, "k", 3, (3, 9), (1, 3), ("cycle",),
              "on cycles a single transfer keeps W only for equal even parts on even n, else raises it"),
        Claim("W-not-down", check_not_down, "k", 1, (1, 10), (1, 4), ("path", "cycle"),
              "type maxima are monotone under majorization on paths and cycles"),
        Claim("closure-constant-W", check_closure_constant, "k", 3, (4, 10), (1, 4), ("cycle",),
              "on even cycles, types in the equal-even transfer closure share one type maximum"),
        Claim("min-max-paths", check_min_max_paths, "k", 1, (1, 10), (1, 4), ("path",),
              "minimal types are the equitable ones, maximal types have a class of size n-k+1"),
        Claim("min-cycles", check_min_cycles, "k", 3, (3, 9), (1, 3), ("cycle",),
              "minimal cycle types: closure of t(n,k) for even n, near-equal parts for odd n"),
        Claim("max-cycles", check_max_cycles, "k", 3, (3, 9), (1, 3), ("cycle",),
              "maximal cycle types: a class of size n-k+1, or every type when n is even and n-k<=2"),
    )
}


def instances(claim: Claim, n_range: Range, second: Range | None) -> list[tuple[int, int]]:
    out = []
    for n in range(max(n_range[0], claim.min_n), n_range[1] + 1):
        lo, hi = second if second is not None else (0 if claim.second == "m" else 1, n)
        for x in range(max(lo, 0), min(hi, n) + 1):
            if claim.second == "k" and x < 1:
                continue
            out.append((n, x))
    return out


def _run_instance(args: tuple[str, int, int]) -> InstanceResult:
    name, n, x = args
    return CLAIMS[name].check(n, x)


def verify(
    claim: str,
    n_range: Range | None = None,
    k_range: Range | None = None,
    *,
    workers: int = 1,
    budget: int | None = None,
) -> VerificationReport:
    """Run one named claim exhaustively; ``k_range`` is the set size range for set claims."""
    if claim not in CLAIMS:
        raise UsageError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")
    entry = CLAIMS[claim]
    n_range = n_range or entry.default_n
    second = k_range if k_range is not None else entry.default_second
    todo = instances(entry, n_range, second)
    limit = DEFAULT_BUDGET if budget is None else budget
    for n, x in todo:
        raw = x**n if entry.second == "k" else 2**n
        try:
            check_budget(raw, limit)
        except BudgetError as exc:
            raise BudgetError(f"{claim} at n={n}: {exc}") from None
    start = time.perf_counter()
    jobs = [(claim, n, x) for n, x in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_instance, jobs))
    else:
        results = [_run_instance(j) for j in jobs]
    elapsed = time.perf_counter() - start
    failure = next((r for r in results if r.counterexample is not None), None)
    notes = tuple(note for r in results for note in r.notes)
    shown_second = second if second is not None else (0 if entry.second == "m" else 1, n_range[1])
    return VerificationReport(
        claim=claim,
        params=(("n", tuple(n_range)), (entry.second, tuple(shown_second))),
        status="fail" if failure else "pass",
        checked=sum(r.checked for r in results),
        counterexample=failure.counterexample if failure else None,
        notes=notes,
        elapsed=elapsed,
    )
