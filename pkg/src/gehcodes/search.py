"""Minimum-weight search over GEH codes.

Two engines:

* exhaustive: push all q^k information words through the systematic
  generator (vectorised with numpy) and minimise the chosen weight;
* bounded: walk every word of weight <= W - 1 in coordinate order with an
  incremental check vector, then close each prefix with the single symbol
  that zeroes the check vector (found by table lookup).  Every nonzero
  codeword of weight <= W is reached exactly once, so the result is exact up
  to W and otherwise reported as ``ABOVE_BOUND``.

Both engines split their space into disjoint parts (leading information
symbol / first support position) that can run in worker processes; the
merged result does not depend on the worker count.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Literal, Sequence

import numpy as np

from .code import Codeword, GEHCode, NotACodewordError, build_code
from .constructions import match_case
from .ring import make_ring

ABOVE_BOUND = "above bound"
DEFAULT_BUDGET = 1 << 23
DEFAULT_WITNESS_CAP = 10_000
_CHUNK = 1 << 16

Metric = Literal["hamming", "lee"]


class BudgetExceeded(RuntimeError):
    """The requested search would examine more candidates than allowed."""


@dataclass(frozen=True)
class SearchSpec:
    code: GEHCode
    metric: Metric = "lee"
    mode: Literal["exhaustive", "bounded"] = "exhaustive"
    bound: int | None = None
    budget: int = DEFAULT_BUDGET
    worker_count: int = 1
    witness_cap: int = DEFAULT_WITNESS_CAP

    def __post_init__(self):
        if self.metric not in ("hamming", "lee"):
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.mode not in ("exhaustive", "bounded"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "bounded" and (self.bound is None or self.bound < 1):
            raise ValueError("bounded mode needs bound >= 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass
class MinWeightResult:
    min_weight: int | str
    witnesses: list[Codeword]
    candidates_examined: int
    wall_time: float
    metric: str = "lee"
    mode: str = "exhaustive"
    bound: int | None = None
    witness_overflow: bool = False
    n: int = 0
    m: int = 0

    @property
    def above_bound(self) -> bool:
        return self.min_weight == ABOVE_BOUND

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "metric": self.metric,
            "mode": self.mode,
            "bound": self.bound,
            "min_weight": self.min_weight,
            "witness_count": len(self.witnesses),
            "witness_overflow": self.witness_overflow,
            "witnesses": [list(w.entries) for w in self.witnesses],
            "candidates_examined": self.candidates_examined,
        }
        if timings:
            out["ms"] = round(self.wall_time * 1000, 3)
        return out


def _value_costs(q: int, metric: str) -> list[tuple[int, int]]:
    """(value, cost) for every nonzero symbol, cheapest first."""
    if metric == "hamming":
        return [(v, 1) for v in range(1, q)]
    out = []
    for ell in range(1, q // 2 + 1):
        out.append((ell, ell))
        if q - ell != ell:
            out.append((q - ell, ell))
    return out


def _weight_lut(q: int, metric: str) -> np.ndarray:
    if metric == "hamming":
        return np.array([0] + [1] * (q - 1), dtype=np.int64)
    return np.array([min(v, q - v) for v in range(q)], dtype=np.int64)


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


def _info_digits(idx: np.ndarray, q: int, k: int) -> np.ndarray:
    # little-endian base-q digits; q is a power of two
    shift = q.bit_length() - 1
    return (idx[:, None] >> (shift * np.arange(k, dtype=np.int64))) & (q - 1)


def iter_codeword_blocks(code: GEHCode, start: int = 0, stop: int | None = None,
                         chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """Codewords for information indices ``start <= idx < stop`` as 2-D arrays."""
    q, k = code.q, code.k
    total = q**k
    stop = total if stop is None else min(stop, total)
    gen = code.generator.astype(np.float64)
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        digits = _info_digits(idx, q, k).astype(np.float64)
        yield (digits @ gen).astype(np.int64) & (q - 1)


def _check_budget(code: GEHCode, budget: int) -> int:
    total = code.q**code.k
    if total > budget:
        raise BudgetExceeded(f"q^k = {total} exceeds the budget of {budget}")
    return total


def enumerate_codewords(code: GEHCode, budget: int = DEFAULT_BUDGET) -> Iterator[Codeword]:
    """Every codeword of ``code``, once each, via the systematic encoder."""
    _check_budget(code, budget)
    for block in iter_codeword_blocks(code):
        for row in block.tolist():
            yield Codeword(tuple(row), code.q)


def count_codewords(code: GEHCode, budget: int = DEFAULT_BUDGET) -> dict:
    """Enumerate the encoder image and report its size, distinctness and membership."""
    _check_budget(code, budget)
    q, L = code.q, code.length
    shift = q.bit_length() - 1
    weights = (1 << (shift * np.arange(L, dtype=np.int64)))
    # packed keys fit in int64 while shift * L <= 63; otherwise hash rows
    packable = shift * L <= 63
    keys = []
    count = 0
    members = True
    for block in iter_codeword_blocks(code):
        count += len(block)
        if members and code.syndromes(block).any():
            members = False
        if packable:
            keys.append(block @ weights)
        else:
            keys.append(np.frombuffer(np.ascontiguousarray(block).tobytes(), dtype=f"V{8 * L}"))
    distinct = len(np.unique(np.concatenate(keys))) if keys else 0
    return {"count": count, "distinct": distinct, "all_members": members, "expected": q**code.k}


def _exhaustive_part(code: GEHCode, metric: str, lo: int, hi: int, cap: int):
    lut = _weight_lut(code.q, metric)
    best = None
    wit: list[tuple[int, ...]] = []
    for block in iter_codeword_blocks(code, lo, hi):
        w = lut[block].sum(axis=1)
        w[w == 0] = np.iinfo(np.int64).max
        bmin = int(w.min())
        if best is not None and bmin > best:
            continue
        rows = [tuple(r) for r in block[w == bmin].tolist()]
        if best is None or bmin < best:
            best, wit = bmin, rows
        else:
            wit.extend(rows)
        if len(wit) > cap:
            wit = sorted(wit)[: cap + 1]
    if best == np.iinfo(np.int64).max:
        best = None
    return best, sorted(wit)[: cap + 1], hi - lo


def _exhaustive_worker(args):
    n, m, h2, metric, lo, hi, cap = args
    code = build_code(make_ring(n, m, h2))
    return _exhaustive_part(code, metric, lo, hi, cap)


def _merge(parts, cap: int):
    best = None
    wit: list[tuple[int, ...]] = []
    examined = 0
    for pbest, pwit, pexam in parts:
        examined += pexam
        if pbest is None:
            continue
        if best is None or pbest < best:
            best, wit = pbest, list(pwit)
        elif pbest == best:
            wit.extend(pwit)
    wit = sorted(set(wit))
    overflow = len(wit) > cap
    return best, wit[:cap], overflow, examined


def _run_parts(worker, tasks: list, jobs: int):
    if jobs == 1 or len(tasks) == 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def min_weight_exhaustive(spec: SearchSpec) -> MinWeightResult:
    code = spec.code
    t0 = time.perf_counter()
    total = _check_budget(code, spec.budget)
    q, k = code.q, code.k
    # split on the leading information symbol
    step = q ** (k - 1) if k >= 1 else 1
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    key = (code.n, code.m, code.ring.h2.coeffs)
    tasks = [(*key, spec.metric, lo, hi, spec.witness_cap) for lo, hi in bounds]
    parts = _run_parts(_exhaustive_worker, tasks, spec.worker_count)
    best, wit, overflow, examined = _merge(parts, spec.witness_cap)
    return MinWeightResult(
        min_weight=best if best is not None else 0,
        witnesses=[Codeword(w, q) for w in wit],
        candidates_examined=examined,
        wall_time=time.perf_counter() - t0,
        metric=spec.metric,
        mode="exhaustive",
        witness_overflow=overflow,
        n=code.n,
        m=code.m,
    )


# ---------------------------------------------------------------------------
# Bounded enumeration
# ---------------------------------------------------------------------------


def iter_bounded_words(length: int, q: int, bound: int, metric: str = "lee",
                       first: Sequence[int] | None = None, acc=None, step=None):
    """Every nonzero word of weight <= ``bound``, in coordinate order.

    Yields ``(positions, values, weight, acc)``; positions ascend.  ``acc``
    is threaded through ``step(acc, position, value)`` so callers can keep
    running state such as a check vector.  ``first`` restricts the first
    support position.
    """
    choices = _value_costs(q, metric)
    firsts = range(length) if first is None else first

    def rec(start, positions, values, weight, state):
        for p in range(start, length):
            for v, cost in choices:
                w = weight + cost
                if w > bound:
                    break
                s = step(state, p, v) if step else None
                pos2, val2 = positions + (p,), values + (v,)
                yield pos2, val2, w, s
                yield from rec(p + 1, pos2, val2, w, s)

    for p in firsts:
        for v, cost in choices:
            if cost > bound:
                break
            s = step(acc, p, v) if step else None
            yield (p,), (v,), cost, s
            yield from rec(p + 1, (p,), (v,), cost, s)


def count_bounded_words(length: int, q: int, bound: int, metric: str = "lee") -> int:
    """Number of nonzero words of weight <= ``bound`` (per-coordinate DP)."""
    per_cost: dict[int, int] = {}
    for _, c in _value_costs(q, metric):
        per_cost[c] = per_cost.get(c, 0) + 1
    dp = [1] + [0] * bound
    for _ in range(length):
        new = dp[:]
        for w in range(bound + 1):
            if dp[w]:
                for c, cnt in per_cost.items():
                    if w + c <= bound:
                        new[w + c] += dp[w] * cnt
        dp = new
    return sum(dp) - 1


def _bounded_part(code: GEHCode, metric: str, bound: int, firsts: Sequence[int]):
    q, L = code.q, code.length
    cols = [tuple(int(x) for x in code.parity[:, j]) for j in range(L)]
    contrib = {(j, v): tuple((v * c) % q for c in cols[j]) for j in range(L) for v in range(1, q)}
    cost_of = {v: c for v, c in _value_costs(q, metric)}
    # completion[v][xi-part of v * column j] -> finite positions j
    completion: dict[int, dict[tuple[int, ...], list[int]]] = {v: {} for v in range(1, q)}
    for v in range(1, q):
        for j in range(1, L):
            completion[v].setdefault(contrib[(j, v)][1:], []).append(j)

    def step(s, p, v):
        c = contrib[(p, v)]
        return tuple((a + b) % q for a, b in zip(s, c))

    zero = (0,) * len(cols[0])
    found: list[tuple[int, tuple[int, ...]]] = []
    examined = 0
    # prefixes stop one unit of weight short; the closing symbol supplies the rest
    for positions, values, w, s in iter_bounded_words(L, q, bound - 1, metric, firsts, zero, step):
        examined += 1
        v = (-s[0]) % q
        if not v or w + cost_of[v] > bound:
            continue
        need = tuple((-x) % q for x in s[1:])
        last = positions[-1]
        for j in completion[v].get(need, ()):
            if j > last:
                entries = [0] * L
                for p, x in zip(positions, values):
                    entries[p] = x
                entries[j] = v
                found.append((w + cost_of[v], tuple(entries)))
    return found, examined


def _bounded_worker(args):
    n, m, h2, metric, bound, firsts = args
    code = build_code(make_ring(n, m, h2))
    return _bounded_part(code, metric, bound, firsts)


def min_weight_bounded(spec: SearchSpec) -> MinWeightResult:
    code = spec.code
    W = spec.bound
    t0 = time.perf_counter()
    prefixes = count_bounded_words(code.length, code.q, W - 1, spec.metric)
    if prefixes > spec.budget:
        raise BudgetExceeded(f"{prefixes} prefixes exceed the budget of {spec.budget}")
    L = code.length
    jobs = spec.worker_count
    # split on the first support position
    groups = [list(range(g, L, jobs)) for g in range(jobs)] if jobs > 1 else [list(range(L))]
    key = (code.n, code.m, code.ring.h2.coeffs)
    tasks = [(*key, spec.metric, W, g) for g in groups if g]
    parts = _run_parts(_bounded_worker, tasks, jobs)
    found = [f for part, _ in parts for f in part]
    examined = sum(e for _, e in parts)
    if found:
        best = min(w for w, _ in found)
        wit = sorted({e for w, e in found if w == best})
    else:
        best, wit = ABOVE_BOUND, []
    overflow = len(wit) > spec.witness_cap
    return MinWeightResult(
        min_weight=best,
        witnesses=[Codeword(w, code.q) for w in wit[: spec.witness_cap]],
        candidates_examined=examined,
        wall_time=time.perf_counter() - t0,
        metric=spec.metric,
        mode="bounded",
        bound=W,
        witness_overflow=overflow,
        n=code.n,
        m=code.m,
    )


def min_weight(spec: SearchSpec) -> MinWeightResult:
    if spec.mode == "exhaustive":
        return min_weight_exhaustive(spec)
    return min_weight_bounded(spec)


# ---------------------------------------------------------------------------
# Classification against the case tables
# ---------------------------------------------------------------------------


@dataclass
class Classification:
    assigned: list[tuple[Codeword, int]] = field(default_factory=list)
    unclassified: list[Codeword] = field(default_factory=list)

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, c in self.assigned:
            out[c] = out.get(c, 0) + 1
        return dict(sorted(out.items()))


def classify_min_lee(code: GEHCode, witnesses: Sequence[Codeword | Sequence[int]]) -> Classification:
    """Assign each minimum-Lee-weight word of P_4 to a table row.

    Words matching no row are kept in ``unclassified``.
    """
    if code.q != 4:
        raise ValueError("classification applies to P_4")
    result = Classification()
    for w in witnesses:
        word = code.codeword(w)
        if not any(word.entries):
            raise ValueError("the zero word has no case")
        if not code.is_codeword(word):
            raise NotACodewordError(f"{word} is not in P_4")
        case = match_case(word, code.m)
        if case is None:
            result.unclassified.append(word)
        else:
            result.assigned.append((word, case))
    return result
