"""Counting and searching MDS double-twisted codes.

The counting loop follows the reference semantics exactly: unordered
n-subsets of the whole field as evaluation sets, ordered pairs (eta1,
eta2) of nonzero elements, and a pair counts iff the closed-form
expression is nonzero on every k-subset of the evaluation set.  Counts
are invariant under the worker split because the per-set tallies are
summed, and invariant under criterion choice (closed form vs constructing
each code and brute-forcing it) for every in-budget task.

The closed-form path is vectorized with numpy lookup tables: for a fixed
evaluation set the bad pairs of one k-subset form a curve eta2 =
f(eta1), so each subset marks at most q-1 grid cells instead of testing
all (q-1)^2 pairs.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from math import comb
from multiprocessing import get_context
from typing import Iterator, Optional

import numpy as np

from .codes import (
    BudgetExceededError,
    LinearCodeView,
    MultiTwistedCode,
    TwistProfile,
    is_mds_bruteforce,
)
from .criteria import (
    DOUBLE_TWIST,
    eta2_guard_values,
    forbidden_eta_sets,
    remark44_is_mds,
    theorem31_is_mds,
)
from .field import Field, FieldSpec

ENUM_BUDGET = 10**9


@dataclass(frozen=True)
class EnumTask:
    q: int
    n: int
    k: int
    criterion: str = "remark44"
    workers: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.criterion not in ("remark44", "bruteforce"):
            raise ValueError(f"unknown criterion {self.criterion!r}")
        if self.k < 2:
            raise ValueError("double-twist layout needs k >= 2 (hooks 0 and 1)")
        if self.n < self.k + 2:
            raise ValueError(
                f"invalid (n, k) = ({self.n}, {self.k}): the twisted degree "
                f"k+1 must stay below n, so n >= k + 2"
            )
        if self.n > self.q:
            raise ValueError("n cannot exceed the field size")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def cost(self) -> int:
        return comb(self.q, self.n) * (self.q - 1) ** 2 * comb(self.n, self.k)


@dataclass
class EnumResult:
    total_count: int
    criterion: str
    elapsed: float
    per_set: Optional[dict] = None


_TABLE_CACHE: dict[FieldSpec, tuple] = {}
_SUBSET_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _subset_indices(n: int, k: int) -> np.ndarray:
    key = (n, k)
    if key not in _SUBSET_CACHE:
        _SUBSET_CACHE[key] = np.array(list(itertools.combinations(range(n), k)), np.intp)
    return _SUBSET_CACHE[key]


def _field_tables(ctx: Field):
    """Dense numpy add/mul/neg/inv tables for a small field (q <= 256)."""
    cached = _TABLE_CACHE.get(ctx.spec)
    if cached is not None:
        return cached
    q = ctx.q
    add = np.empty((q, q), np.int16)
    mul = np.empty((q, q), np.int16)
    for x in range(q):
        for y in range(q):
            add[x, y] = ctx.add(x, y)
            mul[x, y] = ctx.mul(x, y)
    neg = np.array([ctx.neg(x) for x in range(q)], np.int16)
    inv = np.array([0] + [ctx.inv(x) for x in range(1, q)], np.int16)
    tables = (add, mul, neg, inv)
    _TABLE_CACHE[ctx.spec] = tables
    return tables


def _remark44_set_counts(ctx: Field, n: int, k: int, sets_arr: np.ndarray) -> np.ndarray:
    """Per-evaluation-set tally of eta pairs passing the closed form.

    sets_arr has shape (B, n); returns a (B,) int64 vector.
    """
    add, mul, neg, inv = _field_tables(ctx)
    q = ctx.q
    bsz = sets_arr.shape[0]
    idx = _subset_indices(n, k)
    vals = sets_arr[:, idx]  # (B, S, k)

    e1 = vals[:, :, 0]
    ek = vals[:, :, 0]
    for j in range(1, k):
        e1 = add[e1, vals[:, :, j]]
        ek = mul[ek, vals[:, :, j]]
    # e_{k-1} = sum over j of the product with position j left out
    ones = np.ones(vals.shape[:2], np.int16)
    pre = [ones]
    for j in range(k - 1):
        pre.append(mul[pre[-1], vals[:, :, j]])
    suf = [ones]
    for j in range(k - 1, 0, -1):
        suf.append(mul[suf[-1], vals[:, :, j]])
    suf.reverse()
    ekm1 = mul[pre[0], suf[0]]
    for j in range(1, k):
        ekm1 = add[ekm1, mul[pre[j], suf[j]]]

    sign_k = ctx.sign(k)
    u = mul[sign_k][ek]  # coefficient of eta1
    v = mul[sign_k][add[mul[ekm1, e1], neg[ek]]]  # coefficient of eta2
    w = mul[ek, ek]  # coefficient of eta1*eta2

    grid = np.zeros((bsz, q, q), bool)  # bad (eta1, eta2) pairs
    for h1 in range(1, q):
        slope = add[v, mul[w, h1]]  # expr = const + eta2 * slope
        const = add[1, neg[mul[u, h1]]]
        line = slope != 0
        bad = mul[neg[const], inv[slope]]
        mark = line & (bad != 0)
        if mark.any():
            bi, _ = np.nonzero(mark)
            grid[bi, h1, bad[mark]] = True
        dead = (~line) & (const == 0)  # expr is identically zero in eta2
        if dead.any():
            grid[np.unique(np.nonzero(dead)[0]), h1, 1:] = True
    return (q - 1) ** 2 - grid[:, 1:, 1:].reshape(bsz, -1).sum(axis=1)


def _bruteforce_set_count(ctx: Field, n: int, k: int, subset) -> int:
    count = 0
    for eta1 in range(1, ctx.q):
        for eta2 in range(1, ctx.q):
            code = MultiTwistedCode(
                ctx, TwistProfile(k, (1, 2), (0, 1), (eta1, eta2)), subset
            )
            if is_mds_bruteforce(LinearCodeView.of_code(code)).is_mds:
                count += 1
    return count


def _count_chunk(args) -> list[int]:
    """Per-set tallies for one contiguous chunk of evaluation sets."""
    q, n, k, criterion, chunk = args
    ctx = Field.of_order(q)
    if criterion == "bruteforce":
        return [_bruteforce_set_count(ctx, n, k, s) for s in chunk]
    out: list[int] = []
    sk = comb(n, k)
    # keep both the (B, S, k) value tensor and the (B, q, q) grids small
    batch = max(1, min(4_000_000 // max(1, sk * k), 8_000_000 // (q * q)))
    for i in range(0, len(chunk), batch):
        arr = np.array(chunk[i : i + batch], np.int16)
        out.extend(int(c) for c in _remark44_set_counts(ctx, n, k, arr))
    return out


def count_mds_double_twisted(
    task: EnumTask, histogram: bool = False, budget: int = ENUM_BUDGET
) -> EnumResult:
    """Number of (evaluation set, eta pair) combinations giving an MDS
    double-twisted code with twists (1, 2) and hooks (0, 1)."""
    if task.cost > budget:
        raise BudgetExceededError(
            f"task cost {task.cost} exceeds the enumeration budget {budget}"
        )
    start = time.perf_counter()
    sets = list(itertools.combinations(range(task.q), task.n))
    if task.seed:
        # load-balancing shuffle of the worker partition; the summed tally
        # is order-independent, so any seed gives the same result
        random.Random(task.seed).shuffle(sets)
    workers = min(task.workers, len(sets)) or 1
    if workers == 1:
        tallies = _count_chunk((task.q, task.n, task.k, task.criterion, sets))
    else:
        bounds = [round(i * len(sets) / workers) for i in range(workers + 1)]
        jobs = [
            (task.q, task.n, task.k, task.criterion, sets[bounds[i] : bounds[i + 1]])
            for i in range(workers)
        ]
        with get_context("fork").Pool(workers) as pool:
            parts = pool.map(_count_chunk, jobs)
        tallies = [c for part in parts for c in part]
    per_set = dict(zip(sets, tallies)) if histogram else None
    total = sum(tallies)
    assert total <= comb(task.q, task.n) * (task.q - 1) ** 2
    return EnumResult(
        total_count=total,
        criterion=task.criterion,
        elapsed=time.perf_counter() - start,
        per_set=per_set,
    )


# -- parameter search ---------------------------------------------------------


@dataclass(frozen=True)
class SearchHit:
    alpha: tuple[int, ...]
    eta: tuple[int, ...]
    method: str


def search_mds(
    ctx: Field,
    n: int,
    k: int,
    t=(1, 2),
    h=(0, 1),
    strategy: str = "exhaustive",
    alpha: Optional[tuple] = None,
    seed: int = 0,
    trials: int = 1000,
    prune: bool = True,
) -> Iterator[SearchHit]:
    """Stream of (alpha, eta) pairs whose code is MDS.

    For the double-twist layout the forbidden-eta exclusion sets act as a
    sound fast-accept: a pair avoiding every exclusion (at an eta2 where
    the rational exclusion is defined for every subset) is emitted without
    further work, everything else falls through to the closed-form check.
    Pruning never changes the emitted set.  Other layouts use the general
    subset-system criterion.
    """
    t, h = tuple(t), tuple(h)
    ell = len(t)
    TwistProfile(k, t, h, (ctx.one,) * ell)  # validate shape early
    if not k < n <= ctx.q:
        raise ValueError("need k < n <= q")
    if k - 1 + (t[-1] if t else 0) >= n:
        raise ValueError("degree bound violated: need k-1+t_ell < n")
    if alpha is not None:
        alpha = tuple(alpha)
        if len(alpha) != n:
            raise ValueError("fixed alpha must have length n")
    special = (t, h) == DOUBLE_TWIST

    def check(al, eta, fast_sets):
        if special:
            if prune and fast_sets is not None:
                iv_excl, guards = fast_sets
                if eta[1] not in iv_excl and eta[1] not in guards:
                    eta1_excl, _ = forbidden_eta_sets(ctx, al, k, eta[1])
                    if eta[0] not in eta1_excl:
                        return "forbidden_eta"
            v = remark44_is_mds(ctx, al, k, eta[0], eta[1])
            return v.method if v.is_mds else None
        code = MultiTwistedCode(ctx, TwistProfile(k, t, h, eta), al)
        return "theorem31" if theorem31_is_mds(code).is_mds else None

    def fast_sets_for(al):
        if not (special and prune):
            return None
        _, iv_excl = forbidden_eta_sets(ctx, al, k, ctx.one)
        return iv_excl, eta2_guard_values(ctx, al, k)

    if strategy == "exhaustive":
        alphas = [alpha] if alpha is not None else itertools.combinations(range(ctx.q), n)
        empty = True
        for al in alphas:
            empty = False
            al = tuple(al)
            fast = fast_sets_for(al)
            for eta in itertools.product(range(1, ctx.q), repeat=ell):
                method = check(al, eta, fast)
                if method:
                    yield SearchHit(al, eta, method)
        if empty:
            raise ValueError("empty search space")
    elif strategy == "random":
        if trials < 1:
            raise ValueError("empty search space: trials must be >= 1")
        rng = random.Random(seed)
        for _ in range(trials):
            al = alpha if alpha is not None else tuple(sorted(rng.sample(range(ctx.q), n)))
            eta = tuple(rng.randrange(1, ctx.q) for _ in range(ell))
            method = check(al, eta, fast_sets_for(al))
            if method:
                yield SearchHit(al, eta, method)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
