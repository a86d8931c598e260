"""Twisted polynomial spaces, code construction, and brute-force analyzers.

A twist profile (k, t, h, eta) augments the degree-< k message polynomial
a_0 + ... + a_{k-1} x^{k-1} with one extra monomial eta_j * a_{h_j} *
x^{k-1+t_j} per twist.  Evaluating the augmented polynomials at n distinct
field points gives the code; the generator matrix is the plain power
matrix with row h_j replaced by alpha^{h_j} + eta_j alpha^{k-1+t_j}.

The brute-force analyzers here (minimum distance by message scan, MDS by
k-column minors, dual and hull by kernel computations) are the ground
truth the structural criteria in mds-criteria are validated against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Optional

from .field import Field, FieldElement
from .linalg import Matrix, row_space_intersection


class BudgetExceededError(RuntimeError):
    """An exhaustive scan would exceed its configured budget.

    Raised instead of silently truncating: exactness is the product, so a
    partial answer is a bug, not a result.
    """


DEFAULT_SCAN_BUDGET = 10**7


@dataclass(frozen=True)
class TwistProfile:
    """Twist/hook data (k, t, h, eta); ell = 0 means a plain RS profile."""

    k: int
    t: tuple[int, ...] = ()
    h: tuple[int, ...] = ()
    eta: tuple[FieldElement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(self.t))
        object.__setattr__(self, "h", tuple(self.h))
        object.__setattr__(self, "eta", tuple(self.eta))
        if self.k < 1:
            raise ValueError("dimension parameter k must be >= 1")
        if not (len(self.t) == len(self.h) == len(self.eta)):
            raise ValueError("t, h, eta must have equal length")
        if any(self.t[i] >= self.t[i + 1] for i in range(len(self.t) - 1)):
            raise ValueError("twists must be strictly increasing")
        if self.t and self.t[0] < 1:
            raise ValueError("twists must be >= 1")
        if any(self.h[i] >= self.h[i + 1] for i in range(len(self.h) - 1)):
            raise ValueError("hooks must be strictly increasing")
        if self.h and not (0 <= self.h[0] and self.h[-1] <= self.k - 1):
            raise ValueError("hooks must satisfy 0 <= h_1 < ... < h_ell <= k-1")
        if any(e == 0 for e in self.eta):
            raise ValueError("every eta_i must be nonzero")

    @property
    def ell(self) -> int:
        return len(self.t)

    @property
    def max_degree(self) -> int:
        return self.k - 1 + self.t[-1] if self.t else self.k - 1


def check_eval_vector(ctx: Field, alpha) -> tuple[FieldElement, ...]:
    alpha = tuple(alpha)
    if len(set(alpha)) != len(alpha):
        raise ValueError("evaluation points must be pairwise distinct")
    if len(alpha) > ctx.q:
        raise ValueError("more evaluation points than field elements")
    if any(not 0 <= x < ctx.q for x in alpha):
        raise ValueError("evaluation point outside the field")
    return alpha


@dataclass(frozen=True)
class SubgroupOrigin:
    """Provenance for codes built on doubled multiplicative-subgroup points."""

    parity: str  # "even" or "odd"
    k: int  # subgroup order
    t: tuple[int, ...]
    h: tuple[int, ...]
    eta: tuple[FieldElement, ...]
    alpha_base: tuple[FieldElement, ...]  # the order-k subgroup listing


@dataclass(frozen=True)
class MultiTwistedCode:
    ctx: Field
    profile: TwistProfile
    alpha: tuple[FieldElement, ...]
    origin: Optional[SubgroupOrigin] = dc_field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_eval_vector(self.ctx, self.alpha))
        if self.profile.k >= self.n:
            raise ValueError("need k < n")
        if self.profile.max_degree >= self.n:
            raise ValueError("degree bound violated: need k-1+t_ell < n")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def dim(self) -> int:
        return self.profile.k


def twisted_poly(ctx: Field, profile: TwistProfile, msg) -> list[FieldElement]:
    """Coefficients (ascending, length k + t_ell) of the twisted polynomial
    carrying message msg."""
    msg = list(msg)
    if len(msg) != profile.k:
        raise ValueError(f"message length {len(msg)} != k = {profile.k}")
    coeffs = [0] * (profile.max_degree + 1)
    coeffs[: profile.k] = msg
    for tj, hj, ej in zip(profile.t, profile.h, profile.eta):
        d = profile.k - 1 + tj
        coeffs[d] = ctx.add(coeffs[d], ctx.mul(ej, msg[hj]))
    return coeffs


def eval_poly(ctx: Field, coeffs, x: FieldElement) -> FieldElement:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def generator_matrix(code: MultiTwistedCode) -> Matrix:
    """The k x n generator: row i is alpha^i pointwise, with row h_j
    carrying the extra eta_j alpha^{k-1+t_j} term."""
    ctx, pr = code.ctx, code.profile
    rows = [[ctx.pow(x, i) for x in code.alpha] for i in range(pr.k)]
    for tj, hj, ej in zip(pr.t, pr.h, pr.eta):
        d = pr.k - 1 + tj
        rows[hj] = [
            ctx.add(base, ctx.mul(ej, ctx.pow(x, d)))
            for base, x in zip(rows[hj], code.alpha)
        ]
    return Matrix(ctx, rows)


def encode(code: MultiTwistedCode, msg) -> list[FieldElement]:
    coeffs = twisted_poly(code.ctx, code.profile, msg)
    return [eval_poly(code.ctx, coeffs, x) for x in code.alpha]


class LinearCodeView:
    """Uniform carrier for any linear code given by a full-rank generator."""

    def __init__(self, g: Matrix):
        self.g = g
        self.n = g.cols
        self.k = g.rows
        if g.rank() != self.k:
            raise ValueError("generator matrix is not full rank")
        self.d: Optional[int] = None  # cached once computed

    @classmethod
    def of_code(cls, code: MultiTwistedCode) -> "LinearCodeView":
        return cls(generator_matrix(code))

    @property
    def ctx(self) -> Field:
        return self.g.ctx


@dataclass(frozen=True)
class MdsVerdict:
    is_mds: bool
    method: str  # bruteforce | theorem31 | remark44 | theorem42
    witness: Optional[tuple[int, ...]] = None  # failing column subset, if any

    def __bool__(self):
        return self.is_mds


def min_distance_bruteforce(view: LinearCodeView, budget: int = DEFAULT_SCAN_BUDGET) -> int:
    """Exact minimum Hamming weight over all q^k - 1 nonzero messages."""
    ctx = view.ctx
    if ctx.q**view.k > budget:
        raise BudgetExceededError(
            f"{ctx.q}^{view.k} messages exceed the scan budget {budget}"
        )
    rows = view.g.data
    best = view.n + 1
    for msg in itertools.product(range(ctx.q), repeat=view.k):
        word = None
        for coef, row in zip(msg, rows):
            if coef == 0:
                continue
            term = row if coef == ctx.one else [ctx.mul(coef, x) for x in row]
            word = term if word is None else [ctx.add(a, b) for a, b in zip(word, term)]
        if word is None:
            continue
        w = sum(1 for c in word if c)
        if w < best:
            best = w
            if best == 1:
                break
    view.d = best
    return best


def is_mds_bruteforce(view: LinearCodeView, budget: int = DEFAULT_SCAN_BUDGET) -> MdsVerdict:
    """MDS iff every k-subset of generator columns is nonsingular."""
    if comb(view.n, view.k) > budget:
        raise BudgetExceededError(
            f"C({view.n},{view.k}) column subsets exceed the scan budget {budget}"
        )
    all_rows = range(view.k)
    for cols in itertools.combinations(range(view.n), view.k):
        if not view.g.submatrix(all_rows, cols).is_nonsingular():
            return MdsVerdict(False, "bruteforce", cols)
    return MdsVerdict(True, "bruteforce")


def dual_code(view: LinearCodeView) -> LinearCodeView:
    """Generator of the dual: a basis of the right kernel of G."""
    h = view.g.null_space()
    if h.rows != view.n - view.k:
        raise ValueError("kernel dimension mismatch")  # unreachable for full-rank G
    return LinearCodeView(h)


def hull_direct(view: LinearCodeView) -> tuple[int, Matrix]:
    """(dimension, basis rows) of C intersected with its dual."""
    h = dual_code(view)
    basis = row_space_intersection(view.g, h.g)
    return basis.rows, basis
