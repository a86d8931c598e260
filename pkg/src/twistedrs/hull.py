"""Hull dimension via Gram rank, and the constructive small-hull families.

For a full-rank generator G the hull C intersect C-dual has dimension
k - rank(G G^T); hull_report computes that rank-based dimension alongside
the direct row-space intersection and cross-asserts them.

The constructors place evaluation points on an order-k multiplicative
subgroup listed twice, the second copy scaled by the primitive element.
Power sums over the subgroup collapse (k if the exponent is a multiple of
k, else 0), which zeroes enough Gram entries to force a nontrivial hull:
a [2k, k] code when q is even, a [2k, k-1] code when q is odd.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCodeView, MultiTwistedCode, SubgroupOrigin, TwistProfile, generator_matrix, hull_direct
from .field import Field, FieldElement
from .linalg import Matrix


def power_sum_theta(ctx: Field, k: int, m: int) -> FieldElement:
    """Sum of m-th powers over the order-k subgroup of the multiplicative
    group: k (mod char) when k divides m, else 0.

    Computed by both the closed form and literal summation; they must
    agree, which is rechecked on every call since it is cheap.
    """
    if k < 1 or (ctx.q - 1) % k != 0:
        raise ValueError(f"k = {k} does not divide q - 1 = {ctx.q - 1}")
    closed = (k % ctx.p) if m % k == 0 else 0
    step = (ctx.q - 1) // k
    literal = ctx.sum(ctx.pow(ctx.pow(ctx.gamma, step * i), m) for i in range(1, k + 1))
    if literal != closed:
        raise AssertionError("power-sum closed form disagrees with literal summation")
    return closed


@dataclass(frozen=True)
class SubgroupEval:
    """Doubled subgroup evaluation vector: the order-k subgroup followed by
    its translate by the primitive element."""

    k: int
    alpha: tuple[FieldElement, ...]

    @property
    def base(self) -> tuple[FieldElement, ...]:
        return self.alpha[: self.k]


def subgroup_eval(ctx: Field, k: int) -> SubgroupEval:
    if k < 1 or (ctx.q - 1) % k != 0:
        raise ValueError(f"k = {k} does not divide q - 1 = {ctx.q - 1}")
    if k >= ctx.q - 1:
        raise ValueError(
            "k = q - 1 makes the scaled subgroup copy coincide with the first"
        )
    step = (ctx.q - 1) // k
    base = tuple(ctx.pow(ctx.gamma, step * i) for i in range(1, k + 1))
    alpha = base + tuple(ctx.mul(ctx.gamma, x) for x in base)
    if len(set(alpha)) != 2 * k:
        raise ValueError("subgroup evaluation points are not distinct")
    return SubgroupEval(k, alpha)


@dataclass(frozen=True)
class HullReport:
    code_dim: int
    gram_rank: int
    hull_dim_rank: int
    hull_dim_direct: int
    gram: Matrix
    hull_basis: Matrix

    @property
    def hull_dim(self) -> int:
        return self.hull_dim_rank


def hull_report(view: LinearCodeView) -> HullReport:
    gram = view.g.mat_mul(view.g.transpose())
    gram_rank = gram.rank()
    dim_rank = view.k - gram_rank
    dim_direct, basis = hull_direct(view)
    if dim_rank != dim_direct:
        raise AssertionError(
            f"hull dimension mismatch: k - rank(G G^T) = {dim_rank}, direct = {dim_direct}"
        )
    if not 0 <= dim_rank <= min(view.k, view.n - view.k):
        raise AssertionError("hull dimension outside [0, min(k, n-k)]")
    return HullReport(view.k, gram_rank, dim_rank, dim_direct, gram, basis)


# -- the two constructive families -------------------------------------------


def _a_block(ctx: Field, origin: SubgroupOrigin, beta: FieldElement, nrows: int) -> Matrix:
    pts = [ctx.mul(beta, x) for x in origin.alpha_base]
    return Matrix(ctx, [[ctx.pow(x, j) for x in pts] for j in range(nrows)])


def _b_block(ctx: Field, origin: SubgroupOrigin, beta: FieldElement, nrows: int) -> Matrix:
    pts = [ctx.mul(beta, x) for x in origin.alpha_base]
    rows = [[0] * origin.k for _ in range(nrows)]
    for tj, hj, ej in zip(origin.t, origin.h, origin.eta):
        d = origin.k - 1 + tj
        rows[hj] = [ctx.mul(ej, ctx.pow(x, d)) for x in pts]
    return Matrix(ctx, rows)


def _blocks_generator(ctx: Field, origin: SubgroupOrigin, nrows: int) -> Matrix:
    """[A_1 : A_gamma] + [B_1 : B_gamma], the proof-literal row layout."""
    out = []
    for r in range(nrows):
        row = []
        for beta in (ctx.one, ctx.gamma):
            a = _a_block(ctx, origin, beta, nrows).data[r]
            b = _b_block(ctx, origin, beta, nrows).data[r]
            row.extend(ctx.add(x, y) for x, y in zip(a, b))
        out.append(row)
    return Matrix(ctx, out)


def construct_even(ctx: Field, k: int, t, h, eta) -> MultiTwistedCode:
    """[2k, k] code over even q with guaranteed nontrivial hull.

    Needs k | q-1 with 1 < k < q-1, hooks starting above 0 and twists
    starting above 1 (these zero the first Gram row), and t_ell <= k so
    the degree bound holds at n = 2k.
    """
    t, h, eta = tuple(t), tuple(h), tuple(eta)
    if ctx.p != 2:
        raise ValueError("even-q construction requires characteristic 2")
    if k <= 1:
        raise ValueError("need k > 1")
    profile = TwistProfile(k, t, h, eta)  # shape and bound checks
    if not t:
        raise ValueError("need at least one twist")
    if h[0] <= 0:
        raise ValueError("need h_1 > 0")
    if t[0] <= 1:
        raise ValueError("need t_1 > 1")
    if t[-1] > k:
        raise ValueError("need t_ell <= n - k = k")
    sub = subgroup_eval(ctx, k)
    origin = SubgroupOrigin("even", k, t, h, eta, sub.base)
    code = MultiTwistedCode(ctx, profile, sub.alpha, origin)
    if generator_matrix(code) != _blocks_generator(ctx, origin, k):
        raise AssertionError("generator disagrees with the block construction")
    return code


def construct_odd(ctx: Field, k: int, t, h, eta) -> MultiTwistedCode:
    """[2k, k-1] code over odd q with guaranteed nontrivial hull.

    The k-1 generator rows carry powers 0..k-2 with the twist monomials
    eta_j (beta alpha)^{k-1+t_j} added at rows h_j; that equals the
    standard layout for dimension k-1 with every twist shifted up by one,
    so the returned code is an ordinary multi-twisted code.  Needs k | q-1
    with 2 < k < q-1, h_1 > 1, h_ell <= k-2 and t_ell < k.
    """
    t, h, eta = tuple(t), tuple(h), tuple(eta)
    if ctx.p == 2:
        raise ValueError("odd-q construction requires odd characteristic")
    if k <= 2:
        raise ValueError("need k > 2")
    if not t or not (len(t) == len(h) == len(eta)):
        raise ValueError("need at least one twist with matching hooks and coefficients")
    if h[0] <= 1:
        raise ValueError("need h_1 > 1")
    if h[-1] > k - 2:
        raise ValueError("need h_ell <= k - 2")
    if t[-1] >= k:
        raise ValueError("need t_ell < k")
    sub = subgroup_eval(ctx, k)
    origin = SubgroupOrigin("odd", k, t, h, eta, sub.base)
    shifted = TwistProfile(k - 1, tuple(tj + 1 for tj in t), h, eta)
    code = MultiTwistedCode(ctx, shifted, sub.alpha, origin)
    if generator_matrix(code) != _blocks_generator(ctx, origin, k - 1):
        raise AssertionError("generator disagrees with the block construction")
    return code


@dataclass(frozen=True)
class GramParts:
    """G G^T split along the proof's block decomposition."""

    a_one: Matrix  # A_1 A_1^T
    a_gamma: Matrix  # A_gamma A_gamma^T
    b_one: Matrix  # B_1 B_1^T
    b_gamma: Matrix  # B_gamma B_gamma^T
    aat_sum: Matrix
    bbt_sum: Matrix
    cross: Matrix  # A B^T + B A^T summed over both beta
    total: Matrix


def gram_decomposition(code: MultiTwistedCode) -> GramParts:
    if code.origin is None:
        raise ValueError("code was not built by a subgroup hull constructor")
    ctx, origin = code.ctx, code.origin
    nrows = origin.k if origin.parity == "even" else origin.k - 1
    prods = {}
    cross = None
    for beta in (ctx.one, ctx.gamma):
        a = _a_block(ctx, origin, beta, nrows)
        b = _b_block(ctx, origin, beta, nrows)
        prods[("a", beta)] = a.mat_mul(a.transpose())
        prods[("b", beta)] = b.mat_mul(b.transpose())
        ab = a.mat_mul(b.transpose())
        term = ab.add(ab.transpose())
        cross = term if cross is None else cross.add(term)
    aat = prods[("a", ctx.one)].add(prods[("a", ctx.gamma)])
    bbt = prods[("b", ctx.one)].add(prods[("b", ctx.gamma)])
    total = aat.add(bbt).add(cross)
    g = generator_matrix(code)
    if total != g.mat_mul(g.transpose()):
        raise AssertionError("gram decomposition parts do not sum to G G^T")
    return GramParts(
        prods[("a", ctx.one)],
        prods[("a", ctx.gamma)],
        prods[("b", ctx.one)],
        prods[("b", ctx.gamma)],
        aat,
        bbt,
        cross,
        total,
    )
