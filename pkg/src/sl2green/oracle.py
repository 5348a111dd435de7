"""Brute-force verification through explicit matrix modules over F_p.

Modules are given by genuine representing matrices (left actions).  The
usual substitution action on homogeneous polynomials is a right action; it
is turned into a left action globally by acting with the inverse matrix, so
a weight that reads zeta^a on the right reads zeta^(-a) here.  The
Borel-side label conventions below account for that once, and every
closed-form identity then holds verbatim; the homomorphism property is
checked on random element pairs rather than trusted.

The decomposition of a B-module works on the graded nilpotent n = log(g):
conjugation by the torus generator scales n by zeta^2 exactly, so n shifts
lambda-weight spaces, and Jordan-chain multiplicities reduce to exact rank
arithmetic over F_p.  SL2-side composition factors come from eigenvalue
counts of the split and non-split torus generators (exact Brauer-character
data), solved as an integer linear system against the simple modules.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import exact, fpmat
from .labels import BDecomposition, ULabel


# --- 2x2 group elements as nested tuples mod p ---

def m2(p, rows):
    return tuple(tuple(int(x) % p for x in row) for row in rows)


def m2_mul(p, A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) % p for j in range(2))
        for i in range(2)
    )


def m2_det(p, A):
    return (A[0][0] * A[1][1] - A[0][1] * A[1][0]) % p


def m2_inv(p, A):
    if m2_det(p, A) != 1:
        raise ValueError("only determinant-1 matrices are inverted here")
    return m2(p, ((A[1][1], -A[0][1]), (-A[1][0], A[0][0])))


def gen_g(ctx):
    return m2(ctx.p, ((1, 1), (0, 1)))


def gen_lambda(ctx):
    return m2(ctx.p, ((ctx.zeta, 0), (0, fpmat.inv_mod(ctx.zeta, ctx.p))))


def gen_w(ctx):
    return m2(ctx.p, ((0, -1), (1, 0)))


@lru_cache(maxsize=None)
def _fp2_setup(p):
    """(nonresidue d, generator mu of the order-(p+1) subgroup of F_{p^2}^*)."""
    d = fpmat.find_nonresidue(p)
    mu = fpmat.fp2_element_of_order(p, d, p + 1)
    return d, mu


def gen_tau(ctx):
    """A group element of order p+1 (non-split torus generator)."""
    p = ctx.p
    d, mu = _fp2_setup(p)
    trace = (2 * mu[0]) % p  # mu + mu^p = 2x since w^p = -w
    tau = m2(p, ((0, -1), (1, trace)))
    return tau


@lru_cache(maxsize=None)
def _dlog_table(p, zeta):
    return {pow(zeta, k, p): k for k in range(p - 1)}


def random_sl2(p, rng):
    while True:
        a, b = int(rng.integers(p)), int(rng.integers(p))
        if a:
            c = int(rng.integers(p))
            d = (1 + b * c) * fpmat.inv_mod(a, p) % p
            return m2(p, ((a, b), (c, d)))
        if b:
            c = (-fpmat.inv_mod(b, p)) % p
            return m2(p, ((0, b), (c, int(rng.integers(p)))))


@dataclass
class BMatrixModule:
    """A B-module by its matrices for g (unipotent) and lambda (torus)."""

    p: int
    zeta: int
    dim: int
    mat_g: np.ndarray
    mat_lambda: np.ndarray

    def validate(self):
        p, n = self.p, self.dim
        I = fpmat.eye(n)
        if not np.array_equal(fpmat.mat_pow(self.mat_g, p, p), I):
            raise AssertionError("g matrix does not have order dividing p")
        if not np.array_equal(fpmat.mat_pow(self.mat_lambda, p - 1, p), I):
            raise AssertionError("lambda matrix does not have order dividing p-1")
        lam_inv = fpmat.mat_pow(self.mat_lambda, p - 2, p)
        lhs = self.mat_lambda @ self.mat_g @ lam_inv % p
        rhs = fpmat.mat_pow(self.mat_g, pow(self.zeta, 2, p), p)
        if not np.array_equal(lhs, rhs):
            raise AssertionError("semidirect-product relation fails")
        return self

    def evaluate_b(self, b_elt):
        """Matrix of an arbitrary upper-triangular element, via b = t * u."""
        p = self.p
        if b_elt[1][0] % p != 0:
            raise ValueError(f"{b_elt} is not upper triangular")
        alpha, beta = b_elt[0][0] % p, b_elt[0][1] % p
        k = _dlog_table(p, self.zeta)[alpha]
        x = beta * fpmat.inv_mod(alpha, p) % p
        return fpmat.mat_pow(self.mat_lambda, k, p) @ fpmat.mat_pow(self.mat_g, x, p) % p


def build_u(ctx, u):
    """Explicit matrices for U_{a,b}: socle-to-top torus weights a, a+2, ...

    g acts as the truncated exponential of the down-shift nilpotent, which
    is the unique scaling compatible with the semidirect relation.
    """
    p, a, b = ctx.p, u.a % (ctx.p - 1), u.b
    N = np.eye(b, k=1, dtype=np.int64)
    mat_g = fpmat.nilpotent_exp(N, p)
    # left-action weight of S_c is zeta^(-c)
    diag = [pow(ctx.zeta, (-(a + 2 * j)) % (p - 1), p) for j in range(b)]
    mat_lambda = np.diag(np.array(diag, dtype=np.int64))
    return BMatrixModule(p, ctx.zeta, b, mat_g, mat_lambda).validate()


@dataclass
class GMatrixModule:
    """An SL2(F_p)-module by a group-element evaluator."""

    p: int
    zeta: int
    dim: int
    evaluate_raw: object
    _cache: dict = field(default_factory=dict, repr=False)

    def evaluate(self, elt):
        elt = m2(self.p, elt)
        if elt not in self._cache:
            self._cache[elt] = self.evaluate_raw(elt)
        return self._cache[elt]

    @property
    def mat_g(self):
        return self.evaluate(((1, 1), (0, 1)))

    @property
    def mat_lambda(self):
        return self.evaluate(((self.zeta, 0), (0, fpmat.inv_mod(self.zeta, self.p))))

    @property
    def mat_w(self):
        return self.evaluate(((0, -1), (1, 0)))

    def validate(self, n_pairs=100, seed=None):
        """Homomorphism property on random element pairs (exact check)."""
        p = self.p
        if seed is None:
            seed = p * 1000003 + self.dim
        rng = np.random.default_rng(seed)
        ident = m2(p, ((1, 0), (0, 1)))
        if not np.array_equal(self.evaluate(ident), fpmat.eye(self.dim)):
            raise AssertionError("identity does not act as the identity matrix")
        for _ in range(n_pairs):
            A, B = random_sl2(p, rng), random_sl2(p, rng)
            lhs = self.evaluate_raw(m2_mul(p, A, B))
            rhs = self.evaluate(A) @ self.evaluate(B) % p
            if not np.array_equal(lhs, rhs):
                raise AssertionError(f"rho({A} * {B}) != rho({A}) rho({B})")
        return self


def _binom_coeffs(p, alpha, beta, e):
    """Coefficients of (alpha x + beta y)^e by ascending y-degree, mod p."""
    return [math.comb(e, j) * pow(alpha, e - j, p) * pow(beta, j, p) % p for j in range(e + 1)]


def build_simple_g(ctx, t):
    """The simple V_t: homogeneous degree t-1 polynomials in x, y.

    The substitution action of the inverse matrix is expanded through
    binomial convolution; basis is x^(t-1), x^(t-2) y, ..., y^(t-1).
    """
    p = ctx.p
    if not (1 <= t <= p):
        raise ValueError(f"t must lie in [1, {p}], got {t}")
    n = t - 1

    def evaluate(elt):
        (a, b), (c, d) = m2_inv(p, elt)
        out = np.zeros((t, t), dtype=np.int64)
        for k in range(t):
            left = _binom_coeffs(p, a, b, n - k)
            right = _binom_coeffs(p, c, d, k)
            col = np.zeros(t, dtype=np.int64)
            for j1, c1 in enumerate(left):
                for j2, c2 in enumerate(right):
                    col[j1 + j2] = (col[j1 + j2] + c1 * c2) % p
            out[:, k] = col
        return out

    return GMatrixModule(p, ctx.zeta, t, evaluate).validate()


def standard_transversal(ctx):
    """Coset representatives of G/B: one per point of the projective line."""
    p = ctx.p
    return [m2(p, ((1, 0), (z, 1))) for z in range(p)] + [gen_w(ctx)]


def induce(ctx, bm, transversal=None):
    """Ind_B^G of a B-module: dimension (p+1) * dim, block permutation action."""
    p = ctx.p
    xs = standard_transversal(ctx) if transversal is None else [m2(p, x) for x in transversal]
    if len(xs) != p + 1:
        raise ValueError(f"a transversal of G/B has {p + 1} elements")

    def point_of(x):
        v0, v1 = x[0][0] % p, x[1][0] % p
        return (v1 * fpmat.inv_mod(v0, p) % p) if v0 else p

    point_index = {point_of(x): idx for idx, x in enumerate(xs)}
    if len(point_index) != p + 1:
        raise ValueError("transversal does not hit every coset exactly once")
    n = bm.dim

    def evaluate(elt):
        out = np.zeros((n * (p + 1), n * (p + 1)), dtype=np.int64)
        for i, xi in enumerate(xs):
            Axi = m2_mul(p, elt, xi)
            j = point_index[point_of(Axi)]
            b_elt = m2_mul(p, m2_inv(p, xs[j]), Axi)
            out[j * n:(j + 1) * n, i * n:(i + 1) * n] = bm.evaluate_b(b_elt)
        return out

    return GMatrixModule(p, ctx.zeta, n * (p + 1), evaluate).validate()


def restrict(ctx, gm):
    """Forget down to the (g, lambda) generators; relations re-asserted."""
    return BMatrixModule(
        ctx.p, ctx.zeta, gm.dim, gm.evaluate(gen_g(ctx)), gm.evaluate(gen_lambda(ctx))
    ).validate()


def decompose_b_module(ctx, bm):
    """Exact multiset of U_{a,b} summands of an explicit B-module.

    Works on nt = log(mat_g), which satisfies lambda nt lambda^{-1} =
    zeta^2 nt exactly and therefore shifts lambda-weight spaces by 2.  The
    number of chains with socle weight exponent e and length >= b equals
    dim(ker nt  intersect  nt^(b-1) W_{e-2(b-1)}), so the multiplicities are
    plain rank arithmetic.  Socle weight exponent e names the label a = -e.
    """
    p, n = ctx.p, bm.dim
    nt = fpmat.nilpotent_log(bm.mat_g, p)
    weight_space = {}
    for e in range(p - 1):
        lam = pow(ctx.zeta, e, p)
        weight_space[e] = fpmat.nullspace((bm.mat_lambda - lam * fpmat.eye(n)) % p, p)
    if sum(W.shape[1] for W in weight_space.values()) != n:
        raise AssertionError("lambda matrix is not semisimple over F_p")
    kernel = fpmat.nullspace(nt, p)
    powers = [fpmat.eye(n)]
    while powers[-1].any() and len(powers) <= p:
        powers.append(powers[-1] @ nt % p)
    out = BDecomposition()
    for e in range(p - 1):
        q = []
        for b in range(1, p + 2):
            if b - 1 >= len(powers) or not powers[b - 1].any():
                q.append(0)
                continue
            source = weight_space[(e - 2 * (b - 1)) % (p - 1)]
            image = powers[b - 1] @ source % p
            q.append(fpmat.column_space_intersection_dim(kernel, image, p))
        for b in range(1, p + 1):
            mult = q[b - 1] - q[b]
            if mult < 0:
                raise AssertionError("negative chain multiplicity; decomposition bug")
            if mult:
                out.add(ULabel((-e) % (p - 1), b), mult)
    if out.total_dim() != n:
        raise AssertionError("decomposition dimensions do not add up")
    _check_lambda_census(ctx, bm, out, weight_space)
    return out


def _check_lambda_census(ctx, bm, dec, weight_space):
    p = ctx.p
    census = {e: 0 for e in range(p - 1)}
    for label, mult in dec.mult.items():
        for j in range(label.b):
            census[(-(label.a + 2 * j)) % (p - 1)] += mult
    measured = {e: W.shape[1] for e, W in weight_space.items()}
    if census != measured:
        raise AssertionError(f"lambda-eigenvalue census mismatch: {census} vs {measured}")


def _weight_counts(t, modulus):
    counts = [0] * modulus
    for k in range(t):
        counts[(t - 1 - 2 * k) % modulus] += 1
    return counts


def brauer_factors_g(ctx, gm):
    """Composition factors of an SL2-module from torus eigenvalue counts.

    Eigenvalue multisets of the split torus generator (over F_p) and the
    non-split one (over F_{p^2}) are exact Brauer-character data and are
    additive in composition series; the factor multiplicities are the unique
    integer solution of the resulting linear system.
    """
    p, n = ctx.p, gm.dim
    d, mu = _fp2_setup(p)
    lam = gm.evaluate(gen_lambda(ctx))
    counts_split = []
    for j in range(p - 1):
        ev = pow(ctx.zeta, j, p)
        counts_split.append(
            fpmat.nullspace((lam - ev * fpmat.eye(n)) % p, p).shape[1]
        )
    if sum(counts_split) != n:
        raise AssertionError("split torus matrix is not semisimple")
    tau = gm.evaluate(gen_tau(ctx))
    counts_nonsplit = []
    for j in range(p + 1):
        x, y = fpmat.fp2_pow(mu, j, p, d)
        X = (tau - x * fpmat.eye(n)) % p
        Y = (-y * fpmat.eye(n)) % p
        counts_nonsplit.append(fpmat.fp2_kernel_dim(X, Y, p, d))
    if sum(counts_nonsplit) != n:
        raise AssertionError("non-split torus matrix is not semisimple over F_{p^2}")
    rows, rhs = [], []
    for j in range(p - 1):
        rows.append([_weight_counts(t, p - 1)[j] for t in range(1, p + 1)])
        rhs.append(counts_split[j])
    for j in range(p + 1):
        rows.append([_weight_counts(t, p + 1)[j] for t in range(1, p + 1)])
        rhs.append(counts_nonsplit[j])
    try:
        solution = exact.solve_unique(rows, rhs)
    except ValueError as e:
        raise AssertionError(f"factor system not uniquely solvable: {e}")
    factors = {}
    for t, value in zip(range(1, p + 1), solution):
        if value.denominator != 1 or value < 0:
            raise AssertionError(f"non-integral factor multiplicity for V_{t}: {value}")
        if value:
            factors[t] = int(value)
    if sum(t * m for t, m in factors.items()) != n:
        raise AssertionError("factor dimensions do not add up")
    return factors
