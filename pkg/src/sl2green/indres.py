"""Induction and restriction at the level of decompositions.

Ind_B^G on every U_{a,b}, Res_B^G on simples, projectives and walk modules,
the projective-decomposition solver on the SL2 side, and the lifting theorem
that recovers a full decomposition from composition factors plus the
restricted decomposition.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact, gtree
from .borel import decompose_projective_b, theta
from .correspondence import green_of_u, green_of_walk
from .gtree import c_abt, edge_to_simple, g_cartan
from .labels import (
    BDecomposition,
    GDecomposition,
    GSimpleLabel,
    InconsistentDataError,
    InternalConsistencyError,
    NotProjectiveError,
    ULabel,
    canonicalize,
    proj_g_dim,
    u_is_projective,
    validate_ulabel,
)

# A factor vector of a projective F[G]-module: map t in [1,p] -> multiplicity
# of V_t.  Plain dicts are used throughout.
FactorVectorG = dict


def res_simple_g(ctx, t):
    """Res of the simple V_t: the uniserial U_{p-t, t} (projective at t=p)."""
    p = ctx.p
    if not (1 <= t <= p):
        raise ValueError(f"t must lie in [1, {p}], got {t}")
    return validate_ulabel(ctx, p - t, t)


def ind_simple_b_factors(ctx, a):
    """Composition factors of Ind of S_a: the multiset {V_{a+1}, V_{p-a}}."""
    p = ctx.p
    a = a % (p - 1)
    out = Counter()
    out[GSimpleLabel(a + 1)] += 1
    out[GSimpleLabel(p - a)] += 1
    return dict(out)


def ell(ctx, a, b, t):
    """Multiplicity of V_t in Ind of U_{a,b}: theta(a,b,t-1) + theta(a,b,p-t)."""
    if not (1 <= t <= ctx.p):
        raise ValueError(f"t must lie in [1, {ctx.p}], got {t}")
    return theta(ctx, a, b, t - 1) + theta(ctx, a, b, ctx.p - t)


def decompose_projective_g(ctx, alpha):
    """Decompose a projective F[G]-module from its factor vector.

    n_p = alpha_p; per block the alpha values are ordered along the tree
    edges and multiplied by the exact inverse Cartan matrix.  Raises
    NotProjectiveError on a non-integral or negative solution.
    """
    p = ctx.p
    alpha = {t: alpha.get(t, 0) for t in range(1, p + 1)}
    if any(v < 0 for v in alpha.values()):
        raise NotProjectiveError("not a projective composition-factor vector")
    out = GDecomposition()
    out.add_proj(p, alpha[p])
    for i in (0, 1):
        gamma = g_cartan(ctx, i).Gamma
        simples = [edge_to_simple(ctx, i, j).t for j in range(1, ctx.half + 1)]
        kappa = [Fraction(alpha[t]) for t in simples]
        counts = exact.mat_vec([list(row) for row in gamma], kappa)
        for t, n in zip(simples, counts):
            if n.denominator != 1 or n < 0:
                raise NotProjectiveError("not a projective composition-factor vector")
            out.add_proj(t, int(n))
    return out


def ind_u(ctx, u):
    """Full decomposition of Ind of U_{a,b}.

    For b <= p-1 the non-projective part is the single Green correspondent;
    the projective rest is solved from alpha_t = ell - c_abt.  For b = p the
    induced module is projective with alpha_t = ell.
    """
    a, b = u.a % (ctx.p - 1), u.b
    alpha = {}
    for t in range(1, ctx.p + 1):
        alpha[t] = ell(ctx, a, b, t)
        if b <= ctx.p - 1:
            alpha[t] -= c_abt(ctx, a, b, t)
    try:
        out = decompose_projective_g(ctx, alpha)
    except NotProjectiveError as e:
        raise InternalConsistencyError(f"ind_u({u}): projective part failed: {e}")
    if b <= ctx.p - 1:
        out.add_walk(green_of_u(ctx, u), 1)
    return out


def res_projective_g(ctx, t):
    """Res of P_{V_t}: U_{0,p} for t in {1,p}, else U_{t-1,p} + U_{p-t,p}."""
    p = ctx.p
    if not (1 <= t <= p):
        raise ValueError(f"t must lie in [1, {p}], got {t}")
    out = BDecomposition()
    if t in (1, p):
        out.add(ULabel(0, p), 1)
    else:
        out.add(validate_ulabel(ctx, t - 1, p), 1)
        out.add(validate_ulabel(ctx, p - t, p), 1)
    return out


def res_walk(ctx, w):
    """Full decomposition of Res of M(i, l, s, eps).

    The non-projective part is the Green correspondent U_{a, L_i(l,s)}; the
    projective rest is solved from kappa_c = (factors of Res of each V_t,
    weighted by the walk's factor counts) minus theta(a, L, c).
    """
    w = canonicalize(ctx, w)
    u = green_of_walk(ctx, w)
    factors = gtree.walk_factors(ctx, w)
    p, i = ctx.p, w.i
    kappa_full = []
    for c in range(p - 1):
        mu = sum(
            m * theta(ctx, p - t, t, c) for t, m in factors.items()
        )  # Res V_t = U_{p-t, t}
        kappa_full.append(mu - theta(ctx, u.a, u.b, c))
    for c, v in enumerate(kappa_full):
        if c % 2 != i and v != 0:
            raise InternalConsistencyError(f"res_walk({w}): stray factor S_{c}")
    kappa = [kappa_full[i + 2 * j] for j in range(ctx.half)]
    try:
        out = decompose_projective_b(ctx, i, kappa)
    except NotProjectiveError as e:
        raise InternalConsistencyError(f"res_walk({w}): projective part failed: {e}")
    out.add(u, 1)
    return out


def lift_decomposition(ctx, ell_vec, res_mults):
    """Recover a full SL2-side decomposition from (factors, restriction).

    ``ell_vec`` maps t to the multiplicity of V_t in the module; ``res_mults``
    maps non-projective U-labels to their multiplicity in the restriction.
    The walks part is the Green lift of res_mults; the projective part is
    solved from alpha_t = ell_t - sum of walk factor contributions.
    Inconsistent inputs surface as InconsistentDataError.
    """
    p = ctx.p
    ell_vec = {int(t): int(n) for t, n in ell_vec.items()}
    for t, n in ell_vec.items():
        if not (1 <= t <= p) or n < 0:
            raise InconsistentDataError(
                f"bad factor entry t={t}, mult={n} (need t in [1,{p}], mult >= 0)"
            )
    out = GDecomposition()
    alpha = {t: ell_vec.get(t, 0) for t in range(1, p + 1)}
    for u, n in res_mults.items():
        if n < 0:
            raise ValueError("multiplicities must be non-negative")
        if u_is_projective(ctx, u):
            raise ValueError(f"{u} is projective; res_mults takes b <= p-1 labels only")
        if n == 0:
            continue
        out.add_walk(green_of_u(ctx, u), n)
        for t in range(1, p):
            alpha[t] -= n * c_abt(ctx, u.a, u.b, t)
    if any(v < 0 for v in alpha.values()):
        raise InconsistentDataError("factor counts are smaller than the walk part requires")
    try:
        out.merge(decompose_projective_g(ctx, alpha))
    except NotProjectiveError as e:
        raise InconsistentDataError(str(e))
    return out


def g_decomposition_dim(ctx, gd):
    dim = sum(n * gtree.walk_dim(ctx, w) for w, n in gd.walks.items())
    dim += sum(n * proj_g_dim(ctx, t) for t, n in gd.proj.items())
    return dim


@dataclass
class RegularCheckReport:
    p: int
    computed: GDecomposition
    expected: GDecomposition
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def induced_regular_check(ctx):
    """Check sum over a of Ind(U_{a,p}) = (+)_t P_{V_t}^t as multisets."""
    total = GDecomposition()
    for a in range(ctx.p - 1):
        total.merge(ind_u(ctx, ULabel(a, ctx.p)))
    expected = GDecomposition(proj={t: t for t in range(1, ctx.p + 1)})
    failures = []
    if total != expected:
        failures.append(f"got {total}, expected {expected}")
    return RegularCheckReport(ctx.p, total, expected, failures)
