"""Named invariant suite behind the ``verify`` command.

Every invariant is a function ctx -> list of failure strings (empty = pass).
The formula-only suite is cheap and runs for any small prime; the oracle
suite builds explicit matrix modules and is gated to p <= 7 by default.
"""

import random
from concurrent.futures import ProcessPoolExecutor

from . import borel, correspondence, gtree, indres, oracle
from .fpmat import inv_mod
from .labels import (
    BDecomposition,
    GSimpleLabel,
    PrimeContext,
    ULabel,
    WalkLabel,
    canonicalize,
    enumerate_canonical_walks,
    enumerate_nonprojective_ulabels,
    is_type_two,
    reverse_walk,
    validate_ulabel,
)


def _all_raw_quadruples(ctx):
    p = ctx.p
    for i in (0, 1):
        for l in range((p - 1) // 2):
            for s in range(1, p - l):
                for eps in (-1, 1):
                    yield WalkLabel(i, l, s, eps)


def _edge_multiset(ctx, w):
    return sorted(gtree.expand_walk(ctx, w)[0])


def inv_canonicalize_idempotent(ctx):
    fails = []
    for w in _all_raw_quadruples(ctx):
        c = canonicalize(ctx, w)
        if canonicalize(ctx, c) != c:
            fails.append(f"canonicalize not idempotent at {w}")
    return fails


def inv_canonicalize_preserves_walk(ctx):
    fails = []
    for w in _all_raw_quadruples(ctx):
        c = canonicalize(ctx, w)
        if _edge_multiset(ctx, w) != _edge_multiset(ctx, c):
            fails.append(f"edge multiset changed: {w} vs {c}")
        if gtree.L(ctx, w.i, w.l, w.s) != gtree.L(ctx, c.i, c.l, c.s):
            fails.append(f"L changed under canonicalization: {w} vs {c}")
    return fails


def inv_canonical_count(ctx):
    from .labels import count_nonprojective_per_block

    count_nonprojective_per_block(ctx)  # raises on mismatch
    return []


def inv_ulabel_reduction(ctx):
    fails = []
    for a in range(ctx.p - 1):
        for k in (-2, -1, 1, 3):
            if validate_ulabel(ctx, a + k * (ctx.p - 1), 1) != validate_ulabel(ctx, a, 1):
                fails.append(f"reduction fails at a={a}, k={k}")
    return fails


def _theta_bruteforce(ctx, a, b, c):
    return sum(1 for j in range(b) if (a + 2 * j - c) % (ctx.p - 1) == 0)


def inv_theta_bruteforce(ctx):
    p = ctx.p
    fails = []
    for a in range(p - 1):
        for b in range(1, p + 1):
            for c in range(p - 1):
                if borel.theta(ctx, a, b, c) != _theta_bruteforce(ctx, a, b, c):
                    fails.append(f"theta({a},{b},{c})")
    return fails


def inv_theta_projective_sums(ctx):
    p = ctx.p
    return [
        f"sum_c theta({a},p,c) != p"
        for a in range(p - 1)
        if sum(borel.theta(ctx, a, p, c) for c in range(p - 1)) != p
    ]


def _is_rational_identity(M):
    return all(M[i][j] == (1 if i == j else 0) for i in range(len(M)) for j in range(len(M)))


def inv_b_cartan_inverse(ctx):
    from . import exact

    fails = []
    for i in (0, 1):
        bc = borel.b_cartan(ctx, i)
        prod = exact.mat_mul([list(r) for r in bc.gamma], [list(r) for r in bc.delta])
        if not _is_rational_identity(prod):
            fails.append(f"gamma*delta != I in block {i}")
        if any(x.denominator != ctx.p for row in bc.delta for x in row):
            fails.append(f"delta denominators differ from p in block {i}")
    return fails


def inv_g_cartan_inverse(ctx):
    from . import exact

    fails = []
    for i in (0, 1):
        gc = gtree.g_cartan(ctx, i)
        prod = exact.mat_mul([list(r) for r in gc.B], [list(r) for r in gc.Gamma])
        if not _is_rational_identity(prod):
            fails.append(f"B*Gamma != I in block {i}")
        if any(gc.Gamma[r][c] != gc.Gamma[c][r] for r in range(ctx.half) for c in range(ctx.half)):
            fails.append(f"Gamma not symmetric in block {i}")
        if any(ctx.p % x.denominator != 0 for row in gc.Gamma for x in row):
            fails.append(f"Gamma denominator does not divide p in block {i}")
    return fails


def inv_omega2_orbits(ctx):
    fails = []
    for u in enumerate_nonprojective_ulabels(ctx):
        v = u
        for _ in range(ctx.half):
            v = borel.omega2(ctx, v)
        if v != u:
            fails.append(f"omega2^(p-1) != id at {u}")
        w = borel.omega2(ctx, u)
        if w.b != u.b:
            fails.append(f"omega2 changed b at {u}")
        bu, bw = borel.b_boundaries(ctx, u), borel.b_boundaries(ctx, w)
        if (bu.rim_distance, bu.simple_distance) != (bw.rim_distance, bw.simple_distance):
            fails.append(f"omega2 changed boundary distances at {u}")
    return fails


def inv_almost_split_balance(ctx):
    fails = []
    for u in enumerate_nonprojective_ulabels(ctx):
        seq = borel.almost_split(ctx, u)
        if seq.left.b + seq.right.b != sum(m.b for m in seq.middle):
            fails.append(f"dimension balance fails at {u}")
    return fails


def inv_b_boundary_lengths(ctx):
    fails = []
    for u in enumerate_nonprojective_ulabels(ctx):
        b = borel.b_boundaries(ctx, u)
        if b.rim_distance + b.simple_distance != ctx.p - 2:
            fails.append(f"path lengths at {u} do not sum to p-2")
    return fails


def inv_b_projective_roundtrip(ctx):
    rng = random.Random(ctx.p * 7919 + 11)
    fails = []
    for i in (0, 1):
        for _ in range(20):
            mults = [rng.randrange(4) for _ in range(ctx.half)]
            kappa = [
                sum(m * borel.theta(ctx, i + 2 * j, ctx.p, i + 2 * c) for j, m in enumerate(mults))
                for c in range(ctx.half)
            ]
            try:
                dec = borel.decompose_projective_b(ctx, i, kappa)
            except Exception as e:
                fails.append(f"solver failed on block {i} mults {mults}: {e}")
                continue
            want = BDecomposition(
                {ULabel((i + 2 * j) % (ctx.p - 1), ctx.p): m for j, m in enumerate(mults) if m}
            )
            if dec != want:
                fails.append(f"round trip failed: {mults} -> {dec}")
    return fails


def inv_walk_dim_congruence(ctx):
    fails = []
    for i in (0, 1):
        for w in enumerate_canonical_walks(ctx, i):
            dim = gtree.walk_dim(ctx, w)
            if dim % ctx.p != gtree.L(ctx, w.i, w.l, w.s) % ctx.p:
                fails.append(f"walk_dim mod p != L at {w}")
            total = sum(t * m for t, m in gtree.walk_factors(ctx, w).items())
            if total != dim:
                fails.append(f"factor dims != walk_dim at {w}")
    return fails


def inv_top_socle_partition(ctx):
    fails = []
    for i in (0, 1):
        for w in enumerate_canonical_walks(ctx, i):
            if w.s < 2:
                continue
            top, socle = gtree.walk_top_socle(ctx, w)
            merged = dict(top)
            for t, m in socle.items():
                merged[t] = merged.get(t, 0) + m
            if merged != gtree.walk_factors(ctx, w):
                fails.append(f"top+socle != factors at {w}")
    return fails


def inv_hooks_census(ctx):
    p = ctx.p
    fails = []
    nonsimple_total = 0
    for i in (0, 1):
        hooks = gtree.g_hooks(ctx, i)
        if len(hooks) != p - 1:
            fails.append(f"block {i}: {len(hooks)} hooks")
        sizes = {1: 0, p - 1: 0}
        for h in hooks:
            sizes[h.boundary] += 1
            if isinstance(h.label, WalkLabel):
                nonsimple_total += 1
        if sizes[1] != ctx.half or sizes[p - 1] != ctx.half:
            fails.append(f"block {i}: boundary split {sizes}")
    if nonsimple_total != 2 * (p - 2):
        fails.append(f"uniserial census: {nonsimple_total} != 2(p-2)")
    return fails


def inv_hook_boundaries_self(ctx):
    fails = []
    for i in (0, 1):
        for h in gtree.g_hooks(ctx, i):
            if isinstance(h.label, GSimpleLabel):
                t = h.label.t
                w = WalkLabel(i, gtree.simple_to_edge(ctx, t)[1] - 1, 1, -1)
            else:
                w = h.label
            sides = gtree.g_boundaries(ctx, w)
            if h.label not in sides:
                fails.append(f"{h.label} not among its own boundaries {sides}")
    return fails


def inv_c_abt_cross_route(ctx):
    p = ctx.p
    fails = []
    for a in range(p - 1):
        for b in range(1, p):
            for t in range(1, p + 1):
                lhs = gtree.c_abt(ctx, a, b, t)
                rhs = correspondence.c_abt_via_walk(ctx, a, b, t)
                if lhs != rhs:
                    fails.append(f"c_abt({a},{b},{t}): intervals {lhs} vs walk {rhs}")
    return fails


def inv_bijection(ctx):
    return correspondence.verify_bijection(ctx).failures


def inv_dimension_congruence(ctx):
    fails = []
    for u in enumerate_nonprojective_ulabels(ctx):
        w = correspondence.green_of_u(ctx, u)
        if gtree.L(ctx, w.i, w.l, w.s) != u.b:
            fails.append(f"L(green({u})) != b")
    return fails


def _boundary_key(ctx, label):
    """Boundary modules compare as canonical walks (simples as s=1 walks)."""
    if isinstance(label, GSimpleLabel):
        i, j = gtree.simple_to_edge(ctx, label.t)
        return WalkLabel(i, j - 1, 1, -1)
    return canonicalize(ctx, label)


def inv_boundary_compatibility(ctx):
    fails = []
    for u in enumerate_nonprojective_ulabels(ctx):
        w = correspondence.green_of_u(ctx, u)
        got = {_boundary_key(ctx, x) for x in gtree.g_boundaries(ctx, w)}
        bb = borel.b_boundaries(ctx, u)
        want = {
            _boundary_key(ctx, correspondence.green_of_u(ctx, bb.rim)),
            _boundary_key(ctx, correspondence.green_of_u(ctx, bb.simple)),
        }
        if got != want:
            fails.append(f"boundaries of green({u}) = {got} != green of B-boundaries {want}")
    return fails


def inv_hook_alignment(ctx):
    fails = []
    for i in (0, 1):
        hooks = {_boundary_key(ctx, h.label) for h in gtree.g_hooks(ctx, i)}
        images = set()
        for a in range(i, ctx.p - 1, 2):
            images.add(_boundary_key(ctx, correspondence.green_of_u(ctx, ULabel(a, 1))))
            images.add(_boundary_key(ctx, correspondence.green_of_u(ctx, ULabel(a, ctx.p - 1))))
        if hooks != images:
            fails.append(f"block {i}: hook set != green images of U(a,1), U(a,p-1)")
    return fails


def inv_flag_table(ctx):
    """Totality/uniqueness of the flag table, its static sumflag fold,
    and its rim-boundary column against the forward map."""
    fails = []
    for i in (0, 1):
        for w in enumerate_canonical_walks(ctx, i):
            if w.s == 1:
                continue
            rows = correspondence.matching_rows(ctx, w)
            if len(rows) != 1:
                fails.append(f"{w} matches {len(rows)} rows")
                continue
            u = correspondence.green_of_walk(ctx, w)
            rim = correspondence.rim_boundary_of_walk(ctx, w)
            want = correspondence.green_of_u(ctx, ULabel(u.a, ctx.p - 1))
            if rim != want:
                fails.append(f"rim column of {w}: {rim} != {want}")
    # sumflag fold: any flag tuple matching with sumflag 0 and 1 gets one a
    for iflag in (0, 1):
        for lflag in (0, 1, 2):
            for sflag in (0, 1):
                for eflag in (-1, 1):
                    rows_by_sum = []
                    for sumflag in (0, 1):
                        f = (iflag, lflag, sflag, eflag, sumflag)
                        hit = [
                            r
                            for r in correspondence._ROWS
                            if any(correspondence._pattern_matches(p_, f) for p_ in r.patterns)
                        ]
                        rows_by_sum.append(hit)
                    if [len(h) for h in rows_by_sum] != [1, 1]:
                        fails.append(f"flag combo {(iflag,lflag,sflag,eflag)} not uniquely matched")
                    elif rows_by_sum[0][0].a_of(ctx, 3, 2) != rows_by_sum[1][0].a_of(ctx, 3, 2):
                        fails.append(
                            f"sumflag 0/1 rows disagree on a for {(iflag,lflag,sflag,eflag)}"
                        )
    return fails


def inv_green_on_all_representatives(ctx):
    """The flag table yields the correct weight on every raw representative,
    with no canonicalization; both readings of a type-II walk agree."""
    fails = []
    for w in _all_raw_quadruples(ctx):
        u = correspondence.green_of_walk(ctx, w)
        if w.s >= 2:
            rows = correspondence.matching_rows(ctx, w)
            if len(rows) != 1:
                fails.append(f"raw label {w} matches {len(rows)} rows")
            elif rows[0].a_of(ctx, w.l, w.s) % (ctx.p - 1) != u.a:
                fails.append(f"raw table weight at {w} disagrees with {u}")
        if is_type_two(ctx, w):
            other = correspondence.green_of_walk(ctx, reverse_walk(ctx, w))
            if other != u:
                fails.append(f"{w} and its reversal map to {u} vs {other}")
    return fails


def inv_ind_dim_identity(ctx):
    fails = []
    for a in range(ctx.p - 1):
        for b in range(1, ctx.p + 1):
            u = ULabel(a, b)
            dec = indres.ind_u(ctx, u)
            if indres.g_decomposition_dim(ctx, dec) != (ctx.p + 1) * b:
                fails.append(f"dim ind({u}) != (p+1) b")
    return fails


def inv_res_dim_identity(ctx):
    fails = []
    for i in (0, 1):
        for w in enumerate_canonical_walks(ctx, i):
            dec = indres.res_walk(ctx, w)
            if dec.total_dim() != gtree.walk_dim(ctx, w):
                fails.append(f"dim res({w}) != walk dim")
    return fails


def inv_regular_module(ctx):
    return indres.induced_regular_check(ctx).failures


def inv_frobenius_containment(ctx):
    fails = []
    for u in enumerate_nonprojective_ulabels(ctx):
        dec = indres.ind_u(ctx, u)
        resdec = BDecomposition()
        for w, n in dec.walks.items():
            resdec.merge(indres.res_walk(ctx, w).scaled(n))
        for t, n in dec.proj.items():
            resdec.merge(indres.res_projective_g(ctx, t).scaled(n))
        nonproj = {lab: n for lab, n in resdec.mult.items() if lab.b != ctx.p}
        if nonproj != {u: 1}:
            fails.append(f"res(ind({u})) non-projective part is {nonproj}")
    return fails


def _random_gdecomposition(ctx, rng):
    from .labels import GDecomposition

    walks = {}
    pool = enumerate_canonical_walks(ctx, 0) + enumerate_canonical_walks(ctx, 1)
    for _ in range(rng.randrange(1, 5)):
        walks[rng.choice(pool)] = rng.randrange(1, 4)
    proj = {}
    for _ in range(rng.randrange(0, 4)):
        proj[rng.randrange(1, ctx.p + 1)] = rng.randrange(1, 3)
    return GDecomposition(walks, proj)


def _lift_inputs_of(ctx, gdec):
    ell_vec = {}
    for w, n in gdec.walks.items():
        for t, m in gtree.walk_factors(ctx, w).items():
            ell_vec[t] = ell_vec.get(t, 0) + n * m
    for t, n in gdec.proj.items():
        for s, m in gtree.projective_structure(ctx, t).alpha:
            ell_vec[s] = ell_vec.get(s, 0) + n * m
    res_mults = {}
    for w, n in gdec.walks.items():
        u = correspondence.green_of_walk(ctx, w)
        res_mults[u] = res_mults.get(u, 0) + n
    return ell_vec, res_mults


def inv_lift_roundtrip(ctx, n_cases=200):
    rng = random.Random(ctx.p * 104729 + 5)
    fails = []
    for _ in range(n_cases):
        gdec = _random_gdecomposition(ctx, rng)
        ell_vec, res_mults = _lift_inputs_of(ctx, gdec)
        lifted = indres.lift_decomposition(ctx, ell_vec, res_mults)
        if lifted != gdec:
            fails.append(f"lift round trip failed: {gdec} -> {lifted}")
    return fails


# --- oracle invariants (explicit matrices) ---

def inv_oracle_build_roundtrip(ctx):
    fails = []
    for a in range(ctx.p - 1):
        for b in range(1, ctx.p + 1):
            u = ULabel(a, b)
            dec = oracle.decompose_b_module(ctx, oracle.build_u(ctx, u))
            if dec != BDecomposition({u: 1}):
                fails.append(f"decompose(build({u})) = {dec}")
    return fails


def inv_oracle_simple_restriction(ctx):
    fails = []
    for t in range(1, ctx.p + 1):
        dec = oracle.decompose_b_module(ctx, oracle.restrict(ctx, oracle.build_simple_g(ctx, t)))
        want = BDecomposition({indres.res_simple_g(ctx, t): 1})
        if dec != want:
            fails.append(f"res V_{t}: {dec} != {want}")
    return fails


def inv_oracle_brauer_simples(ctx):
    fails = []
    for t in range(1, ctx.p + 1):
        got = oracle.brauer_factors_g(ctx, oracle.build_simple_g(ctx, t))
        if got != {t: 1}:
            fails.append(f"brauer(V_{t}) = {got}")
    return fails


def _formula_res_of_ind(ctx, u):
    dec = indres.ind_u(ctx, u)
    out = BDecomposition()
    for w, n in dec.walks.items():
        out.merge(indres.res_walk(ctx, w).scaled(n))
    for t, n in dec.proj.items():
        out.merge(indres.res_projective_g(ctx, t).scaled(n))
    return out


def inv_oracle_end_to_end(ctx):
    fails = []
    for a in range(ctx.p - 1):
        for b in range(1, ctx.p + 1):
            u = ULabel(a, b)
            ind = oracle.induce(ctx, oracle.build_u(ctx, u))
            got_ell = oracle.brauer_factors_g(ctx, ind)
            want_ell = {
                t: indres.ell(ctx, a, b, t)
                for t in range(1, ctx.p + 1)
                if indres.ell(ctx, a, b, t)
            }
            if got_ell != want_ell:
                fails.append(f"brauer(ind({u})) = {got_ell} != {want_ell}")
            got_res = oracle.decompose_b_module(ctx, oracle.restrict(ctx, ind))
            if got_res != _formula_res_of_ind(ctx, u):
                fails.append(f"res(ind({u})) mismatch against formulas")
    return fails


def inv_oracle_projective_detection(ctx):
    fails = []
    for a in range(ctx.p - 1):
        u = ULabel(a, ctx.p)
        dec = oracle.decompose_b_module(ctx, oracle.restrict(ctx, oracle.induce(ctx, oracle.build_u(ctx, u))))
        if any(lab.b != ctx.p for lab in dec.mult):
            fails.append(f"res(ind({u})) has a non-projective summand: {dec}")
    return fails


def inv_oracle_decomposition_stability(ctx):
    import numpy as np

    rng = random.Random(ctx.p * 31337 + 3)
    fails = []
    for _ in range(5):
        labels = [
            ULabel(rng.randrange(ctx.p - 1), rng.randrange(1, ctx.p + 1)) for _ in range(3)
        ]
        mods = [oracle.build_u(ctx, u) for u in labels]
        n = sum(m.dim for m in mods)
        g = np.zeros((n, n), dtype=np.int64)
        lam = np.zeros((n, n), dtype=np.int64)
        at = 0
        for m in mods:
            g[at:at + m.dim, at:at + m.dim] = m.mat_g
            lam[at:at + m.dim, at:at + m.dim] = m.mat_lambda
            at += m.dim
        summod = oracle.BMatrixModule(ctx.p, ctx.zeta, n, g, lam).validate()
        dec = oracle.decompose_b_module(ctx, summod)
        want = BDecomposition()
        for u in labels:
            want.add(u, 1)
        if dec != want:
            fails.append(f"direct sum {labels} decomposed as {dec}")
    return fails


def inv_oracle_transversal_independence(ctx):
    """Two different coset transversals give the same decomposition data."""
    rng = random.Random(77)
    xs = oracle.standard_transversal(ctx)
    alt = []
    for x in xs:
        k = rng.randrange(ctx.p - 1)
        m = rng.randrange(ctx.p)
        alpha = pow(ctx.zeta, k, ctx.p)
        b = oracle.m2(ctx.p, ((alpha, m), (0, inv_mod(alpha, ctx.p))))
        alt.append(oracle.m2_mul(ctx.p, x, b))
    fails = []
    for u in (ULabel(0, 1), ULabel(2, 3), ULabel(1, ctx.p - 1)):
        a_mod = oracle.induce(ctx, oracle.build_u(ctx, u))
        b_mod = oracle.induce(ctx, oracle.build_u(ctx, u), transversal=alt)
        if oracle.brauer_factors_g(ctx, a_mod) != oracle.brauer_factors_g(ctx, b_mod):
            fails.append(f"factor data differs between transversals at {u}")
        da = oracle.decompose_b_module(ctx, oracle.restrict(ctx, a_mod))
        db = oracle.decompose_b_module(ctx, oracle.restrict(ctx, b_mod))
        if da != db:
            fails.append(f"restricted decomposition differs between transversals at {u}")
    return fails


FORMULA_INVARIANTS = [
    ("canonicalize-idempotent", inv_canonicalize_idempotent),
    ("canonicalize-preserves-walk", inv_canonicalize_preserves_walk),
    ("canonical-count-per-block", inv_canonical_count),
    ("ulabel-reduction", inv_ulabel_reduction),
    ("theta-bruteforce", inv_theta_bruteforce),
    ("theta-projective-sums", inv_theta_projective_sums),
    ("b-cartan-inverse", inv_b_cartan_inverse),
    ("g-cartan-inverse", inv_g_cartan_inverse),
    ("omega2-orbits", inv_omega2_orbits),
    ("almost-split-balance", inv_almost_split_balance),
    ("b-boundary-lengths", inv_b_boundary_lengths),
    ("b-projective-roundtrip", inv_b_projective_roundtrip),
    ("walk-dim-congruence", inv_walk_dim_congruence),
    ("top-socle-partition", inv_top_socle_partition),
    ("hooks-census", inv_hooks_census),
    ("hook-boundaries-self", inv_hook_boundaries_self),
    ("c-abt-cross-route", inv_c_abt_cross_route),
    ("green-bijection", inv_bijection),
    ("dimension-congruence", inv_dimension_congruence),
    ("boundary-compatibility", inv_boundary_compatibility),
    ("hook-alignment", inv_hook_alignment),
    ("flag-table", inv_flag_table),
    ("green-on-all-representatives", inv_green_on_all_representatives),
    ("ind-dim-identity", inv_ind_dim_identity),
    ("res-dim-identity", inv_res_dim_identity),
    ("regular-module-identity", inv_regular_module),
    ("frobenius-containment", inv_frobenius_containment),
    ("lift-roundtrip", inv_lift_roundtrip),
]

ORACLE_INVARIANTS = [
    ("oracle-build-roundtrip", inv_oracle_build_roundtrip),
    ("oracle-simple-restriction", inv_oracle_simple_restriction),
    ("oracle-brauer-simples", inv_oracle_brauer_simples),
    ("oracle-end-to-end", inv_oracle_end_to_end),
    ("oracle-projective-detection", inv_oracle_projective_detection),
    ("oracle-decomposition-stability", inv_oracle_decomposition_stability),
    ("oracle-transversal-independence", inv_oracle_transversal_independence),
]

_BY_NAME = dict(FORMULA_INVARIANTS + ORACLE_INVARIANTS)


def _run_one(args):
    p, name = args
    ctx = PrimeContext(p)
    try:
        failures = _BY_NAME[name](ctx)
    except Exception as e:  # an invariant crashing is a failure with a reason
        failures = [f"exception: {type(e).__name__}: {e}"]
    return {
        "name": name,
        "p": p,
        "status": "pass" if not failures else "fail",
        "failures": [str(x) for x in failures[:10]],
    }


def run_suite(primes, with_oracle=False, jobs=1):
    """Run the suite over the given primes; returns a deterministic report."""
    tasks = []
    for p in primes:
        for name, _ in FORMULA_INVARIANTS:
            tasks.append((p, name))
        if with_oracle:
            for name, _ in ORACLE_INVARIANTS:
                tasks.append((p, name))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda r: (r["p"], r["name"]))
    failed = sum(1 for r in results if r["status"] == "fail")
    return {
        "invariants": results,
        "counts": {"pass": len(results) - failed, "fail": failed},
    }
