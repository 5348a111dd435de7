import random

import pytest

from sl2green import gtree
from sl2green.correspondence import green_of_walk
from sl2green.indres import (
    decompose_projective_g,
    ell,
    g_decomposition_dim,
    ind_simple_b_factors,
    ind_u,
    induced_regular_check,
    lift_decomposition,
    res_projective_g,
    res_simple_g,
    res_walk,
)
from sl2green.labels import (
    BDecomposition,
    GDecomposition,
    GSimpleLabel,
    InconsistentDataError,
    NotProjectiveError,
    PrimeContext,
    ULabel,
    WalkLabel,
    enumerate_canonical_walks,
    enumerate_nonprojective_ulabels,
)


class TestResSimple:
    def test_values(self, ctx5):
        assert res_simple_g(ctx5, 2) == ULabel(3, 2)
        assert res_simple_g(ctx5, 1) == ULabel(0, 1)
        assert res_simple_g(ctx5, 5) == ULabel(0, 5)


class TestIndSimpleB:
    def test_values(self, ctx5, ctx7):
        assert ind_simple_b_factors(ctx5, 0) == {GSimpleLabel(1): 1, GSimpleLabel(5): 1}
        assert ind_simple_b_factors(ctx5, 2) == {GSimpleLabel(3): 2}
        assert ind_simple_b_factors(ctx7, 5) == {GSimpleLabel(6): 1, GSimpleLabel(2): 1}


class TestEll:
    def test_projective(self, ctx5):
        assert [ell(ctx5, 0, 5, t) for t in (1, 3, 5)] == [3, 4, 3]
        total = sum(t * ell(ctx5, 0, 5, t) for t in range(1, 6))
        assert total == 30

    def test_simple(self, ctx5):
        assert [ell(ctx5, 0, 1, t) for t in (1, 2, 3, 4, 5)] == [1, 0, 0, 0, 1]

    def test_interior(self, ctx5):
        assert [ell(ctx5, 2, 3, t) for t in (1, 3, 5)] == [1, 4, 1]
        assert sum(t * ell(ctx5, 2, 3, t) for t in range(1, 6)) == 18

    def test_dim_identity(self, ctx_small):
        ctx = ctx_small
        for a in range(ctx.p - 1):
            for b in range(1, ctx.p + 1):
                total = sum(t * ell(ctx, a, b, t) for t in range(1, ctx.p + 1))
                assert total == (ctx.p + 1) * b


class TestProjectiveSolverG:
    def test_example(self, ctx5):
        dec = decompose_projective_g(ctx5, {1: 3, 3: 4, 5: 3})
        assert dec == GDecomposition(proj={1: 1, 3: 1, 5: 3})

    def test_single_projective_roundtrip(self, ctx5):
        alpha = dict(gtree.projective_structure(ctx5, 2).alpha)
        assert decompose_projective_g(ctx5, alpha) == GDecomposition(proj={2: 1})

    def test_rejects_simple(self, ctx5):
        with pytest.raises(NotProjectiveError):
            decompose_projective_g(ctx5, {1: 1})


class TestInd:
    def test_simple_picks_up_steinberg(self, ctx5):
        dec = ind_u(ctx5, ULabel(0, 1))
        assert dec == GDecomposition(walks={WalkLabel(0, 0, 1, -1): 1}, proj={5: 1})

    def test_projective_input(self, ctx5):
        dec = ind_u(ctx5, ULabel(0, 5))
        assert dec == GDecomposition(proj={1: 1, 3: 1, 5: 3})

    def test_interior(self, ctx5):
        dec = ind_u(ctx5, ULabel(2, 3))
        assert g_decomposition_dim(ctx5, dec) == 18
        assert dec.walks == {WalkLabel(0, 1, 1, -1): 1}

    def test_dim_identity(self, ctx_small):
        ctx = ctx_small
        for a in range(ctx.p - 1):
            for b in range(1, ctx.p + 1):
                dec = ind_u(ctx, ULabel(a, b))
                assert g_decomposition_dim(ctx, dec) == (ctx.p + 1) * b


class TestResProjective:
    def test_values(self, ctx5):
        assert res_projective_g(ctx5, 1) == BDecomposition({ULabel(0, 5): 1})
        assert res_projective_g(ctx5, 3) == BDecomposition({ULabel(2, 5): 2})
        assert res_projective_g(ctx5, 2) == BDecomposition({ULabel(1, 5): 1, ULabel(3, 5): 1})


class TestResWalk:
    def test_reflected_walk(self, ctx5):
        dec = res_walk(ctx5, WalkLabel(0, 0, 4, -1))
        assert dec == BDecomposition({ULabel(0, 3): 1, ULabel(2, 5): 1})

    def test_simple(self, ctx5):
        assert res_walk(ctx5, WalkLabel(0, 0, 1, -1)) == BDecomposition({ULabel(0, 1): 1})

    def test_loop_walk(self, ctx5):
        dec = res_walk(ctx5, WalkLabel(0, 1, 2, -1))
        assert dec == BDecomposition({ULabel(2, 1): 1, ULabel(2, 5): 1})
        assert dec.total_dim() == 6

    def test_dim_identity(self, ctx_small):
        ctx = ctx_small
        for i in (0, 1):
            for w in enumerate_canonical_walks(ctx, i):
                assert res_walk(ctx, w).total_dim() == gtree.walk_dim(ctx, w)


class TestLift:
    def test_walk_plus_projective(self, ctx5):
        dec = lift_decomposition(ctx5, {1: 4, 3: 3}, {ULabel(0, 3): 1})
        assert dec == GDecomposition(walks={WalkLabel(0, 0, 4, -1): 1}, proj={1: 1})

    def test_pure_projective(self, ctx5):
        assert lift_decomposition(ctx5, {5: 1}, {}) == GDecomposition(proj={5: 1})

    def test_rejects_inconsistent(self, ctx5):
        with pytest.raises(InconsistentDataError):
            lift_decomposition(ctx5, {1: 1}, {})

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_roundtrip_random(self, p):
        ctx = PrimeContext(p)
        rng = random.Random(p)
        pool = enumerate_canonical_walks(ctx, 0) + enumerate_canonical_walks(ctx, 1)
        for _ in range(100):
            gdec = GDecomposition()
            for _ in range(rng.randrange(1, 4)):
                gdec.add_walk(rng.choice(pool), rng.randrange(1, 3))
            for _ in range(rng.randrange(0, 3)):
                gdec.add_proj(rng.randrange(1, p + 1), rng.randrange(1, 3))
            ell_vec = {}
            for w, n in gdec.walks.items():
                for t, m in gtree.walk_factors(ctx, w).items():
                    ell_vec[t] = ell_vec.get(t, 0) + n * m
            for t, n in gdec.proj.items():
                for s, m in gtree.projective_structure(ctx, t).alpha:
                    ell_vec[s] = ell_vec.get(s, 0) + n * m
            res_mults = {}
            for w, n in gdec.walks.items():
                u = green_of_walk(ctx, w)
                res_mults[u] = res_mults.get(u, 0) + n
            assert lift_decomposition(ctx, ell_vec, res_mults) == gdec


class TestRegularModule:
    @pytest.mark.parametrize("p", [3, 5, 11])
    def test_regular_identity(self, p):
        report = induced_regular_check(PrimeContext(p))
        assert report.ok, report.failures


class TestFrobeniusConsistency:
    def test_res_of_ind_contains_input(self, ctx_small):
        ctx = ctx_small
        for u in enumerate_nonprojective_ulabels(ctx):
            gdec = ind_u(ctx, u)
            resdec = BDecomposition()
            for w, n in gdec.walks.items():
                resdec.merge(res_walk(ctx, w).scaled(n))
            for t, n in gdec.proj.items():
                resdec.merge(res_projective_g(ctx, t).scaled(n))
            nonproj = {lab: n for lab, n in resdec.mult.items() if lab.b != ctx.p}
            assert nonproj == {u: 1}
