from fractions import Fraction

import pytest

from sl2green import exact
from sl2green.correspondence import c_abt_via_walk
from sl2green.gtree import (
    L,
    brauer_tree,
    c_abt,
    edge_to_simple,
    expand_walk,
    g_boundaries,
    g_cartan,
    g_hooks,
    projective_structure,
    simple_to_edge,
    walk_dim,
    walk_factors,
    walk_top_socle,
)
from sl2green.labels import (
    GSimpleLabel,
    PrimeContext,
    WalkLabel,
    enumerate_canonical_walks,
)


class TestTreeLayout:
    def test_edge_labels(self, ctx5, ctx7):
        assert edge_to_simple(ctx5, 0, 2) == GSimpleLabel(3)
        # block-1 edge order at p=5 is V_4, V_2: t = p-j for odd j puts V_4 first
        assert simple_to_edge(ctx5, 4) == (1, 1)
        assert simple_to_edge(ctx5, 2) == (1, 2)
        assert simple_to_edge(ctx7, 1) == (0, 1)

    def test_mutually_inverse(self, ctx_small):
        ctx = ctx_small
        for t in range(1, ctx.p):
            i, j = simple_to_edge(ctx, t)
            assert edge_to_simple(ctx, i, j) == GSimpleLabel(t)

    def test_rejects_semisimple_block(self, ctx5):
        with pytest.raises(ValueError):
            simple_to_edge(ctx5, 5)

    def test_tree_ends(self, ctx5, ctx7):
        # p=5: vareps=+1, trees end at V_3 / V_2; p=7: vareps=-1, V_3 / V_4
        assert brauer_tree(ctx5, 0).edges == (1, 3)
        assert brauer_tree(ctx5, 1).edges == (4, 2)
        assert brauer_tree(ctx7, 0).edges == (1, 5, 3)
        assert brauer_tree(ctx7, 1).edges == (6, 2, 4)


class TestExpandWalk:
    def test_reflection(self, ctx5):
        edges, vertices = expand_walk(ctx5, WalkLabel(0, 0, 4, -1))
        assert edges == [1, 2, 2, 1]
        assert vertices == [1, 2, 3, 2, 1]

    def test_loop_at_exceptional(self, ctx5):
        assert expand_walk(ctx5, WalkLabel(0, 1, 2, -1))[0] == [2, 2]

    def test_straight(self, ctx7):
        assert expand_walk(ctx7, WalkLabel(1, 0, 3, 1))[0] == [1, 2, 3]


class TestL:
    def test_values(self, ctx5):
        assert L(ctx5, 0, 0, 1) == 1
        assert L(ctx5, 0, 0, 4) == 3
        # the walk M(1,0,2,eps) carries V_4, V_2: dimension 6 = 1 mod 5
        assert L(ctx5, 1, 0, 2) == 1

    def test_congruence_exhaustive(self, ctx_small):
        ctx = ctx_small
        for i in (0, 1):
            for w in enumerate_canonical_walks(ctx, i):
                assert walk_dim(ctx, w) % ctx.p == L(ctx, w.i, w.l, w.s) % ctx.p


class TestWalkFactors:
    def test_dim(self, ctx5, ctx7):
        assert walk_dim(ctx5, WalkLabel(0, 0, 4, -1)) == 8
        assert walk_dim(ctx5, WalkLabel(1, 0, 1, -1)) == 4
        # p=7 block 0 edges carry V_1, V_5, V_3: edges (2,3) give 5+3
        assert walk_dim(ctx7, WalkLabel(0, 1, 2, 1)) == 8

    def test_factors(self, ctx5):
        assert walk_factors(ctx5, WalkLabel(0, 0, 4, -1)) == {1: 2, 3: 2}
        assert walk_factors(ctx5, WalkLabel(0, 1, 2, -1)) == {3: 2}
        assert walk_factors(ctx5, WalkLabel(1, 0, 1, -1)) == {4: 1}

    def test_top_socle(self, ctx5):
        assert walk_top_socle(ctx5, WalkLabel(0, 0, 2, 1)) == ({1: 1}, {3: 1})
        assert walk_top_socle(ctx5, WalkLabel(0, 0, 2, -1)) == ({3: 1}, {1: 1})
        # loop walk at the exceptional vertex: one copy on each side
        assert walk_top_socle(ctx5, WalkLabel(0, 1, 2, -1)) == ({3: 1}, {3: 1})

    def test_top_socle_rejects_simple(self, ctx5):
        with pytest.raises(ValueError):
            walk_top_socle(ctx5, WalkLabel(0, 0, 1, -1))

    def test_partition_exhaustive(self, ctx_small):
        ctx = ctx_small
        for i in (0, 1):
            for w in enumerate_canonical_walks(ctx, i):
                if w.s < 2:
                    continue
                top, socle = walk_top_socle(ctx, w)
                merged = dict(top)
                for t, m in socle.items():
                    merged[t] = merged.get(t, 0) + m
                assert merged == walk_factors(ctx, w)


class TestGCartan:
    def test_p5(self, ctx5):
        gc = g_cartan(ctx5, 0)
        assert gc.B == ((2, 1), (1, 3))
        f = Fraction
        assert gc.Gamma == ((f(3, 5), f(-1, 5)), (f(-1, 5), f(2, 5)))

    def test_p3(self, ctx3):
        gc = g_cartan(ctx3, 0)
        assert gc.B == ((3,),)
        assert gc.Gamma == ((Fraction(1, 3),),)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
    def test_exact_inverse_and_symmetry(self, p):
        ctx = PrimeContext(p)
        for i in (0, 1):
            gc = g_cartan(ctx, i)
            prod = exact.mat_mul([list(r) for r in gc.B], [list(r) for r in gc.Gamma])
            assert exact.is_identity(prod)
            n = ctx.half
            assert all(gc.Gamma[r][c] == gc.Gamma[c][r] for r in range(n) for c in range(n))
            assert all(ctx.p % x.denominator == 0 for row in gc.Gamma for x in row)


class TestProjectiveStructure:
    def test_p5(self, ctx5):
        ps = projective_structure(ctx5, 1)
        assert ps.layers == ((1,), (3,), (1,)) and ps.dim == 5
        ps = projective_structure(ctx5, 3)
        assert ps.layers == ((3,), (3, 1), (3,)) and ps.dim == 10
        ps = projective_structure(ctx5, 5)
        assert ps.layers == ((5,),) and ps.dim == 5

    def test_leaf_edge_of_block_one(self, ctx5):
        # V_{p-1}: the would-be V_0 factor does not exist
        ps = projective_structure(ctx5, 4)
        assert ps.layers == ((4,), (2,), (4,)) and ps.dim == 10


class TestHooks:
    def test_p5_block0(self, ctx5):
        hooks = g_hooks(ctx5, 0)
        labels = {str(h.label) for h in hooks}
        assert labels == {"V(1)", "M(0,0,2,-1)", "M(0,0,2,+1)", "M(0,1,2,-1)"}
        dims = sorted(h.dim for h in hooks)
        assert dims == [1, 4, 4, 6]
        by_label = {str(h.label): h for h in hooks}
        assert by_label["M(0,1,2,-1)"].boundary == 1
        assert by_label["M(0,1,2,-1)"].distance == 5 - 2 - 1
        assert by_label["M(0,0,2,-1)"].boundary == 4
        assert by_label["M(0,0,2,-1)"].distance is None

    def test_count_is_p_minus_1(self, ctx_small):
        for i in (0, 1):
            assert len(g_hooks(ctx_small, i)) == ctx_small.p - 1

    def test_p7_block1_distance(self, ctx7):
        by_label = {str(h.label): h for h in g_hooks(ctx7, 1)}
        assert by_label["M(1,1,2,+1)"].distance == 2

    def test_boundary_split(self, ctx_small):
        ctx = ctx_small
        for i in (0, 1):
            hooks = g_hooks(ctx, i)
            ones = sum(1 for h in hooks if h.boundary == 1)
            others = sum(1 for h in hooks if h.boundary == ctx.p - 1)
            assert ones == others == ctx.half


class TestGBoundaries:
    def test_reflected_walk(self, ctx5):
        left, right = g_boundaries(ctx5, WalkLabel(0, 0, 4, -1))
        assert left == WalkLabel(0, 0, 2, -1)
        assert right == GSimpleLabel(1)

    def test_simple_is_own_boundary(self, ctx5):
        left, right = g_boundaries(ctx5, WalkLabel(0, 0, 1, -1))
        assert left == GSimpleLabel(1)
        assert right == WalkLabel(0, 0, 2, -1)

    def test_p7_type_two(self, ctx7):
        # right boundary goes through the reversed walk M(0,2,3,+1)
        left, right = g_boundaries(ctx7, WalkLabel(0, 1, 3, 1))
        assert left == WalkLabel(0, 0, 2, 1)
        assert right == WalkLabel(0, 1, 2, 1)

    def test_hook_sees_itself(self, ctx_small):
        ctx = ctx_small
        for i in (0, 1):
            for h in g_hooks(ctx, i):
                if isinstance(h.label, GSimpleLabel):
                    w = WalkLabel(i, simple_to_edge(ctx, h.label.t)[1] - 1, 1, -1)
                else:
                    w = h.label
                assert h.label in g_boundaries(ctx, w)


class TestCabt:
    def test_p5_values(self, ctx5):
        assert c_abt(ctx5, 0, 3, 1) == 2
        assert c_abt(ctx5, 0, 3, 3) == 2
        assert c_abt(ctx5, 0, 3, 2) == 0  # parity
        assert c_abt(ctx5, 0, 3, 5) == 0  # semisimple block

    def test_p7_value(self, ctx7):
        # V_{2,2} = M(0,1,4,+1) with factors V_5^2 V_3^2
        assert c_abt(ctx7, 2, 2, 5) == 2
        assert c_abt_via_walk(ctx7, 2, 2, 5) == 2

    def test_cross_route_exhaustive(self, ctx_small):
        ctx = ctx_small
        for a in range(ctx.p - 1):
            for b in range(1, ctx.p):
                for t in range(1, ctx.p + 1):
                    assert c_abt(ctx, a, b, t) == c_abt_via_walk(ctx, a, b, t)
