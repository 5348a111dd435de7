import pytest
from hypothesis import given, strategies as st

from sl2green import gtree
from sl2green.labels import (
    PrimeContext,
    ULabel,
    WalkLabel,
    canonicalize,
    canonicalize_walk,
    count_nonprojective_per_block,
    enumerate_canonical_walks,
    u_is_projective,
    validate_ulabel,
)


def all_quadruples(ctx):
    p = ctx.p
    for i in (0, 1):
        for l in range((p - 1) // 2):
            for s in range(1, p - l):
                for eps in (-1, 1):
                    yield WalkLabel(i, l, s, eps)


class TestPrimeContext:
    def test_derived_constants(self):
        ctx = PrimeContext(5)
        assert ctx.half == 2 and ctx.vareps == 1
        assert PrimeContext(7).vareps == -1

    def test_rejects_bad_p(self):
        for bad in (1, 2, 4, 9, 15):
            with pytest.raises(ValueError):
                PrimeContext(bad)

    def test_rejects_bad_zeta(self):
        # 4 = 2^2 has order 2 mod 5
        with pytest.raises(ValueError):
            PrimeContext(5, zeta=4)


class TestValidateULabel:
    def test_reduces_a(self, ctx5):
        assert validate_ulabel(ctx5, 6, 2) == ULabel(2, 2)

    def test_projective_flag(self, ctx5):
        u = validate_ulabel(ctx5, 0, 5)
        assert u == ULabel(0, 5) and u_is_projective(ctx5, u)

    def test_rejects_bad_b(self, ctx5):
        with pytest.raises(ValueError):
            validate_ulabel(ctx5, 1, 6)
        with pytest.raises(ValueError):
            validate_ulabel(ctx5, 1, 0)

    @given(a=st.integers(-50, 50), k=st.integers(-5, 5))
    def test_reduction_is_periodic(self, a, k):
        ctx = PrimeContext(11)
        assert validate_ulabel(ctx, a, 3) == validate_ulabel(ctx, a + k * 10, 3)


class TestCanonicalize:
    def test_simple_ignores_eps(self, ctx5):
        assert canonicalize_walk(ctx5, 0, 0, 1, 1) == WalkLabel(0, 0, 1, -1)

    def test_start_equals_end_forces_minus(self, ctx5):
        # l = p-1-l-s = 1: the two signs name one module
        assert canonicalize_walk(ctx5, 1, 1, 2, 1) == WalkLabel(1, 1, 2, -1)
        assert canonicalize_walk(ctx5, 1, 1, 2, -1) == WalkLabel(1, 1, 2, -1)

    def test_type_two_reversal(self, ctx7):
        # start tail shorter than the return tail: store the reversed reading
        assert canonicalize_walk(ctx7, 0, 0, 5, 1) == WalkLabel(0, 1, 5, 1)
        # odd s keeps the sign, even s flips it
        assert canonicalize_walk(ctx7, 0, 0, 4, 1) == WalkLabel(0, 2, 4, -1)

    def test_range_rejections(self, ctx5):
        with pytest.raises(ValueError):
            canonicalize_walk(ctx5, 2, 0, 1, -1)
        with pytest.raises(ValueError):
            canonicalize_walk(ctx5, 0, 2, 1, -1)  # l > (p-3)/2
        with pytest.raises(ValueError):
            canonicalize_walk(ctx5, 0, 1, 4, -1)  # l+s > p-1
        with pytest.raises(ValueError):
            canonicalize_walk(ctx5, 0, 0, 2, 0)

    def test_idempotent_exhaustive(self, ctx_small):
        for w in all_quadruples(ctx_small):
            c = canonicalize(ctx_small, w)
            assert canonicalize(ctx_small, c) == c

    def test_preserves_edges_and_L(self, ctx_small):
        ctx = ctx_small
        for w in all_quadruples(ctx):
            c = canonicalize(ctx, w)
            assert sorted(gtree.expand_walk(ctx, w)[0]) == sorted(gtree.expand_walk(ctx, c)[0])
            assert gtree.L(ctx, w.i, w.l, w.s) == gtree.L(ctx, c.i, c.l, c.s)

    @given(data=st.data())
    def test_idempotent_random_prime(self, data):
        p = data.draw(st.sampled_from([5, 7, 11, 13, 17, 19]))
        ctx = PrimeContext(p)
        i = data.draw(st.sampled_from([0, 1]))
        l = data.draw(st.integers(0, (p - 3) // 2))
        s = data.draw(st.integers(1, p - 1 - l))
        eps = data.draw(st.sampled_from([-1, 1]))
        c = canonicalize_walk(ctx, i, l, s, eps)
        assert canonicalize(ctx, c) == c


class TestCounting:
    @pytest.mark.parametrize("p,count", [(3, 2), (5, 8), (7, 18), (11, 50), (13, 72)])
    def test_count_per_block(self, p, count):
        assert count_nonprojective_per_block(PrimeContext(p)) == count

    def test_enumeration_distinct(self, ctx7):
        walks = enumerate_canonical_walks(ctx7, 0)
        assert len(walks) == len(set(walks)) == 18
