#!/usr/bin/env python3
"""Complete induction/restriction bookkeeping at p = 5.

Induction of U_{a,b} is its Green correspondent plus projectives; the
projective part is pinned down exactly by inverting the block Cartan matrix
over the rationals.  Restriction runs the same machinery in reverse, and
``lift_decomposition`` reconstructs a full SL2-side decomposition from
composition factors plus a restricted decomposition.
"""

from sl2green import (
    PrimeContext,
    ULabel,
    WalkLabel,
    ell,
    g_decomposition_dim,
    ind_u,
    induced_regular_check,
    lift_decomposition,
    res_projective_g,
    res_walk,
)

ctx = PrimeContext(5)

print("-- induction of every U_{a,b} in block 0 --")
for a in (0, 2):
    for b in range(1, 6):
        dec = ind_u(ctx, ULabel(a, b))
        dim = g_decomposition_dim(ctx, dec)
        print(f"Ind U({a},{b}):  {dec}   [dim {dim} = 6*{b}]")

print("\n-- factor multiplicities behind the scenes --")
print("ell(0,5,t) for t=1..5:", [ell(ctx, 0, 5, t) for t in range(1, 6)])

print("\n-- restriction --")
for w in [WalkLabel(0, 0, 4, -1), WalkLabel(0, 1, 2, -1), WalkLabel(1, 0, 1, -1)]:
    print(f"Res {w}:  {res_walk(ctx, w)}")
for t in (1, 2, 3):
    print(f"Res P(V{t}):  {res_projective_g(ctx, t)}")

print("\n-- lifting a decomposition --")
# a module with composition factors V_1^4 V_3^3 restricting to U(0,3) + projectives
lifted = lift_decomposition(ctx, {1: 4, 3: 3}, {ULabel(0, 3): 1})
print("factors {V1:4, V3:3} + restriction {U(0,3):1}  ->", lifted)

print("\n-- the regular module as a sanity identity --")
report = induced_regular_check(ctx)
print(f"sum_a Ind(U_a,p) = sum_t P(Vt)^t holds: {report.ok}")
